//! Grid scans of the certificate over the open square `(0, π/2)²`.

use std::f64::consts::FRAC_PI_2;
use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_xy, equation_residuals, solve_params};
use crate::bazaikin::{frame_matrix, h_prime_basis, CohomTwoParams, FrameCoord};
use crate::error::{Error, Result};
use crate::tolerance::TAU_RES;
use crate::wilking::main_metric_flat;

/// One grid point. Values that could not be evaluated are NaN.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub q1: i64,
    pub omega: i64,
    pub theta: f64,
    pub alpha: f64,
    pub lambda: f64,
    pub z1: f64,
    pub im_x12: f64,
    pub gap: f64,
    pub cond1_res: f64,
    pub cond2_res: f64,
    pub cond3_res: f64,
    pub certified: bool,
}

impl ScanRow {
    /// Largest flatness residual, NaN if the plane was never formed.
    pub fn max_residual(&self) -> f64 {
        let r = [self.cond1_res, self.cond2_res, self.cond3_res];
        if r.iter().any(|v| v.is_nan()) {
            f64::NAN
        } else {
            r.into_iter().fold(0.0, f64::max)
        }
    }

    pub fn point(&self) -> FrameCoord {
        FrameCoord {
            theta: self.theta,
            alpha: self.alpha,
        }
    }
}

/// Interior grid `θ_i = (i+1)·(π/2)/(n+1)`, `i = 0..n`, θ-major.
pub fn scan_grid(grid_n: usize) -> Vec<FrameCoord> {
    let step = FRAC_PI_2 / (grid_n as f64 + 1.0);
    (0..grid_n)
        .flat_map(|i| {
            (0..grid_n).map(move |j| FrameCoord {
                theta: (i + 1) as f64 * step,
                alpha: (j + 1) as f64 * step,
            })
        })
        .collect()
}

/// Evaluate one point. Never fails: singular or non-real points are
/// recorded as uncertified.
pub fn scan_point(q1: i64, omega: i64, c: &FrameCoord) -> ScanRow {
    let mut row = ScanRow {
        q1,
        omega,
        theta: c.theta,
        alpha: c.alpha,
        lambda: f64::NAN,
        z1: f64::NAN,
        im_x12: f64::NAN,
        gap: f64::NAN,
        cond1_res: f64::NAN,
        cond2_res: f64::NAN,
        cond3_res: f64::NAN,
        certified: false,
    };
    let Ok(p) = solve_params(q1, omega, c) else {
        return row;
    };
    row.lambda = p.lambda;
    row.z1 = p.z1;
    row.im_x12 = p.im_x12;
    row.gap = p.gap;
    let Ok((x, y)) = build_xy(&p) else {
        return row;
    };
    let (Ok(h), Ok(a)) = (CohomTwoParams::new(q1, omega), frame_matrix(c)) else {
        return row;
    };
    let Ok(report) = main_metric_flat(&a.inverse(), &h_prime_basis(&h), &x, &y) else {
        return row;
    };
    row.cond1_res = report.cond1_res;
    row.cond2_res = report.cond2_res;
    row.cond3_res = report.cond3_res;
    let equations = equation_residuals(q1, omega, c, &p).max_applicable();
    row.certified = report.flat && equations < TAU_RES && p.gap > 0.0;
    row
}

/// Worker count from `BCL_THREADS`, else rayon's default.
pub fn thread_count() -> Option<usize> {
    std::env::var("BCL_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
}

/// Scan with `BCL_THREADS` workers (or the rayon default).
pub fn scan_region(q1: i64, omega: i64, grid_n: usize) -> Result<Vec<ScanRow>> {
    scan_region_with_threads(q1, omega, grid_n, thread_count())
}

/// Rows are ordered by (θ index, α index) whatever the worker count.
pub fn scan_region_with_threads(
    q1: i64,
    omega: i64,
    grid_n: usize,
    threads: Option<usize>,
) -> Result<Vec<ScanRow>> {
    if grid_n < 2 {
        return Err(Error::OutOfRange(format!(
            "grid must be at least 2, got {grid_n}"
        )));
    }
    CohomTwoParams::new(q1, omega)?;
    let grid = scan_grid(grid_n);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build()?;
    Ok(pool.install(|| grid.par_iter().map(|c| scan_point(q1, omega, c)).collect()))
}

pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_scan_csv<R: Read>(input: R) -> Result<Vec<ScanRow>> {
    let mut r = csv::Reader::from_reader(input);
    let rows = r
        .deserialize()
        .collect::<std::result::Result<Vec<ScanRow>, _>>()?;
    Ok(rows)
}

/// Edge-connected components of certified rows, as row indices, for rows laid
/// out as by [`scan_grid`]. Largest first.
pub fn certified_clusters(rows: &[ScanRow], grid_n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; rows.len()];
    let mut clusters = Vec::new();
    for start in 0..rows.len() {
        if seen[start] || !rows[start].certified {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut cluster = Vec::new();
        while let Some(k) = stack.pop() {
            cluster.push(k);
            let (i, j) = (k / grid_n, k % grid_n);
            let mut nbrs = Vec::with_capacity(4);
            if i > 0 {
                nbrs.push(k - grid_n);
            }
            if i + 1 < grid_n {
                nbrs.push(k + grid_n);
            }
            if j > 0 {
                nbrs.push(k - 1);
            }
            if j + 1 < grid_n {
                nbrs.push(k + 1);
            }
            for nb in nbrs {
                if nb < rows.len() && !seen[nb] && rows[nb].certified {
                    seen[nb] = true;
                    stack.push(nb);
                }
            }
        }
        cluster.sort_unstable();
        clusters.push(cluster);
    }
    clusters.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    clusters
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn grid_is_open_and_ordered() {
        let g = scan_grid(3);
        assert_eq!(g.len(), 9);
        assert!((g[0].theta - FRAC_PI_2 / 4.0).abs() < 1e-15);
        assert!((g[1].alpha - FRAC_PI_2 / 2.0).abs() < 1e-15);
        assert_eq!(g[1].theta, g[0].theta);
        assert!(g.iter().all(|c| c.theta > 0.0 && c.theta < FRAC_PI_2));
    }

    #[test]
    fn small_scan_contains_exact_point() {
        // n = 3 puts (π/4, π/4) at the centre
        let rows = scan_region_with_threads(1, -1, 3, Some(2)).unwrap();
        assert!((rows[4].theta - FRAC_PI_4).abs() < 1e-15);
        assert!(rows[4].certified);
        assert!((rows[4].gap - 1.0).abs() < 1e-12);
        for r in &rows {
            assert!(!r.certified || r.gap > 0.0);
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(matches!(scan_region(3, 1, 1), Err(Error::OutOfRange(_))));
        assert!(scan_region(1, 1, 8).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let rows = scan_region_with_threads(3, -1, 6, Some(1)).unwrap();
        let mut buf = Vec::new();
        write_scan_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(
            "q1,omega,theta,alpha,lambda,z1,im_x12,gap,cond1_res,cond2_res,cond3_res,certified\n"
        ));
        let back = read_scan_csv(buf.as_slice()).unwrap();
        assert_eq!(back.len(), rows.len());
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(a.certified, b.certified);
            assert!(a.gap == b.gap || (a.gap.is_nan() && b.gap.is_nan()));
            assert!(a.cond2_res == b.cond2_res || (a.cond2_res.is_nan() && b.cond2_res.is_nan()));
        }
    }

    #[test]
    fn clusters() {
        let mk = |certified| ScanRow {
            q1: 3,
            omega: 1,
            theta: 0.0,
            alpha: 0.0,
            lambda: 0.0,
            z1: 0.0,
            im_x12: 0.0,
            gap: 1.0,
            cond1_res: 0.0,
            cond2_res: 0.0,
            cond3_res: 0.0,
            certified,
        };
        // 3×3, certified: (0,0),(0,1),(2,2); (0,2) is not adjacent to (1,0)
        let pattern = [true, true, false, false, false, false, false, false, true];
        let rows: Vec<ScanRow> = pattern.iter().map(|&c| mk(c)).collect();
        assert_eq!(certified_clusters(&rows, 3), vec![vec![0, 1], vec![8]]);
        let pattern = [false, false, true, true, false, false, false, false, false];
        let rows: Vec<ScanRow> = pattern.iter().map(|&c| mk(c)).collect();
        assert_eq!(certified_clusters(&rows, 3).len(), 2);
    }
}
