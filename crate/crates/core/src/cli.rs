//! Command-line front end.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bazaikin::{
    canonical_form, classify_curvature, cohom_two, is_effectively_free, BazaikinTuple,
    CohomTwoParams, FrameCoord,
};
use crate::certify::{certify_point, scan_region, write_scan_csv};
use crate::error::{Error, Result};
use crate::linalg::{GroupElement, Mat5};
use crate::selftest;

#[derive(Debug, Parser)]
#[command(
    name = "bcl",
    version,
    about = "Zero-curvature certificates for Wilking metrics on Bazaikin spaces"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output path; "-" or absent writes to standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for the randomized self-test suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Residual tolerance for the self-test suites.
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = positive_f64)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Freeness, cohomogeneity-two pattern and curvature case of a tuple.
    Classify {
        /// Five odd integers, comma separated, e.g. 1,1,1,-1,-3.
        #[arg(long, allow_hyphen_values = true)]
        q: BazaikinTuple,
    },
    /// Certificate scan over the open (θ, α) grid, written as CSV.
    Scan {
        #[command(flatten)]
        params: ParamArgs,
        /// Points per axis.
        #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u32).range(2..))]
        grid: u32,
    },
    /// Certificate at a single point, written as JSON.
    Certify {
        #[command(flatten)]
        params: ParamArgs,
        /// Radians.
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        /// Radians.
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Reduce an SU(5) matrix (JSON, "-" for stdin) into the fundamental domain.
    Canonical { input: PathBuf },
    /// Run the invariant suites.
    Selftest,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub q1: i64,
    /// 1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: i64,
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be positive, got {v}"))
    }
}

#[derive(Serialize)]
struct ClassifyJson {
    q: [i64; 5],
    free: bool,
    cohomogeneity_two: Option<CohomTwoParams>,
    case: &'static str,
}

#[derive(Serialize)]
struct CanonicalJson {
    theta: f64,
    alpha: f64,
    residual: f64,
    s: Mat5,
    p: Mat5,
}

fn open_out<'a>(out: &Option<PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    match out {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufWriter::new(File::create(p)?))),
        _ => Ok(Box::new(stdout)),
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut s)?;
    } else {
        File::open(path)?.read_to_string(&mut s)?;
    }
    Ok(s)
}

fn execute(cfg: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<bool> {
    match &cfg.command {
        Command::Classify { q } => {
            let report = ClassifyJson {
                q: q.q(),
                free: is_effectively_free(q),
                cohomogeneity_two: cohom_two(q),
                case: classify_curvature(q).name(),
            };
            let mut w = open_out(&cfg.out, stdout)?;
            writeln!(w, "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Command::Scan { params, grid } => {
            let rows = scan_region(params.q1, params.omega, *grid as usize)?;
            let certified = rows.iter().filter(|r| r.certified).count();
            let mut w = open_out(&cfg.out, stdout)?;
            write_scan_csv(&rows, &mut w)?;
            w.flush()?;
            writeln!(stderr, "{certified} of {} points certified", rows.len())?;
        }
        Command::Certify {
            params,
            theta,
            alpha,
        } => {
            let c = FrameCoord::new(*theta, *alpha)?;
            let cert = certify_point(params.q1, params.omega, &c)?;
            let mut w = open_out(&cfg.out, stdout)?;
            writeln!(w, "{}", cert.to_json()?)?;
        }
        Command::Canonical { input } => {
            let m: Mat5 = serde_json::from_str(&read_input(input)?)?;
            let cf = canonical_form(&GroupElement::new(m)?)?;
            let report = CanonicalJson {
                theta: cf.coord.theta,
                alpha: cf.coord.alpha,
                residual: cf.residual,
                s: *cf.s.mat(),
                p: *cf.p.mat(),
            };
            let mut w = open_out(&cfg.out, stdout)?;
            writeln!(w, "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Command::Selftest => {
            let results = selftest::run_all(cfg.seed, cfg.tol);
            let mut w = open_out(&cfg.out, stdout)?;
            for r in &results {
                writeln!(w, "{r}")?;
            }
            return Ok(results.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

/// Parse `argv` (including the program name) and run. Returns the exit code:
/// 0 on success, 1 on a domain error or failed self-test, 2 on a usage error.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match execute(&cfg, stdout, stderr) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}: {e}", e.name());
            match e {
                Error::Io(_) => 2,
                _ => 1,
            }
        }
    }
}
