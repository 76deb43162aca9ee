//! Iterated Cheeger deformations of the bi-invariant metric.
//!
//! A chain `su(5) = k₀ ⊇ k₁ ⊋ k₂ ⊋ … ⊋ kₙ` splits su(5) into the
//! inner0-orthogonal blocks `p_i = k_i^⊥ ∩ k_{i−1}` for `i = 1..n+1` (with
//! `k_{n+1} = 0`). The deformed metric is `⟨φ(x), y⟩₀` with
//! `φ(x) = Σ σ_{i−1} x_i`, `σ₀ = 1`, so the chain carries one σ per link.
//! A plane at the identity is flat iff `[φ(x)_{k_j}, φ(y)_{k_j}] = 0` for
//! `j = 0..n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    bracket, inner0, normalized_gram, orthonormalize, subalgebra, SuElement, Subalgebra,
    SubalgebraTag,
};
use crate::tolerance::{TAU_INDEPENDENT, TAU_RANK, TAU_RES};

#[derive(Clone, Debug)]
pub struct CheegerChain {
    links: Vec<Subalgebra>,
    sigmas: Vec<f64>,
    blocks: BlockDecomposition,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Subalgebra>,
}

impl BlockDecomposition {
    pub fn dimensions(&self) -> Vec<usize> {
        self.blocks.iter().map(Subalgebra::dimension).collect()
    }
}

impl CheegerChain {
    /// The undeformed bi-invariant metric.
    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new()).expect("empty chain is valid")
    }

    /// `links[0] ⊇ links[1] ⊋ …`, one σ per link with `1 > σ₁ > σ₂ > … > 0`.
    pub fn new(links: Vec<Subalgebra>, sigmas: Vec<f64>) -> Result<Self> {
        if links.len() != sigmas.len() {
            return Err(Error::BadChain(format!(
                "{} links but {} sigma values",
                links.len(),
                sigmas.len()
            )));
        }
        let mut prev = 1.0;
        for &s in &sigmas {
            if !(s > 0.0 && s < prev) {
                return Err(Error::BadChain(format!(
                    "sigma values must satisfy 1 > σ₁ > … > 0, got {sigmas:?}"
                )));
            }
            prev = s;
        }
        for pair in links.windows(2) {
            let (big, small) = (&pair[0], &pair[1]);
            if small.dimension() >= big.dimension() || !big.contains(small, TAU_RES) {
                return Err(Error::BadChain(format!(
                    "{} is not a proper subalgebra of {}",
                    small.name(),
                    big.name()
                )));
            }
        }
        let blocks = decompose_links(&links)?;
        Ok(Self {
            links,
            sigmas,
            blocks,
        })
    }

    /// Chain of named subalgebras, outermost first.
    pub fn from_tags(tags: &[SubalgebraTag], sigmas: Vec<f64>) -> Result<Self> {
        Self::new(
            tags.iter().map(|&t| subalgebra(t).clone()).collect(),
            sigmas,
        )
    }

    pub fn links(&self) -> &[Subalgebra] {
        &self.links
    }

    pub fn sigmas(&self) -> &[f64] {
        &self.sigmas
    }

    pub fn tags(&self) -> Vec<Option<SubalgebraTag>> {
        self.links.iter().map(|l| l.tag).collect()
    }

    pub fn decomposition(&self) -> &BlockDecomposition {
        &self.blocks
    }

    /// Scale applied to block `p_i` (index `i − 1`): `σ_{i−1}`.
    fn block_scale(&self, block: usize) -> f64 {
        if block == 0 {
            1.0
        } else {
            self.sigmas[block - 1]
        }
    }

    fn apply(&self, x: &SuElement, inverse: bool) -> SuElement {
        if self.links.is_empty() {
            return *x;
        }
        self.blocks
            .blocks
            .iter()
            .enumerate()
            .fold(SuElement::zero(), |acc, (i, p)| {
                let s = self.block_scale(i);
                let s = if inverse { 1.0 / s } else { s };
                acc.add(&p.project(x).scale(s))
            })
    }

    pub fn phi(&self, x: &SuElement) -> SuElement {
        self.apply(x, false)
    }

    pub fn phi_inverse(&self, x: &SuElement) -> SuElement {
        self.apply(x, true)
    }

    /// `⟨φ(x), y⟩₀`
    pub fn metric_inner(&self, x: &SuElement, y: &SuElement) -> f64 {
        inner0(&self.phi(x), y)
    }

    /// Flatness of the plane spanned by `x` and `y`.
    ///
    /// The residuals are computed on an inner0-orthonormal basis of the plane,
    /// one per `j = 0..n` (with `k₀ = su(5)`), so they depend only on the plane.
    pub fn chain_flat(&self, x: &SuElement, y: &SuElement) -> Result<FlatReport> {
        let (u, v) = orthonormal_pair(x, y)?;
        let (pu, pv) = (self.phi(&u), self.phi(&v));
        let mut residuals = vec![bracket(&pu, &pv).norm()];
        for k in &self.links {
            residuals.push(bracket(&k.project(&pu), &k.project(&pv)).norm());
        }
        Ok(FlatReport::new(residuals))
    }
}

fn decompose_links(links: &[Subalgebra]) -> Result<BlockDecomposition> {
    let full = subalgebra(SubalgebraTag::Full);
    let mut blocks = Vec::with_capacity(links.len() + 1);
    let mut outer: &Subalgebra = full;
    for inner in links
        .iter()
        .chain(std::iter::once(&Subalgebra::from_span(&[])))
    {
        let span: Vec<SuElement> = inner.basis.iter().chain(&outer.basis).copied().collect();
        let basis = orthonormalize(&span, TAU_RANK).split_off(inner.dimension());
        if basis.len() + inner.dimension() != outer.dimension() {
            return Err(Error::BadChain(format!(
                "block between {} and {} has dimension {}, expected {}",
                outer.name(),
                inner.name(),
                basis.len(),
                outer.dimension() - inner.dimension()
            )));
        }
        blocks.push(Subalgebra { tag: None, basis });
        outer = inner;
    }
    Ok(BlockDecomposition { blocks })
}

/// Orthogonal decomposition of su(5) induced by the chain.
pub fn decompose(chain: &CheegerChain) -> &BlockDecomposition {
    chain.decomposition()
}

/// Inner0-orthonormal basis of span{x, y}, or `DependentVectors`.
pub fn orthonormal_pair(x: &SuElement, y: &SuElement) -> Result<(SuElement, SuElement)> {
    let gram = normalized_gram(x, y);
    if !(gram > TAU_INDEPENDENT) {
        return Err(Error::DependentVectors { gram });
    }
    let u = x.scale(1.0 / x.norm());
    let w = y.axpy(-inner0(y, &u), &u);
    let w = w.axpy(-inner0(&w, &u), &u);
    Ok((u, w.scale(1.0 / w.norm())))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatReport {
    pub residuals: Vec<f64>,
    pub flat: bool,
}

impl FlatReport {
    fn new(residuals: Vec<f64>) -> Self {
        let flat = residuals.iter().all(|&r| r < TAU_RES);
        Self { residuals, flat }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Lie-algebra form of "L normalizes K": `[l, k] ⊆ k`.
pub fn normalizes(l: &Subalgebra, k: &Subalgebra) -> bool {
    l.basis
        .iter()
        .all(|a| k.basis.iter().all(|b| k.distance(&bracket(a, b)) < TAU_RES))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// Subalgebras whose Cheeger deformations keep the relevant action isometric:
    /// on the right, those normalized by the right factor of h′; on the left,
    /// those normalized by s(u(3) ⊕ u(2)).
    pub fn admissible_tags(&self) -> &'static [SubalgebraTag] {
        use SubalgebraTag::*;
        match self {
            Side::Right => &[Sp2, CircleRight, P2h, Su4, U4, Full],
            Side::Left => &[CircleLeft, Su3, Su2, CircleSu3, CircleSu2, SPrime, S, Full],
        }
    }
}

pub fn admissible_chain(chain: &CheegerChain, side: Side) -> bool {
    let allowed = side.admissible_tags();
    chain
        .tags()
        .iter()
        .all(|t| t.is_some_and(|t| allowed.contains(&t)))
}
