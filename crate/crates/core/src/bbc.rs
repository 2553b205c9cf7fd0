//! BBC sequences of simplicial balls and the cubical spheres built from them.
//!
//! A sequence `T_d, ..., T_{n-1}` consists of pure simplicial `(d-1)`-balls,
//! `T_i` on the vertices `1..=i` (stored 0-based as `0..i`). `T_d` is the full
//! simplex, and for `i > d` every facet of `T_i` contains the apex `i` while
//! the base `B_{i-1}` (facets with the apex removed) lies in the boundary of
//! `T_{i-1}`.
//!
//! The cubical sphere `bbc(T)` lives in the `n`-cube and can be obtained
//! either by repeated mirroring and fissuring ([`build_inductive`]) or by a
//! direct enumeration of its facets by type ([`build_direct`]).

use std::collections::BTreeMap;

use crate::combinatorics::{low_mask, submasks};
use crate::cubical::{complement_in, fissure, mirror_complex, CubicalComplex, FissureMode};
use crate::error::{BbcError, Error, Result};
use crate::face::{SignVector, MAX_AMBIENT};
use crate::simplicial::{pulling_triangulation_cyclic, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BbcSequence {
    d: usize,
    n: usize,
    balls: Vec<SimplicialComplex>,
}

impl BbcSequence {
    /// Number of vertices of each facet of every ball (the balls have dimension `d - 1`).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Ambient dimension of the resulting cubical sphere.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn balls(&self) -> &[SimplicialComplex] {
        &self.balls
    }

    /// `T_i` for `d <= i < n`.
    pub fn ball(&self, i: usize) -> &SimplicialComplex {
        &self.balls[i - self.d]
    }

    /// `B_{i-1}`, the base of the cone `T_i`, for `d < i < n`.
    pub fn base(&self, i: usize) -> Result<SimplicialComplex> {
        let apex = 1u64 << (i - 1);
        SimplicialComplex::from_masks(i - 1, self.ball(i).facet_masks().iter().map(|m| m & !apex))
    }

    /// Whether every boundary sphere `∂T_i` is simplicially neighborly.
    pub fn is_neighborly(&self) -> Result<bool> {
        let k = (self.d - 1) / 2;
        for t in &self.balls {
            if !t.boundary()?.is_k_neighborly(k) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks the BBC conditions and returns the validated sequence.
///
/// `balls[j]` is `T_{d+j}`; `n = d + balls.len()`. The first violation is
/// reported with the index `i` of the offending `T_i`.
pub fn validate_bbc(balls: Vec<SimplicialComplex>, d: usize) -> Result<BbcSequence> {
    let n = d + balls.len();
    if d < 3 || balls.is_empty() || n > MAX_AMBIENT {
        return Err(BbcError::BadParameters { d, n }.into());
    }
    let mut prev_boundary: Option<SimplicialComplex> = None;
    for (j, t) in balls.iter().enumerate() {
        let i = d + j;
        if t.n_vertices() != i || t.used_vertices() & !low_mask(i) != 0 {
            return Err(BbcError::WrongVertexRange(i).into());
        }
        if t.pure_facet_size() != Some(d) {
            return Err(BbcError::NotPure(i).into());
        }
        if let Some(boundary) = &prev_boundary {
            let apex = 1u64 << (i - 1);
            if t.facet_masks().iter().any(|m| m & apex == 0) {
                return Err(BbcError::ApexMissing(i).into());
            }
            if t.facet_masks().iter().any(|m| !boundary.is_facet(m & !apex)) {
                return Err(BbcError::BNotInBoundary(i).into());
            }
        }
        // T_d is pure with d-vertex facets inside d vertices: the full simplex.
        prev_boundary = Some(t.boundary()?);
    }
    Ok(BbcSequence { d, n, balls })
}

/// The sequence of pulling triangulations of the cyclic `(d-1)`-polytopes
/// `C(d-1, i)` with respect to their last vertex, `i = d, ..., n-1`.
pub fn bbc_from_cyclic(d: usize, n: usize) -> Result<BbcSequence> {
    if d < 3 || n <= d {
        return Err(BbcError::BadParameters { d, n }.into());
    }
    let balls = (d..n)
        .map(|i| pulling_triangulation_cyclic(d - 1, i))
        .collect::<Result<Vec<_>>>()?;
    validate_bbc(balls, d).map_err(|e| Error::Internal(format!("cyclic pulling sequence rejected: {e}")))
}

/// Start from the boundary of the `(d+1)`-cube and fissure along the mirror
/// complex of `T_{k-1}` for `k = d+2, ..., n`.
pub fn build_inductive(seq: &BbcSequence) -> Result<CubicalComplex> {
    let d = seq.d;
    let mut sphere = CubicalComplex::cube_boundary(d + 1)?;
    for k in d + 2..=seq.n {
        let lifted = mirror_complex(seq.ball(k - 1))?;
        if let Some(f) = lifted.facets().iter().find(|f| !sphere.is_facet(f)) {
            return Err(Error::Internal(format!(
                "mirror of T_{} is not a subcomplex of S_{}: {f}",
                k - 1,
                k - 1
            )));
        }
        let rest = complement_in(&sphere, &lifted)?;
        sphere = fissure(&sphere, &lifted, &rest, FissureMode::Strict)?;
    }
    Ok(sphere)
}

/// Enumerates the facets of `bbc(T)` directly, by the number `t` of trailing
/// non-zero entries:
///
/// * `t = 0`: `α_n = 0` and `|α_1..α_{n-1}|` is a facet of `∂T_{n-1}`;
/// * `0 < t < n-d`: `α = (β, 0, σ, -1, ..., -1)` with `|β|` a facet of
///   `∂T_{n-t-1}` and `σ = +1` exactly when `|(β, 0)|` is a facet of `T_{n-t}`;
/// * `t = n-d`: `α = (0, ..., 0, σ, -1, ..., -1)`.
pub fn build_direct(seq: &BbcSequence) -> Result<CubicalComplex> {
    let (d, n) = (seq.d, seq.n);
    if d <= 2 {
        return Err(BbcError::BadParameters { d, n }.into());
    }
    let boundaries = seq
        .balls
        .iter()
        .map(SimplicialComplex::boundary)
        .collect::<Result<Vec<_>>>()?;
    let boundary = |i: usize| &boundaries[i - d];
    let minus_tail = |from: usize| low_mask(n) & !low_mask(from);

    let mut facets = Vec::new();
    // type 0
    for &r in boundary(n - 1).facet_masks() {
        let support = !r & low_mask(n - 1);
        facets.extend(submasks(support).map(|neg| SignVector::from_masks_unchecked(n, support, neg)));
    }
    // 0 < t < n - d
    for t in 1..n - d {
        let m = n - t - 1;
        let next = seq.ball(m + 1);
        let tail = minus_tail(m + 2);
        let sigma_bit = 1u64 << (m + 1);
        for &r in boundary(m).facet_masks() {
            let beta_support = !r & low_mask(m);
            let sigma_negative = !next.is_facet(r | 1 << m);
            let support = beta_support | sigma_bit | tail;
            let fixed_neg = tail | if sigma_negative { sigma_bit } else { 0 };
            facets.extend(
                submasks(beta_support).map(|neg| SignVector::from_masks_unchecked(n, support, neg | fixed_neg)),
            );
        }
    }
    // t = n - d
    let tail = minus_tail(d + 1);
    let sigma_bit = 1u64 << d;
    for sigma_neg in [0, sigma_bit] {
        facets.push(SignVector::from_masks_unchecked(n, sigma_bit | tail, tail | sigma_neg));
    }
    CubicalComplex::from_facets(n, facets)
}

/// Number of trailing non-zero entries of a facet with `d` zeros.
pub fn facet_type(alpha: &SignVector, d: usize) -> Result<usize> {
    if alpha.dim() != d {
        return Err(Error::InvalidParameters(format!(
            "{alpha} does not have exactly {d} zeros"
        )));
    }
    Ok(alpha.trailing_nonzeros())
}

/// Facet counts of a pure `d`-complex grouped by [`facet_type`].
pub fn type_counts(c: &CubicalComplex, d: usize) -> Result<BTreeMap<usize, usize>> {
    let mut counts = BTreeMap::new();
    for f in c.facets() {
        *counts.entry(facet_type(f, d)?).or_default() += 1;
    }
    Ok(counts)
}
