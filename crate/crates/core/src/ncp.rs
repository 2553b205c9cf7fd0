//! Neighborly cubical polytopes: facets by the cubical Gale evenness
//! condition, the reversal map to BBC spheres, and closed-form facet counts.
//!
//! All counts are exact integers; no floating point is used here.

use crate::combinatorics::{binomial, k_subsets, low_mask, submasks};
use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::face::{SignVector, MAX_AMBIENT};
use crate::simplicial::is_gale_even;

/// Parameters of the neighborly cubical `(d+1)`-polytope with `2^n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NcpParams {
    n: usize,
    d: usize,
}

impl NcpParams {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d < 3 || n <= d || n > MAX_AMBIENT {
            return Err(Error::InvalidParameters(format!(
                "need n > d >= 3 (got n = {n}, d = {d})"
            )));
        }
        Ok(Self { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

/// Alternating prefix `-1, +1, -1, ...` of length `len`, as (support, negative) masks.
fn alternating_prefix(len: usize) -> (u64, u64) {
    let support = low_mask(len);
    let negative = support & 0x5555_5555_5555_5555;
    (support, negative)
}

/// Number of leading members of `members` among `len` positions.
fn leading_members(members: u64, len: usize) -> usize {
    (members.trailing_ones() as usize).min(len)
}

/// Facets of the boundary of the neighborly cubical polytope, classified by
/// the number `t` of leading non-zero entries:
///
/// * `t = 0`: `α_1 = 0` and the zero set of `α` is Gale even;
/// * `0 < t < n-d`: `α = (-1, +1, ..., σ, 0, γ)` with `σ` at position `t`,
///   `|γ|` Gale even, and `σ = (-1)^(t+1)` exactly when `γ` starts with an
///   even number of zeros;
/// * `t = n-d`: `α = (-1, +1, ..., σ, 0, ..., 0)`.
pub fn cge_facets(p: NcpParams) -> Result<CubicalComplex> {
    let (n, d) = (p.n, p.d);
    let full = low_mask(n);
    let mut facets = Vec::new();

    // t = 0
    for zeros in k_subsets(n, d) {
        if zeros & 1 == 1 && is_gale_even(zeros, n) {
            let support = !zeros & full;
            facets.extend(submasks(support).map(|neg| SignVector::from_masks_unchecked(n, support, neg)));
        }
    }

    // 0 < t < n - d
    for t in 1..n - d {
        let (prefix, prefix_neg) = alternating_prefix(t - 1);
        let sigma_bit = 1u64 << (t - 1);
        let rest = n - t - 1;
        let shift = t + 1;
        // (-1)^(t+1) is -1 for even t
        let sigma_even_is_negative = t % 2 == 0;
        for gamma_zeros in k_subsets(rest, d - 1) {
            if !is_gale_even(gamma_zeros, rest) {
                continue;
            }
            let even_lead = leading_members(gamma_zeros, rest).is_multiple_of(2);
            let sigma_negative = if even_lead {
                sigma_even_is_negative
            } else {
                !sigma_even_is_negative
            };
            let gamma_support = (!gamma_zeros & low_mask(rest)) << shift;
            let support = prefix | sigma_bit | gamma_support;
            let fixed_neg = prefix_neg | if sigma_negative { sigma_bit } else { 0 };
            facets.extend(
                submasks(gamma_support).map(|neg| SignVector::from_masks_unchecked(n, support, neg | fixed_neg)),
            );
        }
    }

    // t = n - d
    let t = n - d;
    let (prefix, prefix_neg) = alternating_prefix(t - 1);
    let sigma_bit = 1u64 << (t - 1);
    for sigma_neg in [0, sigma_bit] {
        facets.push(SignVector::from_masks_unchecked(
            n,
            prefix | sigma_bit,
            prefix_neg | sigma_neg,
        ));
    }
    CubicalComplex::from_facets(n, facets)
}

/// Reverses the entries and negates every second one:
/// `Φ(α)_j = (-1)^(j+1) α_(n+1-j)` in 1-based indices.
pub fn phi_map(alpha: &SignVector) -> SignVector {
    let n = alpha.ambient_dim();
    // 1-based even positions are odd 0-based bits
    let even_positions = low_mask(n) & 0xAAAA_AAAA_AAAA_AAAA;
    alpha.reversed().flip(even_positions)
}

/// Applies [`phi_map`] to every facet.
pub fn phi_complex(c: &CubicalComplex) -> Result<CubicalComplex> {
    c.map_facets(phi_map)
}

/// Number of leading non-zero entries (the type of a facet in the cubical
/// Gale evenness classification).
pub fn leading_type(alpha: &SignVector) -> usize {
    alpha.leading_nonzeros()
}

/// Number of facets of a neighborly simplicial `(d-2)`-sphere on `i` vertices
/// for odd `d`:
/// `s(i, d-2) = 2i / (2i - d + 1) * C(i - (d-1)/2, i + 1 - d)`.
pub fn neighborly_sphere_facets(i: usize, d: usize) -> Result<u128> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "closed form needs odd d >= 3 (got {d})"
        )));
    }
    if i < d {
        return Err(Error::InvalidParameters(format!("need i >= d (got i = {i}, d = {d})")));
    }
    let (i, d) = (i as u128, d as u128);
    let numerator = 2 * i * binomial((i - (d - 1) / 2) as u64, (i + 1 - d) as u64);
    let denominator = 2 * i - d + 1;
    if !numerator.is_multiple_of(denominator) {
        return Err(Error::Internal(format!("s({i}, {}) is not integral", d - 2)));
    }
    Ok(numerator / denominator)
}

/// Number of facets of a neighborly cubical `d`-sphere in the `n`-cube, odd `d`:
/// `f(n, d) = 2(d+1) + Σ_{k=d+2}^{n} (2k-2)/(2k-1-d) C(k-(d+1)/2, k-d) 2^(k-d)`.
pub fn ncp_facet_count(n: usize, d: usize) -> Result<u128> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "closed form needs odd d >= 3 (got {d})"
        )));
    }
    if n <= d || n > MAX_AMBIENT {
        return Err(Error::InvalidParameters(format!("need n > d (got n = {n}, d = {d})")));
    }
    let mut total = 2 * (d as u128 + 1);
    for k in d + 2..=n {
        let (kk, dd) = (k as u128, d as u128);
        let numerator = (2 * kk - 2) * binomial((kk - dd.div_ceil(2)) as u64, (kk - dd) as u64);
        let denominator = 2 * kk - 1 - dd;
        if !numerator.is_multiple_of(denominator) {
            return Err(Error::Internal(format!(
                "summand k = {k} of f({n}, {d}) is not integral"
            )));
        }
        total += (numerator / denominator) << (k - d);
    }
    Ok(total)
}
