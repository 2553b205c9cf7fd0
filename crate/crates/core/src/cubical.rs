//! Subcomplexes of the `n`-cube given by facet sign vectors.

use std::collections::{HashMap, HashSet};

use log::warn;
use serde::Serialize;

use crate::combinatorics::{binomial, low_mask, submasks};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::face::{SignVector, MAX_AMBIENT};
use crate::fvector::FVector;
use crate::simplicial::SimplicialComplex;

/// Upper bound on the number of facets a mirror complex may expand to.
pub const MIRROR_FACET_CAP: u128 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicalComplex {
    ambient_dim: usize,
    facets: Vec<SignVector>,
}

impl CubicalComplex {
    /// Builds a complex from faces of the `n`-cube. Faces contained in other
    /// faces are dropped with a warning.
    pub fn from_facets(ambient_dim: usize, faces: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        if ambient_dim == 0 || ambient_dim > MAX_AMBIENT {
            return Err(Error::AmbientOutOfRange(ambient_dim));
        }
        let mut facets: Vec<SignVector> = Vec::new();
        for f in faces {
            if f.ambient_dim() != ambient_dim {
                return Err(Error::AmbientMismatch {
                    left: ambient_dim,
                    right: f.ambient_dim(),
                });
            }
            facets.push(f);
        }
        facets.sort_unstable();
        facets.dedup();
        let same_dim = facets.windows(2).all(|w| w[0].dim() == w[1].dim());
        if !same_dim {
            let before = facets.len();
            let mut by_dim = facets.clone();
            by_dim.sort_by_key(|f| std::cmp::Reverse(f.dim()));
            let mut kept: Vec<SignVector> = Vec::new();
            for f in by_dim {
                if !kept.iter().any(|k| f.le_unchecked(k)) {
                    kept.push(f);
                }
            }
            kept.sort_unstable();
            if kept.len() != before {
                warn!("dropped {} non-maximal cube faces", before - kept.len());
            }
            facets = kept;
        }
        Ok(Self { ambient_dim, facets })
    }

    /// The boundary of the `n`-cube: all vectors with exactly one non-zero entry.
    pub fn cube_boundary(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_AMBIENT {
            return Err(Error::AmbientOutOfRange(n));
        }
        let facets = (0..n).flat_map(|i| [0u64, 1 << i].map(|neg| SignVector::from_masks_unchecked(n, 1 << i, neg)));
        Self::from_facets(n, facets)
    }

    /// The `n`-cube as a single facet.
    pub fn solid_cube(n: usize) -> Result<Self> {
        Self::from_facets(n, [SignVector::cube(n)?])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn facets(&self) -> &[SignVector] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_facet(&self, f: &SignVector) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    pub fn pure_dim(&self) -> Option<usize> {
        let d = self.facets.first()?.dim();
        self.facets.iter().all(|f| f.dim() == d).then_some(d)
    }

    /// Whether `g` is a face of some facet.
    pub fn contains_face(&self, g: &SignVector) -> bool {
        g.ambient_dim() == self.ambient_dim && self.facets.iter().any(|f| g.le_unchecked(f))
    }

    /// Facets that contain `g`.
    pub fn facets_containing<'a>(&'a self, g: &'a SignVector) -> impl Iterator<Item = &'a SignVector> + 'a {
        self.facets.iter().filter(move |f| g.le_unchecked(f))
    }

    /// The distinct `k`-faces.
    pub fn faces_of_dim(&self, k: usize) -> HashSet<SignVector> {
        let mut out = HashSet::new();
        for f in &self.facets {
            if let Ok(subs) = f.subfaces(k) {
                out.extend(subs);
            }
        }
        out
    }

    /// Exact face counts by closure enumeration, `O(|facets| 3^d)` face visits.
    pub fn f_vector(&self) -> FVector {
        let top = match self.facets.iter().map(|f| f.dim()).max() {
            Some(t) => t,
            None => return FVector::default(),
        };
        let mut seen: HashSet<SignVector> = HashSet::new();
        let mut counts = vec![0u64; top + 1];
        for f in &self.facets {
            for g in f.all_subfaces() {
                if seen.insert(g) {
                    counts[g.dim()] += 1;
                }
            }
        }
        FVector(counts)
    }

    /// Codimension-one faces lying in exactly one facet.
    pub fn boundary(&self) -> Result<CubicalComplex> {
        if self.facets.is_empty() {
            return Ok(self.clone());
        }
        if self.pure_dim().ok_or(Error::NotPure)? == 0 {
            return Err(Error::InvalidParameters("boundary of a 0-dimensional complex".into()));
        }
        let mut count: HashMap<SignVector, u32> = HashMap::new();
        for f in &self.facets {
            for r in f.ridges() {
                *count.entry(r).or_default() += 1;
            }
        }
        Self::from_facets(
            self.ambient_dim,
            count.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r),
        )
    }

    /// Has the `(k-1)`-skeleton of the ambient cube: all
    /// `C(n, k-1) 2^(n-k+1)` faces with `k - 1` zeros are present.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let j = k - 1;
        if j > self.ambient_dim {
            return false;
        }
        let expected = binomial(self.ambient_dim as u64, j as u64) << (self.ambient_dim - j);
        self.faces_of_dim(j).len() as u128 == expected
    }

    /// Largest `k` for which the complex is cubically `k`-neighborly.
    pub fn neighborliness(&self) -> usize {
        let fv = self.f_vector();
        let n = self.ambient_dim;
        let mut k = 0;
        while k <= n {
            let expected = binomial(n as u64, k as u64) << (n - k);
            if u128::from(fv.get(k)) != expected {
                break;
            }
            k += 1;
        }
        k
    }

    /// Image under a sign flip of every facet.
    pub fn flip_all(&self, negative: u64) -> CubicalComplex {
        let mut facets: Vec<SignVector> = self.facets.iter().map(|f| f.flip(negative)).collect();
        facets.sort_unstable();
        Self {
            ambient_dim: self.ambient_dim,
            facets,
        }
    }

    /// Applies `f` to every facet and rebuilds the complex.
    pub fn map_facets(&self, f: impl Fn(&SignVector) -> SignVector) -> Result<CubicalComplex> {
        Self::from_facets(self.ambient_dim, self.facets.iter().map(f))
    }

    /// JSON export: ambient dimension, facets and f-vector.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export<'a> {
            ambient_dim: usize,
            facets: Vec<String>,
            f_vector: &'a FVector,
        }
        let fv = self.f_vector();
        serde_json::to_value(Export {
            ambient_dim: self.ambient_dim,
            facets: self.facets.iter().map(|f| f.to_string()).collect(),
            f_vector: &fv,
        })
        .expect("serializable")
    }
}

/// All sign vectors whose absolute value is the complement encoding of a
/// facet of `delta`.
pub fn mirror_complex(delta: &SimplicialComplex) -> Result<CubicalComplex> {
    let n = delta.n_vertices();
    if n == 0 || n > MAX_AMBIENT {
        return Err(Error::AmbientOutOfRange(n));
    }
    if delta.is_void() {
        return Err(Error::EmptyComplex);
    }
    let total: u128 = delta
        .facet_masks()
        .iter()
        .map(|m| 1u128 << (n - m.count_ones() as usize))
        .sum();
    if total > MIRROR_FACET_CAP {
        return Err(Error::TooLarge(format!("mirror complex would have {total} facets")));
    }
    let full = low_mask(n);
    let mut facets = Vec::with_capacity(total as usize);
    for &m in delta.facet_masks() {
        let support = !m & full;
        facets.extend(submasks(support).map(|neg| SignVector::from_masks_unchecked(n, support, neg)));
    }
    CubicalComplex::from_facets(n, facets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FissureMode {
    /// `C1` and `C2` must partition the facets of `C`.
    #[default]
    Strict,
    /// `C1` and `C2` only need to consist of facets of `C`.
    Relaxed,
}

/// Cubical fissure of `c` between `c1` and `c2`.
///
/// Facets of `c1` get a trailing `+1`, facets of `c2` a trailing `-1`, and
/// every codimension-one face shared by the two parts is extended by a
/// trailing `0`.
pub fn fissure(
    c: &CubicalComplex,
    c1: &CubicalComplex,
    c2: &CubicalComplex,
    mode: FissureMode,
) -> Result<CubicalComplex> {
    let n = c.ambient_dim();
    for part in [c1, c2] {
        if part.ambient_dim() != n {
            return Err(Error::AmbientMismatch {
                left: n,
                right: part.ambient_dim(),
            });
        }
    }
    let d = c.pure_dim().ok_or(Error::NotPure)?;
    if d == 0 {
        return Err(Error::Fissure("complex must have positive dimension".into()));
    }
    if n + 1 > MAX_AMBIENT {
        return Err(Error::AmbientOutOfRange(n + 1));
    }
    for f in c1.facets().iter().chain(c2.facets()) {
        if !c.is_facet(f) {
            return Err(Error::Fissure(format!("{f} is not a facet of the complex")));
        }
    }
    if mode == FissureMode::Strict {
        if let Some(f) = c1.facets().iter().find(|f| c2.is_facet(f)) {
            return Err(Error::Fissure(format!("parts share the facet {f}")));
        }
        if c1.num_facets() + c2.num_facets() != c.num_facets() {
            return Err(Error::Fissure("parts do not cover the complex".into()));
        }
    }
    if c1.is_empty() || c2.is_empty() {
        warn!("fissure with an empty part");
    }

    let ridges = |part: &CubicalComplex| -> HashSet<SignVector> {
        part.facets()
            .iter()
            .flat_map(|f| f.ridges().collect::<Vec<_>>())
            .collect()
    };
    let r1 = ridges(c1);
    let r2 = ridges(c2);
    let mut common: Vec<SignVector> = r1.intersection(&r2).copied().collect();
    common.sort_unstable();
    if common.is_empty() && !c1.is_empty() && !c2.is_empty() {
        warn!("fissure parts have no common ridge");
    }

    let lift = |f: &SignVector, e: i8| f.push(e).expect("ambient checked above");
    let mut facets = Vec::with_capacity(c1.num_facets() + c2.num_facets() + common.len());
    facets.extend(c1.facets().iter().map(|f| lift(f, 1)));
    facets.extend(c2.facets().iter().map(|f| lift(f, -1)));
    facets.extend(common.iter().map(|r| lift(r, 0)));
    CubicalComplex::from_facets(n + 1, facets)
}

/// Facets of `c` not in `part`.
pub fn complement_in(c: &CubicalComplex, part: &CubicalComplex) -> Result<CubicalComplex> {
    CubicalComplex::from_facets(
        c.ambient_dim(),
        c.facets().iter().copied().filter(|f| !part.is_facet(f)),
    )
}

impl CellComplex for CubicalComplex {
    type Cell = SignVector;

    fn facet_cells(&self) -> Vec<SignVector> {
        self.facets.clone()
    }

    fn cell_dim(cell: &SignVector) -> usize {
        cell.dim()
    }

    fn cell_boundary(cell: &SignVector) -> Vec<SignVector> {
        cell.ridges().collect()
    }

    fn faces_by_dim(&self) -> Vec<Vec<SignVector>> {
        let top = match self.facets.iter().map(|f| f.dim()).max() {
            Some(t) => t,
            None => return Vec::new(),
        };
        let mut levels: Vec<HashSet<SignVector>> = vec![HashSet::new(); top + 1];
        for f in &self.facets {
            for g in f.all_subfaces() {
                levels[g.dim()].insert(g);
            }
        }
        levels
            .into_iter()
            .map(|s| {
                let mut v: Vec<_> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }
}
