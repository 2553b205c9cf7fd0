//! Abstract simplicial complexes given by their facets.
//!
//! Vertices are `0..n_vertices`; faces are bitmasks (see [`VertexSet`]).
//! Facets are kept inclusion-maximal and sorted by mask.

use std::collections::{HashMap, HashSet};

use log::warn;

use crate::combinatorics::{bits, k_subsets, low_mask, submasks};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::face::{VertexSet, MAX_AMBIENT};
use crate::fvector::FVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from face masks. Faces contained in other faces are
    /// dropped with a warning; duplicates are merged silently.
    pub fn from_masks(n_vertices: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n_vertices > MAX_AMBIENT {
            return Err(Error::AmbientOutOfRange(n_vertices));
        }
        let allowed = low_mask(n_vertices);
        let mut masks: Vec<u64> = Vec::new();
        for m in faces {
            if m & !allowed != 0 {
                let vertex = 63 - (m & !allowed).leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n: n_vertices });
            }
            masks.push(m);
        }
        masks.sort_unstable();
        masks.dedup();
        let facets = maximal_masks(&masks);
        if facets.len() != masks.len() {
            warn!("dropped {} non-maximal faces", masks.len() - facets.len());
        }
        Ok(Self { n_vertices, facets })
    }

    pub fn from_facets(n_vertices: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        Self::from_masks(n_vertices, faces.into_iter().map(|f| f.members()))
    }

    pub fn from_vertex_lists<I, J>(n_vertices: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let mut masks = Vec::new();
        for face in faces {
            masks.push(VertexSet::from_vertices(n_vertices, face)?.members());
        }
        Self::from_masks(n_vertices, masks)
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_masks(n, [low_mask(n)])
    }

    /// Facets given in complement encoding (a `0` marks a member).
    pub fn from_complement_strs<'a>(faces: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut n = None;
        let mut masks = Vec::new();
        for s in faces {
            let f = VertexSet::from_complement_str(s)?;
            match n {
                None => n = Some(f.ambient()),
                Some(m) if m != f.ambient() => {
                    return Err(Error::AmbientMismatch {
                        left: m,
                        right: f.ambient(),
                    })
                }
                _ => {}
            }
            masks.push(f.members());
        }
        Self::from_masks(n.unwrap_or(0), masks)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn facets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets
            .iter()
            .map(move |&m| VertexSet::new(self.n_vertices, m).expect("facet within range"))
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// No faces at all, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Mask of vertices that lie in some facet.
    pub fn used_vertices(&self) -> u64 {
        self.facets.iter().fold(0, |a, &m| a | m)
    }

    /// Common facet cardinality, if all facets have the same number of vertices.
    pub fn pure_facet_size(&self) -> Option<usize> {
        let first = self.facets.first()?.count_ones();
        self.facets
            .iter()
            .all(|m| m.count_ones() == first)
            .then_some(first as usize)
    }

    /// `d` when every facet is a `d`-simplex.
    pub fn pure_dim(&self) -> Option<usize> {
        self.pure_facet_size()?.checked_sub(1)
    }

    pub fn is_facet(&self, mask: u64) -> bool {
        self.facets.binary_search(&mask).is_ok()
    }

    /// Whether `mask` is a face, i.e. contained in some facet.
    pub fn contains_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// All non-empty faces, by dimension.
    pub fn faces_of_dim(&self, k: usize) -> HashSet<u64> {
        let mut out = HashSet::new();
        for &f in &self.facets {
            if f.count_ones() as usize > k {
                for sub in submasks(f) {
                    if sub.count_ones() as usize == k + 1 {
                        out.insert(sub);
                    }
                }
            }
        }
        out
    }

    /// Exact face counts `(f_0, ..., f_dim)` by closure enumeration.
    pub fn f_vector(&self) -> FVector {
        let top = match self.facets.iter().map(|m| m.count_ones()).max() {
            Some(t) if t > 0 => t as usize,
            _ => return FVector::default(),
        };
        let mut seen: HashSet<u64> = HashSet::new();
        let mut counts = vec![0u64; top];
        for &f in &self.facets {
            for sub in submasks(f) {
                if sub != 0 && seen.insert(sub) {
                    counts[sub.count_ones() as usize - 1] += 1;
                }
            }
        }
        FVector(counts)
    }

    /// Ridges lying in exactly one facet. Requires a pure complex.
    pub fn boundary(&self) -> Result<SimplicialComplex> {
        if self.facets.is_empty() {
            return Ok(self.clone());
        }
        if self.pure_facet_size().is_none() {
            return Err(Error::NotPure);
        }
        let mut count: HashMap<u64, u32> = HashMap::new();
        for &f in &self.facets {
            for v in bits(f) {
                *count.entry(f & !(1 << v)).or_default() += 1;
            }
        }
        let ridges = count.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r);
        Self::from_masks(self.n_vertices, ridges)
    }

    /// Cone with apex `v`; the vertex range grows to include `v`.
    pub fn cone(&self, v: usize) -> Result<SimplicialComplex> {
        if v >= MAX_AMBIENT {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: MAX_AMBIENT,
            });
        }
        if self.used_vertices() >> v & 1 == 1 {
            return Err(Error::VertexPresent(v));
        }
        let n = self.n_vertices.max(v + 1);
        Self::from_masks(n, self.facets.iter().map(|&f| f | 1 << v))
    }

    /// Every `k`-subset of `0..n_vertices` is a face. For `k = 0` this asks
    /// whether the empty face exists, i.e. whether the complex is non-void.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        if k == 0 {
            return !self.is_void();
        }
        if k > self.n_vertices {
            return false;
        }
        k_subsets(self.n_vertices, k).all(|s| self.contains_face(s))
    }

    /// Applies a vertex relabeling `v -> perm[v]` onto `0..perm.len()`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        let n = perm.len();
        if n < self.n_vertices {
            return Err(Error::InvalidParameters("relabeling shorter than vertex range".into()));
        }
        let mut masks = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            let mut m = 0u64;
            for v in bits(f) {
                if perm[v] >= MAX_AMBIENT {
                    return Err(Error::VertexOutOfRange {
                        vertex: perm[v],
                        n: MAX_AMBIENT,
                    });
                }
                m |= 1 << perm[v];
            }
            masks.push(m);
        }
        Self::from_masks(n, masks)
    }

    /// Same facets over a larger (or equal) vertex range.
    pub fn with_vertex_range(&self, n: usize) -> Result<SimplicialComplex> {
        Self::from_masks(n, self.facets.iter().copied())
    }
}

/// Masks not strictly contained in another; input sorted and deduplicated.
fn maximal_masks(sorted: &[u64]) -> Vec<u64> {
    // A strict superset has strictly more bits, so compare against larger masks only.
    let mut by_size: Vec<u64> = sorted.to_vec();
    by_size.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for m in by_size {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Gale evenness on a complement encoding over `n` positions: between any
/// two non-members there is an even number of members.
pub fn is_gale_even(members: u64, n: usize) -> bool {
    let mut seen_outside = false;
    let mut run = 0usize;
    for i in 0..n {
        if members >> i & 1 == 1 {
            run += 1;
        } else {
            if seen_outside && run % 2 == 1 {
                return false;
            }
            seen_outside = true;
            run = 0;
        }
    }
    true
}

/// Facets of the boundary of the cyclic `d`-polytope with `n` vertices.
pub fn gale_facets_cyclic(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 1 || n < d + 1 || n > MAX_AMBIENT {
        return Err(Error::InvalidParameters(format!(
            "cyclic polytope needs n >= d + 1 >= 2 (got d = {d}, n = {n})"
        )));
    }
    let facets = k_subsets(n, d).filter(|&m| is_gale_even(m, n));
    SimplicialComplex::from_masks(n, facets)
}

/// Pulling triangulation of the cyclic `d_poly`-polytope on `i` vertices with
/// respect to its last vertex.
///
/// A facet has `d_poly + 1` members, contains the last vertex, its restriction
/// to the first `i - 1` positions is Gale even, and it ends with an odd
/// number of consecutive members. The parity rule does not apply to the
/// simplex (`i = d_poly + 1`), which is its own triangulation.
pub fn pulling_triangulation_cyclic(d_poly: usize, i: usize) -> Result<SimplicialComplex> {
    if d_poly < 1 || i < d_poly + 1 || i > MAX_AMBIENT {
        return Err(Error::InvalidParameters(format!(
            "pulling triangulation needs i >= d + 1 >= 2 (got d = {d_poly}, i = {i})"
        )));
    }
    let apex = 1u64 << (i - 1);
    let facets = k_subsets(i - 1, d_poly)
        .filter(|&prefix| is_gale_even(prefix, i - 1))
        .map(|prefix| prefix | apex)
        .filter(|&m| m == low_mask(i) || trailing_members(m, i) % 2 == 1);
    SimplicialComplex::from_masks(i, facets)
}

fn trailing_members(m: u64, n: usize) -> usize {
    (m << (64 - n)).leading_ones() as usize
}

impl CellComplex for SimplicialComplex {
    type Cell = u64;

    fn facet_cells(&self) -> Vec<u64> {
        self.facets.iter().copied().filter(|&m| m != 0).collect()
    }

    fn cell_dim(cell: &u64) -> usize {
        cell.count_ones() as usize - 1
    }

    fn cell_boundary(cell: &u64) -> Vec<u64> {
        if cell.count_ones() <= 1 {
            return Vec::new();
        }
        bits(*cell).map(|v| cell & !(1 << v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_complement_strs(faces.iter().copied()).unwrap()
    }

    fn complement_strings(c: &SimplicialComplex) -> Vec<String> {
        let mut v: Vec<String> = c.facets().map(|f| f.to_complement_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn maximality_enforced() {
        let c = SimplicialComplex::from_vertex_lists(4, [vec![0, 1, 2], vec![0, 1], vec![3]]).unwrap();
        assert_eq!(c.num_facets(), 2);
        assert_eq!(c.pure_dim(), None);
    }

    #[test]
    fn simplex_f_vector() {
        for d in 1..=6usize {
            let fv = SimplicialComplex::simplex(d + 1).unwrap().f_vector();
            let expected: Vec<u64> = (1..=d + 1)
                .map(|k| crate::combinatorics::binomial(d as u64 + 1, k as u64) as u64)
                .collect();
            assert_eq!(fv.counts(), expected.as_slice());
        }
    }

    #[test]
    fn pentagon() {
        let p = gale_facets_cyclic(2, 5).unwrap();
        assert_eq!(p.num_facets(), 5);
        assert_eq!(p.f_vector().counts(), &[5, 5]);
        assert!(!p.is_k_neighborly(2));
        assert!(p.is_k_neighborly(1));
        assert!(p.boundary().unwrap().is_void());
    }

    #[test]
    fn boundary_of_simplex_and_triangle() {
        let s = SimplicialComplex::simplex(5).unwrap();
        let b = s.boundary().unwrap();
        assert_eq!(b.num_facets(), 5);
        assert!(b.facets().all(|f| f.len() == 4));
        let t = SimplicialComplex::simplex(3).unwrap().boundary().unwrap();
        assert_eq!(t.num_facets(), 3);
        let mixed = SimplicialComplex::from_vertex_lists(3, [vec![0, 1], vec![2]]).unwrap();
        assert_eq!(mixed.boundary(), Err(Error::NotPure));
    }

    #[test]
    fn pulling_triangulations_of_polygons() {
        assert_eq!(
            complement_strings(&pulling_triangulation_cyclic(2, 5).unwrap()),
            ["00110", "10010", "11000"]
        );
        assert_eq!(
            complement_strings(&pulling_triangulation_cyclic(2, 4).unwrap()),
            ["0010", "1000"]
        );
        assert_eq!(
            complement_strings(&pulling_triangulation_cyclic(2, 3).unwrap()),
            ["000"]
        );
        assert!(pulling_triangulation_cyclic(2, 2).is_err());
    }

    #[test]
    fn boundary_of_pentagon_triangulation() {
        // edges {1,2},{2,3},{3,4},{1,5},{4,5} in 1-based labels
        let b = pulling_triangulation_cyclic(2, 5).unwrap().boundary().unwrap();
        let expected = SimplicialComplex::from_vertex_lists(5, [[0, 1], [1, 2], [2, 3], [0, 4], [3, 4]]).unwrap();
        assert_eq!(b, expected);
        assert_eq!(complement_strings(&b), ["00111", "01110", "10011", "11001", "11100"]);
    }

    #[test]
    fn cones() {
        let b4 = cx(&["0011", "1001", "1100"]);
        let t5 = b4.cone(4).unwrap();
        assert_eq!(complement_strings(&t5), ["00110", "10010", "11000"]);
        let edge = SimplicialComplex::from_vertex_lists(1, [[0]]).unwrap().cone(1).unwrap();
        assert_eq!(edge.facet_masks(), &[0b11]);
        assert_eq!(b4.cone(2), Err(Error::VertexPresent(2)));
    }

    #[test]
    fn cyclic_3_polytope_on_6_vertices() {
        // 2n - 4 facets, the count a hull of moment-curve points gives
        let c = gale_facets_cyclic(3, 6).unwrap();
        assert_eq!(c.num_facets(), 8);
        assert_eq!(gale_facets_cyclic(4, 8).unwrap().num_facets(), 20);
        assert!(gale_facets_cyclic(3, 3).is_err());
    }

    #[test]
    fn neighborliness_of_simplex_boundary() {
        let b = SimplicialComplex::simplex(6).unwrap().boundary().unwrap();
        for k in 1..=5 {
            assert!(b.is_k_neighborly(k));
        }
        assert!(!b.is_k_neighborly(6));
    }
}
