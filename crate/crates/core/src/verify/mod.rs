//! Combinatorial and topological checks on constructed complexes.

pub mod homology;
pub mod iso;

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::CellComplex;
use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::face::SignVector;
use crate::fvector::FVector;
use crate::simplicial::SimplicialComplex;

pub use homology::{gf2_rank, z2_betti, DEFAULT_HOMOLOGY_CAP};
pub use iso::{complexes_isomorphic, find_isomorphism, IsoLimits};

pub fn euler_characteristic(fv: &FVector) -> i64 {
    fv.euler_characteristic()
}

/// `(closed, strongly_connected)`: every ridge lies in exactly two facets,
/// and the facet-ridge incidence graph is connected.
pub fn closed_pseudomanifold_check<C: CellComplex>(c: &C) -> Result<(bool, bool)> {
    if !c.is_pure_complex() {
        return Err(Error::NotPure);
    }
    let facets = c.facet_cells();
    if facets.is_empty() {
        return Ok((false, false));
    }
    let mut incidence: HashMap<C::Cell, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in C::cell_boundary(f) {
            incidence.entry(r).or_default().push(i);
        }
    }
    let closed = !incidence.is_empty() && incidence.values().all(|v| v.len() == 2);

    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for ids in incidence.values() {
        for w in ids.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    let connected = (0..facets.len()).all(|i| find(&mut parent, i) == root);
    Ok((closed, connected))
}

/// Link of a cube vertex: for each facet containing `v`, the set of its zero
/// coordinates, as a simplicial complex on the coordinate labels.
pub fn vertex_link(c: &CubicalComplex, v: &SignVector) -> Result<SimplicialComplex> {
    if v.ambient_dim() != c.ambient_dim() || !v.is_vertex() {
        return Err(Error::NotAVertex(v.to_string()));
    }
    let faces: Vec<u64> = c.facets_containing(v).map(|f| f.zero_mask()).collect();
    if faces.is_empty() {
        return Err(Error::NotAVertex(v.to_string()));
    }
    SimplicialComplex::from_masks(c.ambient_dim(), faces)
}

/// Edge figure of an edge `e` (one zero entry, at coordinate `j`): for each
/// facet containing `e`, its zero coordinates other than `j`, relabeled onto
/// `0..n-1` by deleting coordinate `j`.
pub fn edge_figure(c: &CubicalComplex, e: &SignVector) -> Result<SimplicialComplex> {
    if e.ambient_dim() != c.ambient_dim() || e.dim() != 1 {
        return Err(Error::NotAnEdge(e.to_string()));
    }
    let j = e.zero_mask().trailing_zeros();
    let low = (1u64 << j) - 1;
    let faces: Vec<u64> = c
        .facets_containing(e)
        .map(|f| {
            let z = f.zero_mask() & !(1 << j);
            (z & low) | ((z >> 1) & !low)
        })
        .collect();
    if faces.is_empty() {
        return Err(Error::NotAnEdge(e.to_string()));
    }
    SimplicialComplex::from_masks(c.ambient_dim() - 1, faces)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub f_vector: FVector,
    pub euler: i64,
    pub is_pure: bool,
    pub is_closed_pseudomanifold: bool,
    pub is_strongly_connected: bool,
    pub betti_z2: Option<Vec<usize>>,
    /// Largest `k` such that the complex is `k`-neighborly.
    pub neighborliness: usize,
    pub links_ok: Option<bool>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Closed, strongly connected, with consistent homology and links where computed.
    pub fn passed(&self) -> bool {
        self.is_pure
            && self.is_closed_pseudomanifold
            && self.is_strongly_connected
            && self.links_ok.unwrap_or(true)
            && self.betti_z2.as_ref().is_none_or(|b| alternating_sum(b) == self.euler)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub homology: bool,
    pub links: bool,
    pub homology_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            homology: false,
            links: false,
            homology_cap: DEFAULT_HOMOLOGY_CAP,
        }
    }
}

pub fn alternating_sum(b: &[usize]) -> i64 {
    b.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

fn base_report<C: CellComplex>(c: &C, opts: VerifyOptions, notes: &mut Vec<String>) -> VerificationReport {
    let f_vector = c.cell_f_vector();
    let euler = f_vector.euler_characteristic();
    let is_pure = c.is_pure_complex();
    let (closed, connected) = if is_pure {
        closed_pseudomanifold_check(c).unwrap_or((false, false))
    } else {
        notes.push("complex is not pure".into());
        (false, false)
    };
    let betti_z2 = if opts.homology {
        match z2_betti(c, opts.homology_cap) {
            Ok(b) => {
                if alternating_sum(&b) != euler {
                    notes.push("Betti numbers disagree with the Euler characteristic".into());
                }
                Some(b)
            }
            Err(e) => {
                notes.push(format!("homology skipped: {e}"));
                None
            }
        }
    } else {
        None
    };
    VerificationReport {
        f_vector,
        euler,
        is_pure,
        is_closed_pseudomanifold: closed,
        is_strongly_connected: connected,
        betti_z2,
        neighborliness: 0,
        links_ok: None,
        notes: Vec::new(),
    }
}

/// Whether a simplicial complex passes the sphere checks available here:
/// Euler characteristic `1 + (-1)^dim`, closed strongly connected
/// pseudomanifold, and (if requested) the homology of a sphere.
pub fn looks_like_sphere(s: &SimplicialComplex, homology_cap: Option<usize>) -> bool {
    let Some(dim) = s.pure_dim() else { return false };
    let euler = s.f_vector().euler_characteristic();
    if euler != 1 + if dim % 2 == 0 { 1 } else { -1 } {
        return false;
    }
    match closed_pseudomanifold_check(s) {
        Ok((true, true)) => {}
        _ => return dim == 0 && s.num_facets() == 2,
    }
    match homology_cap.map(|cap| z2_betti(s, cap)) {
        Some(Ok(b)) => {
            let mut expected = vec![0; dim + 1];
            expected[0] += 1;
            expected[dim] += 1;
            b == expected
        }
        _ => true,
    }
}

pub fn verify_cubical(c: &CubicalComplex, opts: VerifyOptions) -> VerificationReport {
    let mut notes = Vec::new();
    let mut report = base_report(c, opts, &mut notes);
    report.neighborliness = c.neighborliness();
    if opts.links {
        let vertices = c.faces_of_dim(0);
        let mut sorted: Vec<_> = vertices.into_iter().collect();
        sorted.sort_unstable();
        let cap = opts.homology.then_some(opts.homology_cap);
        let bad: Vec<&SignVector> = sorted
            .iter()
            .filter(|v| !vertex_link(c, v).is_ok_and(|l| looks_like_sphere(&l, cap)))
            .collect();
        if let Some(v) = bad.first() {
            notes.push(format!(
                "{} vertex links fail the sphere checks, first at {v}",
                bad.len()
            ));
        }
        report.links_ok = Some(bad.is_empty());
    }
    notes.append(&mut report.notes);
    report.notes = notes;
    report
}

pub fn verify_simplicial(s: &SimplicialComplex, opts: VerifyOptions) -> VerificationReport {
    let mut notes = Vec::new();
    let mut report = base_report(s, opts, &mut notes);
    report.neighborliness = (1..=s.n_vertices())
        .take_while(|&k| s.is_k_neighborly(k))
        .last()
        .unwrap_or(0);
    if opts.links {
        notes.push("vertex links are only checked for cubical complexes".into());
    }
    report.notes = notes;
    report
}
