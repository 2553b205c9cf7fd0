//! Isomorphism testing for small simplicial complexes.
//!
//! Vertices are matched by backtracking over candidates with equal
//! invariants (facet degree, graph degree, facet-size profile). Every partial
//! assignment must preserve graph adjacency, and every facet whose vertices
//! are all assigned must map onto a facet. The search is bounded by a node
//! budget; running out is an error rather than a negative answer.

use std::collections::HashSet;

use crate::combinatorics::bits;
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

pub const DEFAULT_MAX_VERTICES: usize = 16;
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct IsoLimits {
    pub max_vertices: usize,
    pub node_budget: u64,
}

impl Default for IsoLimits {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

struct Shape {
    vertices: Vec<usize>,
    adjacency: Vec<u64>,
    signature: Vec<Vec<usize>>,
    facets: HashSet<u64>,
    facet_list: Vec<u64>,
}

impl Shape {
    fn new(c: &SimplicialComplex) -> Self {
        let n = c.n_vertices();
        let mut adjacency = vec![0u64; n];
        let mut profile = vec![Vec::new(); n];
        for &f in c.facet_masks() {
            for v in bits(f) {
                adjacency[v] |= f & !(1 << v);
                profile[v].push(f.count_ones() as usize);
            }
        }
        let vertices: Vec<usize> = bits(c.used_vertices()).collect();
        let signature = (0..n)
            .map(|v| {
                let mut p = profile[v].clone();
                p.sort_unstable();
                let mut sig = vec![p.len(), adjacency[v].count_ones() as usize];
                sig.extend(p);
                sig
            })
            .collect();
        Self {
            vertices,
            adjacency,
            signature,
            facets: c.facet_masks().iter().copied().collect(),
            facet_list: c.facet_masks().to_vec(),
        }
    }
}

/// Finds a vertex bijection mapping the facets of `a` onto those of `b`,
/// returned as `map[v_a] = v_b` over the vertices of `a` that lie in facets.
pub fn find_isomorphism(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    limits: IsoLimits,
) -> Result<Option<Vec<Option<usize>>>> {
    let sa = Shape::new(a);
    let sb = Shape::new(b);
    for s in [&sa, &sb] {
        if s.vertices.len() > limits.max_vertices {
            return Err(Error::TooLarge(format!(
                "{} vertices exceed the isomorphism limit of {}",
                s.vertices.len(),
                limits.max_vertices
            )));
        }
    }
    if sa.vertices.len() != sb.vertices.len() || sa.facet_list.len() != sb.facet_list.len() {
        return Ok(None);
    }
    let mut sig_a: Vec<_> = sa.vertices.iter().map(|&v| &sa.signature[v]).collect();
    let mut sig_b: Vec<_> = sb.vertices.iter().map(|&v| &sb.signature[v]).collect();
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b || a.f_vector() != b.f_vector() {
        return Ok(None);
    }

    // Order a's vertices so each one is adjacent to an earlier one when possible.
    let mut order: Vec<usize> = Vec::with_capacity(sa.vertices.len());
    let mut placed = 0u64;
    while order.len() < sa.vertices.len() {
        let next = sa
            .vertices
            .iter()
            .copied()
            .filter(|v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (sa.adjacency[v] & placed).count_ones(),
                    sa.signature[v][0],
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= 1 << next;
        order.push(next);
    }

    let mut search = Search {
        a: &sa,
        b: &sb,
        order,
        map: vec![None; a.n_vertices()],
        used_b: 0,
        nodes: 0,
        budget: limits.node_budget,
    };
    if search.extend(0)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

pub fn complexes_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex, limits: IsoLimits) -> Result<bool> {
    Ok(find_isomorphism(a, b, limits)?.is_some())
}

struct Search<'a> {
    a: &'a Shape,
    b: &'a Shape,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used_b: u64,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(self.all_facets_map());
        }
        let va = self.order[depth];
        for &vb in &self.b.vertices {
            if self.used_b >> vb & 1 == 1 || self.a.signature[va] != self.b.signature[vb] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            if !self.consistent(depth, va, vb) {
                continue;
            }
            self.map[va] = Some(vb);
            self.used_b |= 1 << vb;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.map[va] = None;
            self.used_b &= !(1 << vb);
        }
        Ok(false)
    }

    fn consistent(&self, depth: usize, va: usize, vb: usize) -> bool {
        for &ua in &self.order[..depth] {
            let ub = self.map[ua].expect("assigned");
            let adj_a = self.a.adjacency[va] >> ua & 1;
            let adj_b = self.b.adjacency[vb] >> ub & 1;
            if adj_a != adj_b {
                return false;
            }
        }
        // facets through va whose other vertices are all assigned
        let assigned: u64 = self.order[..depth].iter().fold(1 << va, |m, &u| m | 1 << u);
        self.a
            .facet_list
            .iter()
            .filter(|&&f| f >> va & 1 == 1 && f & !assigned == 0)
            .all(|&f| {
                let image = bits(f).fold(0u64, |m, u| {
                    let t = if u == va { vb } else { self.map[u].expect("assigned") };
                    m | 1 << t
                });
                self.b.facets.contains(&image)
            })
    }

    fn all_facets_map(&self) -> bool {
        self.a.facet_list.iter().all(|&f| {
            let image = bits(f).fold(0u64, |m, u| m | 1 << self.map[u].expect("assigned"));
            self.b.facets.contains(&image)
        })
    }
}
