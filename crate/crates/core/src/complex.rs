//! Shared view of simplicial and cubical complexes as collections of cells.
//!
//! The verification routines (pseudomanifold checks, homology) only need the
//! facets, the dimension of a cell and its codimension-one faces.

use std::collections::HashSet;
use std::hash::Hash;

use crate::fvector::FVector;

pub trait CellComplex {
    type Cell: Copy + Eq + Hash + Ord + std::fmt::Debug;

    fn facet_cells(&self) -> Vec<Self::Cell>;

    /// Dimension of a non-empty cell.
    fn cell_dim(cell: &Self::Cell) -> usize;

    /// Non-empty faces of codimension one. For simplices these are the
    /// `k + 1` subfacets, for cubes the `2k` opposite pairs.
    fn cell_boundary(cell: &Self::Cell) -> Vec<Self::Cell>;

    /// All non-empty faces grouped by dimension, each group sorted.
    fn faces_by_dim(&self) -> Vec<Vec<Self::Cell>> {
        let facets = self.facet_cells();
        let top = match facets.iter().map(Self::cell_dim).max() {
            Some(t) => t,
            None => return Vec::new(),
        };
        let mut levels: Vec<HashSet<Self::Cell>> = vec![HashSet::new(); top + 1];
        for f in facets {
            levels[Self::cell_dim(&f)].insert(f);
        }
        for k in (1..=top).rev() {
            let below: Vec<Self::Cell> = levels[k].iter().flat_map(Self::cell_boundary).collect();
            levels[k - 1].extend(below);
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

    fn cell_f_vector(&self) -> FVector {
        FVector(self.faces_by_dim().iter().map(|l| l.len() as u64).collect())
    }

    fn is_pure_complex(&self) -> bool {
        let facets = self.facet_cells();
        match facets.first() {
            None => true,
            Some(f) => {
                let d = Self::cell_dim(f);
                facets.iter().all(|g| Self::cell_dim(g) == d)
            }
        }
    }
}
