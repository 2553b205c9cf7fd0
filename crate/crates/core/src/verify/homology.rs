//! Betti numbers over the two-element field.
//!
//! The boundary matrix between consecutive dimensions is reduced row by row
//! with dense bitsets; `b_k = f_k - rank ∂_k - rank ∂_{k+1}`.

use std::collections::HashMap;

use crate::complex::CellComplex;
use crate::error::{Error, Result};

pub const DEFAULT_HOMOLOGY_CAP: usize = 1 << 20;

#[derive(Clone)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(len: usize) -> Self {
        Self(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn lowest(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank over GF(2) of a matrix given as sparse rows of column indices.
/// Repeated column indices cancel.
pub fn gf2_rank(rows: impl IntoIterator<Item = Vec<usize>>, n_cols: usize) -> usize {
    let mut pivots: HashMap<usize, BitRow> = HashMap::new();
    for cols in rows {
        let mut row = BitRow::zeros(n_cols);
        for c in cols {
            row.set(c);
        }
        while let Some(p) = row.lowest() {
            match pivots.get(&p) {
                Some(pivot) => row.xor_assign(pivot),
                None => {
                    pivots.insert(p, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Betti numbers `b_0, ..., b_top` over GF(2).
pub fn z2_betti<C: CellComplex>(complex: &C, cap: usize) -> Result<Vec<usize>> {
    let levels = complex.faces_by_dim();
    let count: usize = levels.iter().map(Vec::len).sum();
    if count > cap {
        return Err(Error::HomologyCapExceeded { count, cap });
    }
    let index: Vec<HashMap<C::Cell, usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, c)| (*c, i)).collect())
        .collect();
    // ranks[k] = rank of ∂_k : C_k -> C_{k-1}; ∂_0 = 0
    let mut ranks = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        let rows = levels[k].iter().map(|cell| {
            C::cell_boundary(cell)
                .iter()
                .map(|b| index[k - 1][b])
                .collect::<Vec<_>>()
        });
        ranks[k] = gf2_rank(rows, levels[k - 1].len());
    }
    Ok((0..levels.len())
        .map(|k| levels[k].len() - ranks[k] - ranks[k + 1])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::CubicalComplex;
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn rank_basics() {
        assert_eq!(gf2_rank(vec![vec![0, 1], vec![1, 2], vec![0, 2]], 3), 2);
        assert_eq!(gf2_rank(vec![vec![0], vec![1], vec![2]], 3), 3);
        assert_eq!(gf2_rank(vec![vec![1, 1]], 3), 0);
        assert_eq!(gf2_rank(vec![vec![70], vec![3, 70]], 100), 2);
    }

    #[test]
    fn solid_cube_is_acyclic() {
        for n in 1..=5 {
            let c = CubicalComplex::solid_cube(n).unwrap();
            let mut expected = vec![0; n + 1];
            expected[0] = 1;
            assert_eq!(z2_betti(&c, DEFAULT_HOMOLOGY_CAP).unwrap(), expected);
        }
    }

    #[test]
    fn spheres() {
        let s = SimplicialComplex::simplex(5).unwrap().boundary().unwrap();
        assert_eq!(z2_betti(&s, DEFAULT_HOMOLOGY_CAP).unwrap(), vec![1, 0, 0, 1]);
        let c = CubicalComplex::cube_boundary(4).unwrap();
        assert_eq!(z2_betti(&c, DEFAULT_HOMOLOGY_CAP).unwrap(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn cap_is_enforced() {
        let c = CubicalComplex::cube_boundary(4).unwrap();
        assert!(matches!(
            z2_betti(&c, 10),
            Err(Error::HomologyCapExceeded { count: 80, cap: 10 })
        ));
    }
}
