//! Shared strategies and property checks for the integration suites.

#![allow(dead_code)]

use neighborly_cubical::cubical::{fissure, mirror_complex, FissureMode};
use neighborly_cubical::simplicial::{gale_facets_cyclic, pulling_triangulation_cyclic};
use neighborly_cubical::verify::vertex_link;
use neighborly_cubical::{CubicalComplex, SignVector, SimplicialComplex};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub type Check = std::result::Result<(), TestCaseError>;

/// A pure simplicial complex on `n <= 10` vertices with facets of size `k`.
pub fn pure_complex() -> impl Strategy<Value = SimplicialComplex> {
    (3usize..=10)
        .prop_flat_map(|n| (Just(n), 1usize..=n.min(5)))
        .prop_flat_map(|(n, k)| {
            let facet = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k);
            (Just(n), proptest::collection::vec(facet, 1..8))
        })
        .prop_map(|(n, facets)| SimplicialComplex::from_vertex_lists(n, facets).unwrap())
}

/// An arbitrary (possibly impure) complex on `n <= 10` vertices.
pub fn any_complex() -> impl Strategy<Value = SimplicialComplex> {
    (3usize..=10).prop_flat_map(|n| {
        let facet = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n.min(5));
        proptest::collection::vec(facet, 1..8)
            .prop_map(move |facets| SimplicialComplex::from_vertex_lists(n, facets).unwrap())
    })
}

/// `f_i(mirror Δ) = 2^(n-i) f_(i-1)(Δ)`, with `f_(-1) = 1`.
pub fn mirror_f_vector_identity(delta: &SimplicialComplex) -> Check {
    let n = delta.n_vertices();
    let m = mirror_complex(delta).unwrap();
    let fm = m.f_vector();
    let fd = delta.f_vector();
    for i in 0..=n {
        let below = if i == 0 { 1 } else { fd.get(i - 1) };
        prop_assert_eq!(fm.get(i), below << (n - i), "dimension {}", i);
    }
    Ok(())
}

pub fn mirror_boundary_commutes(delta: &SimplicialComplex) -> Check {
    let m = mirror_complex(delta).unwrap();
    let lhs = m.boundary().unwrap();
    let db = delta.boundary().unwrap();
    if db.is_void() {
        prop_assert!(lhs.is_empty());
    } else {
        prop_assert_eq!(lhs, mirror_complex(&db).unwrap());
    }
    Ok(())
}

pub fn vertex_links_reproduce(delta: &SimplicialComplex, negatives: &[u64]) -> Check {
    let n = delta.n_vertices();
    let m = mirror_complex(delta).unwrap();
    for &neg in negatives {
        let v = SignVector::vertex(n, neg & ((1 << n) - 1)).unwrap();
        prop_assert_eq!(&vertex_link(&m, &v).unwrap(), delta);
    }
    Ok(())
}

pub fn sign_flip_invariance(delta: &SimplicialComplex, negative: u64) -> Check {
    let n = delta.n_vertices();
    let m = mirror_complex(delta).unwrap();
    prop_assert_eq!(m.flip_all(negative & ((1 << n) - 1)), m);
    Ok(())
}

/// Relabeling by a coordinate permutation commutes with mirroring.
pub fn relabel_commutes(delta: &SimplicialComplex, perm: &[usize]) -> Check {
    let n = delta.n_vertices();
    let m = mirror_complex(delta).unwrap();
    let permuted = m
        .map_facets(|f| {
            let mut e = vec![0i8; n];
            for (i, x) in f.entries().into_iter().enumerate() {
                e[perm[i]] = x;
            }
            SignVector::from_entries(&e).unwrap()
        })
        .unwrap();
    prop_assert_eq!(permuted, mirror_complex(&delta.relabel(perm).unwrap()).unwrap());
    Ok(())
}

/// For `T = cone(B, v)`: `∂T` is `k`-neighborly iff `∂B` is `(k-1)`-neighborly
/// and `B` is `k`-neighborly.
pub fn neighborliness_lemma(b: &SimplicialComplex, k: usize) -> Check {
    let n = b.n_vertices();
    let t = b.cone(n).unwrap();
    let lhs = t.boundary().unwrap().is_k_neighborly(k);
    let rhs = b.boundary().unwrap().is_k_neighborly(k - 1) && b.is_k_neighborly(k);
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// Fissure facet count and dimension on a random split of a cube boundary.
pub fn fissure_count(n: usize, split: u64) -> Check {
    let c = CubicalComplex::cube_boundary(n).unwrap();
    let (a, b): (Vec<_>, Vec<_>) = c.facets().iter().enumerate().partition(|(i, _)| split >> i & 1 == 1);
    let c1 = CubicalComplex::from_facets(n, a.into_iter().map(|(_, f)| *f)).unwrap();
    let c2 = CubicalComplex::from_facets(n, b.into_iter().map(|(_, f)| *f)).unwrap();
    let r1: std::collections::HashSet<SignVector> = c1
        .facets()
        .iter()
        .flat_map(|f| f.ridges().collect::<Vec<_>>())
        .collect();
    let common = c2
        .facets()
        .iter()
        .flat_map(|f| f.ridges().collect::<Vec<_>>())
        .filter(|r| r1.contains(r))
        .collect::<std::collections::HashSet<_>>();
    let s = fissure(&c, &c1, &c2, FissureMode::Strict).unwrap();
    prop_assert_eq!(s.num_facets(), c1.num_facets() + c2.num_facets() + common.len());
    prop_assert!(s.facets().iter().all(|f| f.dim() == n - 1));
    Ok(())
}

pub fn pulling_boundary_is_gale(d_poly: usize, i: usize) -> Check {
    let t = pulling_triangulation_cyclic(d_poly, i).unwrap();
    prop_assert_eq!(t.boundary().unwrap(), gale_facets_cyclic(d_poly, i).unwrap());
    prop_assert!(t.facet_masks().iter().all(|f| f >> (i - 1) & 1 == 1));
    Ok(())
}

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    }
}

/// Runs `strategy` through `test` with a fixed seed, returning the failure message.
pub fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Check) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new_with_rng(
        config(cases),
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner.run(&strategy, test).map_err(|e| e.to_string())
}
