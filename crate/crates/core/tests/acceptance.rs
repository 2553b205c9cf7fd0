//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use neighborly_cubical::bbc::{bbc_from_cyclic, build_direct, build_inductive, type_counts};
use neighborly_cubical::cli::run_cli_with;
use neighborly_cubical::fixtures::{altshuler_boundaries, altshuler_sequence};
use neighborly_cubical::ncp::{cge_facets, ncp_facet_count, neighborly_sphere_facets, phi_complex, NcpParams};
use neighborly_cubical::surfaces::{embeds_in_sphere, equivelar_m4q, genus_closed_form, genus_from_euler};
use neighborly_cubical::verify::{alternating_sum, closed_pseudomanifold_check, edge_figure, z2_betti};
use neighborly_cubical::SignVector;
use proptest::prelude::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn pentagon() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli_with(
        ["ncs", "bbc", "build", "--seq", "cyclic:3,6", "--mode", "both"],
        &mut out,
        &mut err,
    );
    let text = String::from_utf8(out).unwrap();
    ensure!(code == 0, "exit code {code}: {}", String::from_utf8_lossy(&err));
    ensure!(text.contains("facets: 64\n"), "missing facet count in {text:?}");
    ensure!(text.contains("paths agree: true\n"), "paths disagree");

    let seq = bbc_from_cyclic(3, 6).map_err(|e| e.to_string())?;
    let direct = build_direct(&seq).map_err(|e| e.to_string())?;
    let inductive = build_inductive(&seq).map_err(|e| e.to_string())?;
    ensure!(
        direct == inductive && direct.num_facets() == 64,
        "construction paths differ"
    );
    let fv = direct.f_vector();
    ensure!(fv.counts() == [64, 192, 192, 64], "f-vector {fv}");
    let types: Vec<(usize, usize)> = type_counts(&direct, 3)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure!(types == [(0, 40), (1, 16), (2, 6), (3, 2)], "type counts {types:?}");
    ensure!(direct.is_k_neighborly(2), "not cubically 2-neighborly");
    Ok(())
}

fn path_grid() -> Outcome {
    for d in 3..9 {
        for n in d + 1..=9 {
            let seq = bbc_from_cyclic(d, n).map_err(|e| e.to_string())?;
            let a = build_direct(&seq).map_err(|e| e.to_string())?;
            let b = build_inductive(&seq).map_err(|e| e.to_string())?;
            ensure!(a == b, "paths differ at d={d}, n={n}");
        }
    }
    Ok(())
}

fn phi_grid() -> Outcome {
    for d in (3..9).step_by(2) {
        for n in d + 1..=9 {
            let s = build_direct(&bbc_from_cyclic(d, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let image = phi_complex(&s).map_err(|e| e.to_string())?;
            let cge = cge_facets(NcpParams::new(n, d).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure!(
                image.num_facets() == s.num_facets(),
                "reversal map not injective at d={d}, n={n}"
            );
            ensure!(image == cge, "image differs from CGE facets at d={d}, n={n}");
            let closed = ncp_facet_count(n, d).map_err(|e| e.to_string())?;
            ensure!(
                cge.num_facets() as u128 == closed,
                "|cge({n},{d})| = {} vs closed form {closed}",
                cge.num_facets()
            );
        }
    }
    Ok(())
}

fn altshuler() -> Outcome {
    let seq = altshuler_sequence();
    let s = build_direct(&seq).map_err(|e| e.to_string())?;
    ensure!(
        s == build_inductive(&seq).map_err(|e| e.to_string())?,
        "construction paths differ"
    );
    let fv = s.f_vector();
    ensure!(fv.counts() == [2048, 11264, 28160, 33280, 17920, 3584], "f-vector {fv}");
    ensure!(s.neighborliness() >= 3, "cubical neighborliness {}", s.neighborliness());
    let pm = closed_pseudomanifold_check(&s).map_err(|e| e.to_string())?;
    ensure!(pm == (true, true), "pseudomanifold check {pm:?}");
    ensure!(
        fv.euler_characteristic() == 0,
        "Euler characteristic {}",
        fv.euler_characteristic()
    );
    let e: SignVector = "++++++++++0".parse().unwrap();
    let fig = edge_figure(&s, &e).map_err(|e| e.to_string())?;
    let listed = &altshuler_boundaries()[5].listed;
    let mut listed = listed.clone();
    listed.sort_unstable();
    ensure!(
        fig.num_facets() == 35 && fig.facet_masks() == &listed[..],
        "edge figure differs from the tabulated boundary"
    );
    ensure!(
        fig == seq.ball(10).boundary().map_err(|e| e.to_string())?,
        "edge figure differs from the computed boundary"
    );
    Ok(())
}

fn closed_forms() -> Outcome {
    let f = |n, d| ncp_facet_count(n, d).map_err(|e| e.to_string());
    let s = |i, d| neighborly_sphere_facets(i, d).map_err(|e| e.to_string());
    ensure!(f(11, 5)? == 3584, "f(11,5) = {}", f(11, 5)?);
    ensure!(f(6, 3)? == 64, "f(6,3) = {}", f(6, 3)?);
    let rows = altshuler_boundaries();
    ensure!(s(10, 5)? == 35 && rows[5].listed.len() == 35, "s(10,3) = {}", s(10, 5)?);
    ensure!(s(9, 5)? == 27 && rows[4].listed.len() == 27, "s(9,3) = {}", s(9, 5)?);
    Ok(())
}

fn homology() -> Outcome {
    let s6 = build_direct(&bbc_from_cyclic(3, 6).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let b = z2_betti(&s6, 1 << 20).map_err(|e| e.to_string())?;
    ensure!(b == [1, 0, 0, 1], "betti(S_6) = {b:?}");
    ensure!(
        alternating_sum(&b) == s6.f_vector().euler_characteristic(),
        "Euler mismatch for S_6"
    );
    let m = equivelar_m4q(5).map_err(|e| e.to_string())?;
    let b = z2_betti(m.complex(), 1 << 20).map_err(|e| e.to_string())?;
    ensure!(b == [1, 10, 1], "betti(M_4,5) = {b:?}");
    ensure!(
        alternating_sum(&b) == m.euler_characteristic(),
        "Euler mismatch for M_4,5"
    );
    Ok(())
}

fn surfaces() -> Outcome {
    let m = equivelar_m4q(5).map_err(|e| e.to_string())?;
    let fv = m.complex().f_vector();
    ensure!(fv.counts() == [32, 80, 40], "f(M_4,5) = {fv}");
    ensure!(
        genus_from_euler(m.euler_characteristic()) == 5,
        "genus from Euler characteristic"
    );
    ensure!(
        genus_closed_form(5).map_err(|e| e.to_string())? == 5,
        "closed-form genus"
    );
    ensure!(m.is_orientable().map_err(|e| e.to_string())?, "M_4,5 not orientable");
    ensure!(
        embeds_in_sphere(&m, 5).map_err(|e| e.to_string())?,
        "M_4,5 not in S_3(5)"
    );
    let big = equivelar_m4q(12).map_err(|e| e.to_string())?;
    let fv = big.complex().f_vector();
    ensure!(fv.counts() == [4096, 24576, 12288], "f(M_4,12) = {fv}");
    let g = big.genus().map_err(|e| e.to_string())?;
    ensure!(g == 4097 && g > 4096, "genus(M_4,12) = {g}");
    Ok(())
}

fn properties() -> Outcome {
    use common::*;
    let cases = 128;
    run(cases, any_complex(), |d| mirror_f_vector_identity(&d)).map_err(|e| format!("mirror f-vector: {e}"))?;
    run(cases, pure_complex(), |d| mirror_boundary_commutes(&d)).map_err(|e| format!("mirror boundary: {e}"))?;
    run(
        cases,
        (any_complex(), proptest::collection::vec(any::<u64>(), 4)),
        |(d, v)| vertex_links_reproduce(&d, &v),
    )
    .map_err(|e| format!("vertex links: {e}"))?;
    run(cases, (any_complex(), any::<u64>()), |(d, neg)| {
        sign_flip_invariance(&d, neg)
    })
    .map_err(|e| format!("sign flips: {e}"))?;
    run(cases, (pure_complex(), 1usize..=3), |(b, k)| {
        neighborliness_lemma(&b, k)
    })
    .map_err(|e| format!("neighborliness lemma: {e}"))?;
    // combinatorial premise of the non-polytopality argument
    altshuler().map_err(|e| format!("edge figure identity: {e}"))?;
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("pentagon sphere", pentagon, Duration::from_secs(1)),
        ("path equivalence grid", path_grid, Duration::from_secs(30)),
        ("reversal map onto CGE facets", phi_grid, Duration::from_secs(30)),
        ("Altshuler 5-sphere", altshuler, Duration::from_secs(120)),
        ("closed forms", closed_forms, Duration::from_secs(1)),
        ("homology at desk scale", homology, Duration::from_secs(10)),
        ("equivelar surfaces", surfaces, Duration::from_secs(30)),
        ("property suites", properties, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed > *limit {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("PASS  criterion {}: {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {e}", i + 1);
            }
        }
    }
    println!("note: polytopality and non-realizability are not decided here; the edge-figure identity is checked and the realizability step is external");
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
