//! Acceptance gate: one integration test per acceptance criterion, in
//! order. Each test prints a single `[criterion N] PASS — …` line (visible
//! with `--nocapture`); the libtest summary gives the same pass/fail per
//! criterion.
//!
//! The fourteen classifications are computed once (in parallel) and shared.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use strange_duality::{
    build_b, candidate_count, classify, det3, dual_weight_system, isolated_at_origin,
    kobayashi_check, milnor_number, milnor_orlik, quasi_weights, reflexivity_check, table1,
    verify_mirror_identities, CanonicalKey, ClassificationResult, IMat3, SingularityRecord,
    Weight,
};

struct Fixture {
    /// (table record, full classification), in table order.
    results: Vec<(&'static SingularityRecord, ClassificationResult)>,
    elapsed: Duration,
}

fn fixture() -> &'static Fixture {
    static FX: OnceLock<Fixture> = OnceLock::new();
    FX.get_or_init(|| {
        let started = Instant::now();
        let results = table1()
            .par_iter()
            .map(|rec| {
                let r = classify(&rec.weights).expect("table weights are within search bounds");
                (rec, r)
            })
            .collect();
        Fixture {
            results,
            elapsed: started.elapsed(),
        }
    })
}

/// Canonical form (row/column-permutation minimum, flattened row-major) of
/// the unique isolated C class of each weight, from an independent
/// enumeration oracle.
const GOLDEN_CANONICAL_C: [(&str, [i64; 9]); 14] = [
    ("E_12", [0, 0, 2, 0, 3, 0, 7, 0, 0]),
    ("E_13", [0, 0, 2, 0, 5, 0, 3, 1, 0]),
    ("E_14", [0, 0, 3, 0, 4, 0, 2, 1, 0]),
    ("Z_11", [0, 0, 2, 0, 3, 0, 5, 1, 0]),
    ("Z_12", [0, 0, 2, 1, 3, 0, 4, 1, 0]),
    ("Z_13", [0, 0, 3, 0, 3, 1, 2, 1, 0]),
    ("W_12", [0, 0, 2, 0, 2, 1, 5, 0, 0]),
    ("W_13", [0, 0, 4, 0, 2, 1, 2, 1, 0]),
    ("Q_10", [0, 0, 2, 0, 3, 0, 4, 0, 1]),
    ("Q_11", [0, 0, 2, 0, 3, 1, 3, 1, 0]),
    ("Q_12", [0, 0, 3, 1, 2, 0, 3, 1, 0]),
    ("S_11", [0, 0, 2, 0, 2, 1, 4, 1, 0]),
    ("S_12", [0, 1, 2, 1, 2, 0, 3, 0, 1]),
    ("U_12", [0, 0, 4, 1, 2, 0, 2, 1, 0]),
];

fn golden_key(name: &str) -> CanonicalKey {
    let (_, flat) = GOLDEN_CANONICAL_C
        .iter()
        .find(|(n, _)| *n == name)
        .expect("golden entry");
    CanonicalKey(flat.map(BigInt::from))
}

fn subscript(name: &str) -> u64 {
    name[2..].parse().expect("name ends in the Milnor number")
}

#[test]
fn criterion_01_theorem_positive_direction() {
    let fx = fixture();
    assert_eq!(
        candidate_count(&Weight::new([6, 14, 21]).unwrap()),
        850_080,
        "largest enumeration size"
    );
    for (rec, r) in &fx.results {
        let hits = r
            .solutions
            .iter()
            .filter(|s| s.isolated == Some(true))
            .count();
        assert!(
            hits >= 1,
            "{}: no factorization satisfies Condition 1",
            rec.name
        );
        assert!(r.is_exceptional, "{}: must classify exceptional", rec.name);
    }
    assert!(
        fx.elapsed < Duration::from_secs(300),
        "all 14 classifications must finish within 5 minutes, took {:?}",
        fx.elapsed
    );
    println!(
        "[criterion 1] PASS — all 14 weights satisfy Condition 1 ({:?} total)",
        fx.elapsed
    );
}

#[test]
fn criterion_02_uniqueness_of_isolated_class() {
    let fx = fixture();
    for (rec, r) in &fx.results {
        assert_eq!(
            r.isolated_classes.len(),
            1,
            "{}: isolated canonical C classes",
            rec.name
        );
        assert_eq!(
            r.isolated_classes[0],
            golden_key(rec.name),
            "{}: canonical C matches the enumeration oracle",
            rec.name
        );
    }
    println!("[criterion 2] PASS — exactly one isolated C class per weight, all matching the oracle");
}

#[test]
fn criterion_03_dual_identification() {
    let fx = fixture();
    for (rec, r) in &fx.results {
        assert_eq!(
            r.dual_name,
            Some(rec.dual_name),
            "{}: identified dual",
            rec.name
        );
    }
    // the four proper pairs and six self-dual cases, spelled out
    let pairs = [
        ("E_13", "Z_11"),
        ("E_14", "Q_10"),
        ("Z_13", "Q_11"),
        ("W_13", "S_11"),
    ];
    let find = |n: &str| {
        fx.results
            .iter()
            .find(|(rec, _)| rec.name == n)
            .map(|(_, r)| r.dual_name.unwrap())
            .unwrap()
    };
    for (x, y) in pairs {
        assert_eq!(find(x), y);
        assert_eq!(find(y), x);
    }
    for name in ["E_12", "Z_12", "W_12", "Q_12", "S_12", "U_12"] {
        assert_eq!(find(name), name, "{name} is self-dual");
    }
    println!("[criterion 3] PASS — dual column reproduced for all 14");
}

#[test]
fn criterion_04_w12_normal_form_selection() {
    let fx = fixture();
    let (_, r) = fx
        .results
        .iter()
        .find(|(rec, _)| rec.name == "W_12")
        .unwrap();
    assert_eq!(r.weight.a(), [4, 5, 10]);
    let sol = r
        .solutions
        .iter()
        .find(|s| s.isolated == Some(true))
        .unwrap();
    // monomial multiset {x^5, y^2 z, z^2} up to variable permutation
    let target: [[i64; 3]; 3] = [[5, 0, 0], [0, 2, 1], [0, 0, 2]];
    let mut target_rows: Vec<[BigInt; 3]> = target
        .iter()
        .map(|row| row.map(BigInt::from))
        .collect();
    target_rows.sort();
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let matched = PERMS.iter().any(|p| {
        let mut rows: Vec<[BigInt; 3]> = (0..3)
            .map(|i| {
                let mut row: [BigInt; 3] = Default::default();
                for j in 0..3 {
                    row[j] = sol.c.get(i, p[j]).clone();
                }
                row
            })
            .collect();
        rows.sort();
        rows == target_rows
    });
    assert!(
        matched,
        "W_12 solution must be {{x^5, y^2 z, z^2}} up to variable permutation, got C = {}",
        sol.c
    );
    println!("[criterion 4] PASS — W_12's unique f_C is x^5 + y^2 z + z^2 up to permutation");
}

#[test]
fn criterion_05_milnor_consistency() {
    let fx = fixture();
    for (rec, r) in &fx.results {
        for sol in r.solutions.iter().filter(|s| s.isolated == Some(true)) {
            let mu = milnor_number(&sol.c)
                .unwrap()
                .mu
                .expect("isolated solutions have finite μ");
            let dual = dual_weight_system(sol).unwrap();
            let orlik = milnor_orlik(&dual);
            // f_C defines the *dual* singularity, so μ is the dual's subscript
            let expected = subscript(rec.dual_name);
            assert_eq!(mu, expected, "{}: Gröbner μ", rec.name);
            assert_eq!(
                orlik,
                BigRational::from(BigInt::from(expected)),
                "{}: Milnor–Orlik product",
                rec.name
            );
        }
    }
    println!("[criterion 5] PASS — μ = Milnor–Orlik = dual subscript on every isolated solution");
}

#[test]
fn criterion_06_engine_equivalence() {
    let fx = fixture();
    // (a) every emitted candidate of the 14 weights, against raw finiteness
    let mut candidates = 0usize;
    for (rec, r) in &fx.results {
        for sol in &r.solutions {
            let milnor = milnor_number(&sol.c).unwrap();
            assert_eq!(
                sol.isolated,
                Some(milnor.finite),
                "{}: engines disagree on C = {}",
                rec.name,
                sol.c
            );
            assert_eq!(sol.isolated, Some(milnor.predicts_isolated()));
            candidates += 1;
        }
    }
    // (b) ≥1000 random quasi-homogeneous matrices, entries ≤ 5, det ≠ 0.
    // A quasi-homogeneous C may place a monomial x_i on a row (a smooth
    // point, not a singularity): the Jacobian ideal is then the unit ideal,
    // finite-dimensional with μ = 0, while no critical point exists at the
    // origin at all. Equivalence therefore reads "isolated ⟺ finite ∧ μ ≥ 1";
    // on row-degree ≥ 2 matrices — all emitted candidates — this is exactly
    // finiteness, which part (a) pins literally.
    let mut rng = StdRng::seed_from_u64(0x57ae_6e0d);
    let mut accepted = 0usize;
    let mut smooth_rows = 0usize;
    let mut draws = 0usize;
    while accepted < 1000 {
        draws += 1;
        assert!(draws < 200_000, "sampler failed to reach 1000 matrices");
        let mut e = [[0i64; 3]; 3];
        for row in e.iter_mut() {
            for x in row.iter_mut() {
                *x = rng.gen_range(0..=5);
            }
        }
        let c = IMat3::from_i64(e);
        if det3(&c) == BigInt::from(0) || quasi_weights(&c).is_none() {
            continue;
        }
        accepted += 1;
        let isolated = isolated_at_origin(&c).unwrap();
        let milnor = milnor_number(&c).unwrap();
        assert_eq!(
            isolated,
            milnor.predicts_isolated(),
            "engines disagree on random C = {c}"
        );
        if milnor.finite && milnor.mu == Some(0) {
            smooth_rows += 1;
        }
    }
    println!(
        "[criterion 6] PASS — engines agree on {candidates} candidates (literal finiteness) \
         and {accepted} random quasi-homogeneous matrices ({smooth_rows} smooth, μ = 0)"
    );
}

#[test]
fn criterion_07_magic_square_property() {
    let fx = fixture();
    let mut checked = 0usize;
    for (rec, r) in &fx.results {
        for sol in r.solutions.iter().filter(|s| s.isolated == Some(true)) {
            let dual = dual_weight_system(sol).unwrap();
            let report = kobayashi_check(&sol.c, &dual, &rec.weights);
            assert!(
                report.holds(),
                "{}: C = {} is not a primitive weighted magic square ({report:?})",
                rec.name,
                sol.c
            );
            checked += 1;
        }
    }
    println!(
        "[criterion 7] PASS — all {checked} isolated C are primitive weighted magic squares"
    );
}

#[test]
fn criterion_08_reflexivity() {
    let ok: Vec<&str> = table1()
        .par_iter()
        .filter_map(|rec| {
            reflexivity_check(&rec.weights)
                .unwrap()
                .then_some(rec.name)
        })
        .collect();
    assert_eq!(ok.len(), 14, "reflexivity must hold for all 14, got {ok:?}");
    println!("[criterion 8] PASS — semi-duality is reflexive on all 14 weights");
}

#[test]
fn criterion_09_negative_control() {
    let r = classify(&Weight::new([1, 1, 1]).unwrap()).unwrap();
    assert!(!r.is_exceptional, "(1,1,1) is not exceptional");
    assert_eq!(r.dual_name, None);
    assert!(!r.solutions.is_empty(), "factorizations exist …");
    assert!(
        r.solutions.iter().all(|s| s.isolated == Some(false)),
        "… but every f_C fails Condition 1(iv)"
    );
    // The theorem's "only if" over the full list of 41 weight systems with
    // a0 = 1 is data-dependent: that list is not part of this repository.
    // Supplied via `strange-dual batch --input`, exactly the 14 embedded
    // weights must classify as exceptional.
    println!(
        "[criterion 9] PASS — (1,1,1) rejected (all {} factorizations non-isolated); \
         the 41-weight sweep is data-dependent and runs via `batch` when the list is supplied",
        r.solutions.len()
    );
}

#[test]
fn criterion_10_determinant_identity() {
    let mut rng = StdRng::seed_from_u64(0xdeb0_0d1e);
    for _ in 0..200 {
        let a = [
            rng.gen_range(1..=50u64),
            rng.gen_range(1..=50u64),
            rng.gen_range(1..=50u64),
        ];
        let w = Weight::new(a).unwrap();
        assert_eq!(
            det3(&build_b(&w)),
            BigInt::from(w.h()),
            "det B_a = h fails for {w}"
        );
    }
    println!("[criterion 10] PASS — det B_a = a1+a2+a3+1 on 200 random weights");
}

#[test]
fn criterion_11_mirror_identities() {
    let fx = fixture();
    let mut checked = 0usize;
    for (rec, r) in &fx.results {
        for sol in &r.solutions {
            assert!(
                verify_mirror_identities(&rec.weights, sol),
                "{}: mirror identities fail for D = {}",
                rec.name,
                sol.d
            );
            checked += 1;
        }
    }
    println!(
        "[criterion 11] PASS — symbolic CD = B_a, column sums, and 5-point spot checks on all {checked} solutions"
    );
}
