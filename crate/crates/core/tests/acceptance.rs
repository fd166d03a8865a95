//! Acceptance battery.  Every check is an exact integer or rational
//! equality; each test carries a wall-clock budget.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use lierep::branching::{dominant_box, BranchingTable, Embedding};
use lierep::character::{tensor_multiplicities, FormalCharacter};
use lierep::cone::SupportCone;
use lierep::localization::{
    fixed_point_value, sym_invariants, total_sym_multiplicity, MomentCertificate,
};
use lierep::quasipoly::{fit, stretch_samples, FitResult};
use lierep::roots::{RootSystem, Weight};
use lierep::verify::{
    verify_face_reduction, verify_localization, verify_peter_weyl, verify_stretch_fit,
    FaceData,
};
use lierep::Error;
use num::BigInt;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

/// Rank one tensor products against the closed-form selection rule:
/// V_a (x) V_b = sum of V_c for c = |a-b|, |a-b|+2, ..., a+b.
#[test]
fn tensor_products_of_rank_one_match_the_closed_form() {
    let t0 = Instant::now();
    let a1 = RootSystem::from_str_spec("A1").unwrap();
    for a in 0..=20i64 {
        for b in 0..=20i64 {
            let got = tensor_multiplicities(&a1, &w(&[a]), &w(&[b])).unwrap();
            let mut want: BTreeMap<Weight, i64> = BTreeMap::new();
            let mut c = (a - b).abs();
            while c <= a + b {
                want.insert(w(&[c]), 1);
                c += 2;
            }
            assert_eq!(got, want, "at a={a} b={b}");
        }
    }
    assert!(t0.elapsed() < Duration::from_secs(5));
}

/// The alternating-sum and subtraction decompositions agree on every
/// product of irreducibles with coordinates up to 3, and decomposing an
/// irreducible returns exactly itself.
#[test]
fn decomposition_oracles_agree_on_products() {
    let t0 = Instant::now();
    for spec in ["A1", "A2", "B2", "G2"] {
        let rs = RootSystem::from_str_spec(spec).unwrap();
        let box3 = dominant_box(&rs, 3);
        let chars: Vec<FormalCharacter> = box3
            .iter()
            .map(|hw| FormalCharacter::irreducible(&rs, hw).unwrap())
            .collect();
        for (hw, ch) in box3.iter().zip(&chars) {
            let dec = ch.decompose().unwrap();
            assert_eq!(dec, BTreeMap::from([(hw.clone(), 1)]), "{spec} {hw}");
        }
        for i in 0..chars.len() {
            for j in i..chars.len() {
                let prod = chars[i].product(&chars[j]).unwrap();
                let alt = prod.decompose().unwrap();
                let sub = prod.decompose_subtraction().unwrap();
                assert_eq!(alt, sub, "{spec} {} (x) {}", box3[i], box3[j]);
            }
        }
    }
    assert!(t0.elapsed() < Duration::from_secs(60));
}

/// Branching tables conserve dimension row by row: the multiplicities of a
/// restricted irreducible weight its subgroup dimensions to the full one.
#[test]
fn branching_tables_conserve_dimension() {
    let t0 = Instant::now();
    let embs = [
        Embedding::diagonal(&"A1".parse().unwrap()).unwrap(),
        Embedding::diagonal(&"A2".parse().unwrap()).unwrap(),
        Embedding::maximal_torus(&"A2".parse().unwrap()).unwrap(),
    ];
    for emb in &embs {
        let table = BranchingTable::compute(emb, 4, true).unwrap();
        let mut sums: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for ((big, small), m) in &table.entries {
            let d = emb.small().weyl_dimension(small).unwrap();
            *sums.entry(big.clone()).or_insert_with(|| BigInt::from(0)) +=
                d * BigInt::from(*m);
        }
        for big in dominant_box(emb.big(), 4) {
            let total = sums.get(&big).cloned().unwrap_or_else(|| BigInt::from(0));
            let dim = emb.big().weyl_dimension(&big).unwrap();
            assert_eq!(total, dim, "{} -> {}: row {}", emb.big().spec(), emb.small().spec(), big);
        }
    }
    assert!(t0.elapsed() < Duration::from_secs(60));
}

/// Vanishing on the nose for rank-one diagonal pairs: the multiplicity is
/// positive exactly when the triangle inequalities and the parity condition
/// hold, and the computed support cone shows the three triangle facets from
/// every bound 6 up.
#[test]
fn support_cone_vanishing_is_exact_for_rank_one_pairs() {
    let t0 = Instant::now();
    let emb = Embedding::diagonal(&"A1".parse().unwrap()).unwrap();
    for a in 0..=30i64 {
        for b in 0..=30i64 {
            let dec = emb.branch(&w(&[a, b])).unwrap();
            for c in 0..=62i64 {
                let m = dec.get(&w(&[c])).copied().unwrap_or(0);
                let triangle =
                    c <= a + b && c >= (a - b).abs() && (a + b + c) % 2 == 0;
                assert_eq!(m > 0, triangle, "a={a} b={b} c={c} m={m}");
            }
        }
    }
    let expected = vec![vec![-1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]];
    for bound in [6, 12, 30] {
        let table = BranchingTable::compute(&emb, bound, true).unwrap();
        let sc = SupportCone::from_table(&table).unwrap();
        assert_eq!(sc.cone.facets(), &expected[..], "bound {bound}");
    }
    assert!(t0.elapsed() < Duration::from_secs(30));
}

/// Stretched multiplicities along rays fit quasi-polynomials: fits learned
/// on k <= 12 predict k = 13..20 exactly, with degree at most 1 on the
/// rank-two diagonal and period exactly 2 on parity-obstructed rank-one
/// rays.
#[test]
fn stretched_multiplicities_fit_quasi_polynomials() {
    let t0 = Instant::now();
    let diag_a2 = Embedding::diagonal(&"A2".parse().unwrap()).unwrap();
    let pairs = [
        (w(&[1, 1, 1, 1]), w(&[1, 1])),
        (w(&[1, 1, 1, 1]), w(&[0, 0])),
        (w(&[1, 1, 1, 1]), w(&[2, 2])),
        (w(&[1, 0, 0, 1]), w(&[1, 1])),
        (w(&[2, 0, 0, 2]), w(&[1, 1])),
        (w(&[1, 0, 0, 1]), w(&[0, 0])),
        (w(&[0, 0, 0, 0]), w(&[0, 0])),
    ];
    let report = verify_stretch_fit(&diag_a2, &pairs, 12, 20, 6, 2).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    let fits = report.parameters["fits"].as_array().unwrap();
    assert_eq!(fits.len(), pairs.len());
    for f in fits {
        assert!(f["degree"].as_u64().unwrap() <= 1, "fit {f}");
    }

    let diag_a1 = Embedding::diagonal(&"A1".parse().unwrap()).unwrap();
    for (big, small) in [(w(&[2, 2]), w(&[1])), (w(&[1, 1]), w(&[1]))] {
        let parity = [(big.clone(), small.clone())];
        let report = verify_stretch_fit(&diag_a1, &parity, 12, 20, 6, 2).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let samples = stretch_samples(&diag_a1, &big, &small, 12, true).unwrap();
        match fit(&samples, 6, 2).unwrap() {
            FitResult::Fit(qp) => assert_eq!(qp.period(), 2, "({big}, {small})"),
            FitResult::NoFit => panic!("no fit for ({big}, {small})"),
        }
    }
    assert!(t0.elapsed() < Duration::from_secs(120));
}

/// Face identities: on the Cartan-component face of a diagonal pair both
/// sides of the reduction equal 1 for all points up to 30, and the shipped
/// rank-two face fixture passes exhaustively within bound 8.
#[test]
fn face_reduction_identities_hold() {
    let t0 = Instant::now();
    let fd = FaceData::diagonal_cartan(&"A1".parse().unwrap()).unwrap();
    let report = verify_face_reduction(&fd, 30).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.checks, 31 * 31);
    for (big, small) in fd.generate_samples(30).unwrap() {
        let m = fd.embedding.branch(&big).unwrap().get(&small).copied();
        assert_eq!(m, Some(1), "({big}, {small})");
    }

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/face_diag_a2.json");
    let text = std::fs::read_to_string(path).unwrap();
    let fd2 = FaceData::from_json_value(&serde_json::from_str(&text).unwrap()).unwrap();
    let report = verify_face_reduction(&fd2, 8).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.checks, 9 * 9 * 9 * 9);
    assert!(t0.elapsed() < Duration::from_secs(120));
}

/// Fixed-point sums equal direct character values at 20 seeded regular
/// rational points for every highest weight with coordinates up to 3, and
/// singular points are rejected with the declared error.
#[test]
fn fixed_point_sums_match_character_values() {
    let t0 = Instant::now();
    for spec in ["A1", "A2"] {
        let rs = RootSystem::from_str_spec(spec).unwrap();
        let hws = dominant_box(&rs, 3);
        let report = verify_localization(&rs, &hws, 20, 23).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.checks as usize, 20 * hws.len());
        let ones = vec![num::BigRational::from_integer(1.into()); rs.rank()];
        assert!(matches!(
            fixed_point_value(&rs, &hws[hws.len() - 1], &ones),
            Err(Error::SingularPoint(_))
        ));
    }
    assert!(t0.elapsed() < Duration::from_secs(30));
}

/// Graded dimensions of the full symmetric algebra on torus weights:
/// weight list {1} carries exactly one monomial in every degree, and
/// {1, 2} carries floor(k/2)+1 at degree k, matching the brute-force count
/// of solutions of a + 2b = k.
#[test]
fn symmetric_algebra_truncations_have_exact_graded_dimensions() {
    let t0 = Instant::now();
    let t1 = RootSystem::from_str_spec("T1").unwrap();
    let single = FormalCharacter::from_coeffs(
        Arc::clone(&t1),
        BTreeMap::from([(w(&[1]), 1)]),
    )
    .unwrap();
    let pair = FormalCharacter::from_coeffs(
        Arc::clone(&t1),
        BTreeMap::from([(w(&[1]), 1), (w(&[2]), 1)]),
    )
    .unwrap();
    for k in 0..=50i64 {
        assert_eq!(total_sym_multiplicity(&single, &w(&[k])).unwrap(), 1);
        let mut brute = 0i64;
        for b in 0..=(k / 2) {
            if (k - 2 * b) >= 0 {
                brute += 1;
            }
        }
        assert_eq!(brute, k / 2 + 1);
        assert_eq!(total_sym_multiplicity(&pair, &w(&[k])).unwrap(), brute, "k={k}");
    }
    assert!(t0.elapsed() < Duration::from_secs(5));
}

/// Weight lists inside an open half-space admit a separating functional and
/// carry no invariants in degrees 1..40; the balanced list {1, -1} carries
/// its first invariant in degree 2 with a zero-combination certificate.
#[test]
fn half_space_weight_lists_have_trivial_invariants() {
    let t0 = Instant::now();
    let lists: [(&str, Vec<Vec<i64>>); 10] = [
        ("T1", vec![vec![1]]),
        ("T1", vec![vec![2]]),
        ("T1", vec![vec![1], vec![2]]),
        ("T1", vec![vec![1], vec![1], vec![2]]),
        ("T1", vec![vec![1], vec![2], vec![3]]),
        ("T1", vec![vec![3], vec![5]]),
        ("T2", vec![vec![1, 0], vec![0, 1]]),
        ("T2", vec![vec![1, 0], vec![1, 1]]),
        ("T2", vec![vec![2, 1], vec![1, 2]]),
        ("T3", vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
    ];
    for (spec, weights) in &lists {
        let rs = RootSystem::from_str_spec(spec).unwrap();
        let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
        for v in weights {
            *coeffs.entry(Weight(v.clone())).or_insert(0) += 1;
        }
        let ch = FormalCharacter::from_coeffs(Arc::clone(&rs), coeffs).unwrap();
        let si = sym_invariants(&ch, 40).unwrap();
        match &si.certificate {
            MomentCertificate::Separating(xi) => {
                for v in weights {
                    let p: i64 = v.iter().zip(xi).map(|(a, b)| a * b).sum();
                    assert!(p > 0, "{spec} {v:?} vs {xi:?}");
                }
            }
            MomentCertificate::ZeroCombination(_) => {
                panic!("{spec} {weights:?}: expected a separating functional")
            }
        }
        assert_eq!(si.dimensions[0], 1);
        for d in 1..=40 {
            assert_eq!(si.dimensions[d], 0, "{spec} {weights:?} degree {d}");
        }
    }

    let t1 = RootSystem::from_str_spec("T1").unwrap();
    let balanced = FormalCharacter::from_coeffs(
        Arc::clone(&t1),
        BTreeMap::from([(w(&[1]), 1), (w(&[-1]), 1)]),
    )
    .unwrap();
    let si = sym_invariants(&balanced, 4).unwrap();
    assert_eq!(si.dimensions, vec![1, 0, 1, 0, 1]);
    match &si.certificate {
        MomentCertificate::ZeroCombination(comb) => {
            use num::{One, Zero};
            let total: num::BigRational = comb.iter().map(|(_, c)| c.clone()).sum();
            assert!(total.is_one());
            let coord: num::BigRational = comb
                .iter()
                .map(|(v, c)| c * num::BigRational::from_integer(v.0[0].into()))
                .sum();
            assert!(coord.is_zero());
        }
        MomentCertificate::Separating(_) => panic!("expected a zero combination"),
    }
    assert!(t0.elapsed() < Duration::from_secs(60));
}

/// Exhaustive three-way branching consistency at small bounds.
#[test]
fn branching_consistency_is_exhaustive_at_small_bounds() {
    let t0 = Instant::now();
    let diag = Embedding::diagonal(&"A1".parse().unwrap()).unwrap();
    let report = verify_peter_weyl(&diag, 3).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    let torus = Embedding::maximal_torus(&"A2".parse().unwrap()).unwrap();
    let report = verify_peter_weyl(&torus, 2).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    let report = verify_peter_weyl(&diag, 0).unwrap();
    assert!(report.passed() && report.checks >= 1);
    assert!(t0.elapsed() < Duration::from_secs(30));
}
