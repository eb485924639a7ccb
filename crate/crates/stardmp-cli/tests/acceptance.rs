//! Acceptance suite: every criterion runs at zero tolerance (exact
//! arithmetic) and prints one pass/fail line. Run with
//! `cargo test -p stardmp-cli --test acceptance -- --nocapture` to see the
//! lines.

use std::fmt;
use std::process::Command;
use std::time::{Duration, Instant};

use stardmp::analysis::{is_ep, star_dmp_index};
use stardmp::catalog::{concordant, evaluate_all};
use stardmp::finite::{brute_force_inverse, FiniteCarrier, ZnRing};
use stardmp::matrix::{FpMatrixRing, GaussianMatrixRing, Matrix};
use stardmp::ring::{ExistenceResult, InverseKind, Involution, Inverses, StarRing};
use stardmp::scalar::{GaussianField, GaussianRational};
use stardmp::suite::{
    random_gaussian_elements, run_theorem, search_counterexample, CounterProperty, Counterexample,
    RunConfig, SuiteVerdict, Universe,
};
use stardmp::DEFAULT_BUDGET;

fn criterion(n: u32, ok: bool, what: &str) {
    println!("criterion {n}: {} - {what}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {what}");
}

fn gm(rows: &[&[&str]]) -> Matrix<GaussianRational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|e| e.parse().unwrap()).collect())
            .collect(),
    )
}

fn assert_pass(id: &str, u: &Universe, cfg: &RunConfig) -> u64 {
    let r = run_theorem(id, u, cfg).expect("check runs");
    assert_eq!(
        r.verdict,
        SuiteVerdict::Pass,
        "{id} on {u}: {:?}",
        r.violations
    );
    r.instances
}

/// Worked-example reproduction: the fixed pair under the transpose
/// involution, with the stated pseudo core inverse, vanishing products,
/// and a sum none of whose powers is {1,3}-invertible.
#[test]
fn criterion_1_worked_example_reproduction() {
    let t0 = Instant::now();
    let ring = GaussianMatrixRing::new(2, Involution::Transpose).unwrap();
    let a = gm(&[&["i", "0"], &["0", "0"]]);
    let b = gm(&[&["0", "0"], &["-1", "0"]]);
    let sum = ring.add(&a, &b);

    let pc = ring.pseudo_core(&a).into_witness().unwrap();
    let mut ok = pc.value == gm(&[&["-i", "0"], &["0", "0"]]) && pc.index == Some(1);
    ok &= ring.is_zero(&ring.mul(&a, &b));
    ok &= ring.is_zero(&ring.mul(&ring.star(&a), &b));
    ok &= !ring.is_zero(&ring.mul(&b, &a));
    ok &= !ring.one_three(&sum).exists();
    ok &= !ring.one_three(&ring.mul(&sum, &sum)).exists();
    ok &= star_dmp_index(&ring, &sum).is_none();
    ok &= assert_pass(
        "E2.17",
        &Universe::GaussianFixed {
            involution: Involution::Transpose,
        },
        &RunConfig::default(),
    ) > 0;
    let elapsed = t0.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    criterion(
        1,
        ok,
        &format!("worked 2x2 pair reproduced exactly in {elapsed:.2?} (< 1 s)"),
    );
}

/// The EP/normal independence pair under the transpose involution.
#[test]
fn criterion_2_ep_normal_independence_pair() {
    let t0 = Instant::now();
    let ring = GaussianMatrixRing::new(2, Involution::Transpose).unwrap();

    let ep_not_normal = gm(&[&["1", "1"], &["0", "1"]]);
    let mut ok = is_ep(&ring, &ep_not_normal);
    ok &= !ring.is_normal(&ep_not_normal);
    ok &= ring.mul(&ep_not_normal, &ring.star(&ep_not_normal))
        == gm(&[&["2", "1"], &["1", "1"]]);

    let normal_not_ep = gm(&[&["i", "1"], &["-1", "i"]]);
    ok &= ring.is_normal(&normal_not_ep);
    ok &= ring
        .mul(&normal_not_ep, &ring.star(&normal_not_ep))
        .is_zero(&GaussianField);
    ok &= !ring.moore_penrose(&normal_not_ep).exists();
    ok &= !is_ep(&ring, &normal_not_ep);

    let elapsed = t0.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    criterion(
        2,
        ok,
        &format!("EP-without-normal and normal-without-EP verified in {elapsed:.2?} (< 1 s)"),
    );
}

fn concordance_violations<C: Inverses>(carrier: &C, elems: &[C::Elem]) -> (u64, u64)
where
    C::Elem: fmt::Display,
{
    let mut instances = 0;
    let mut violations = 0;
    for a in elems {
        let dmp = star_dmp_index(carrier, a);
        for (id, vote) in evaluate_all(carrier, a) {
            instances += 1;
            if !concordant(&vote, dmp) {
                violations += 1;
                eprintln!("violation: {id} on {a}: {vote:?} vs {dmp:?}");
            }
        }
    }
    (instances, violations)
}

/// Exhaustive catalog concordance: every element of Z_n for n in [2, 24]
/// and every 2x2 matrix over F_2 and F_3, all 22 registered
/// characterizations against the definitional verdict and index.
#[test]
fn criterion_3_exhaustive_characterization_concordance() {
    let t0 = Instant::now();
    let mut instances = 0;
    let mut violations = 0;
    for n in 2..=24u64 {
        let zn = ZnRing::new(n).unwrap();
        let elems = zn.enumerate(DEFAULT_BUDGET).unwrap();
        let (i, v) = concordance_violations(&zn, &elems);
        instances += i;
        violations += v;
    }
    for p in [2u64, 3] {
        let fp = FpMatrixRing::new(p, 2).unwrap();
        let elems = fp.enumerate(DEFAULT_BUDGET).unwrap();
        let (i, v) = concordance_violations(&fp, &elems);
        instances += i;
        violations += v;
    }
    let elapsed = t0.elapsed();
    let ok = violations == 0 && elapsed < Duration::from_secs(300);
    criterion(
        3,
        ok,
        &format!(
            "{instances} characterization votes, {violations} violations, {elapsed:.2?} (< 5 min)"
        ),
    );
}

fn oracle_violations<C: FiniteCarrier>(carrier: &C, elems: &[C::Elem]) -> (u64, u64)
where
    C::Elem: fmt::Display,
{
    let mut instances = 0;
    let mut violations = 0;
    let mut check = |ok: bool, msg: String| {
        instances += 1;
        if !ok {
            violations += 1;
            eprintln!("oracle violation: {msg}");
        }
    };
    for a in elems {
        // Unique kinds: the constructive witness must be the oracle's
        // single minimal-index solution (or both sides must be absent).
        let d = carrier.drazin(a);
        let sols = brute_force_inverse(carrier, InverseKind::Drazin, a, DEFAULT_BUDGET).unwrap();
        check(
            sols.len() == 1 && carrier.eq(&sols[0].0, &d.value) && sols[0].1 == d.index,
            format!("drazin of {a}: {} oracle solutions", sols.len()),
        );
        for (kind, constructive) in [
            (InverseKind::MoorePenrose, carrier.moore_penrose(a)),
            (InverseKind::Group, carrier.group(a)),
            (InverseKind::Core, carrier.core(a)),
            (InverseKind::PseudoCore, carrier.pseudo_core(a)),
            (InverseKind::DualPseudoCore, carrier.dual_pseudo_core(a)),
        ] {
            let sols = brute_force_inverse(carrier, kind, a, DEFAULT_BUDGET).unwrap();
            match constructive {
                ExistenceResult::Exists(w) => check(
                    sols.len() == 1
                        && carrier.eq(&sols[0].0, &w.value)
                        && (!kind.indexed() || sols[0].1 == w.index),
                    format!("{kind} of {a}: oracle {} solutions", sols.len()),
                ),
                ExistenceResult::NotExists(_) => check(
                    sols.is_empty(),
                    format!("{kind} of {a}: absent constructively but oracle found solutions"),
                ),
            }
        }
        // {1,3}-inverses need not be unique: the canonical witness must be
        // among the oracle solutions, and existence must agree.
        let sols = brute_force_inverse(carrier, InverseKind::OneThree, a, DEFAULT_BUDGET).unwrap();
        match carrier.one_three(a) {
            ExistenceResult::Exists(w) => check(
                sols.iter().any(|(x, _)| carrier.eq(x, &w.value)),
                format!("one-three of {a}: canonical witness not in the oracle set"),
            ),
            ExistenceResult::NotExists(_) => check(
                sols.is_empty(),
                format!("one-three of {a}: existence disagrees with the oracle"),
            ),
        }
    }
    (instances, violations)
}

/// Constructive routes against the brute-force oracle on the same
/// exhaustive universes, with exact uniqueness counts.
#[test]
fn criterion_4_oracle_equivalence_and_uniqueness() {
    let t0 = Instant::now();
    let mut instances = 0;
    let mut violations = 0;
    for n in 2..=24u64 {
        let zn = ZnRing::new(n).unwrap();
        let elems = zn.enumerate(DEFAULT_BUDGET).unwrap();
        let (i, v) = oracle_violations(&zn, &elems);
        instances += i;
        violations += v;
    }
    for p in [2u64, 3] {
        let fp = FpMatrixRing::new(p, 2).unwrap();
        let elems = fp.enumerate(DEFAULT_BUDGET).unwrap();
        let (i, v) = oracle_violations(&fp, &elems);
        instances += i;
        violations += v;
    }
    let elapsed = t0.elapsed();
    criterion(
        4,
        violations == 0,
        &format!("{instances} oracle comparisons, {violations} violations, {elapsed:.2?}"),
    );
}

/// Seeded random matrices, sizes 1-4 under both involutions: every
/// produced witness re-verifies, the power identity (a^D)^m = (a^m)^+
/// holds on every *-DMP instance, and the core inverse of the
/// decomposition part equals the pseudo core inverse on every
/// pseudo-core-invertible instance.
#[test]
fn criterion_5_randomized_matrix_suite() {
    let t0 = Instant::now();
    let mut tested = 0u64;
    let mut dmp_instances = 0u64;
    let mut pc_instances = 0u64;
    let mut violations = 0u64;
    for n in 1..=4usize {
        for involution in [Involution::Transpose, Involution::ConjugateTranspose] {
            let ring = GaussianMatrixRing::new(n, involution).unwrap();
            let seed = 1000 + n as u64;
            for a in random_gaussian_elements(n, 1000, seed) {
                tested += 1;
                let d = ring.drazin(&a);
                let m = d.index();
                let mut witness_ok = d.verified;
                let mp = ring.moore_penrose(&a).into_witness();
                let pc = ring.pseudo_core(&a).into_witness();
                let dpc = ring.dual_pseudo_core(&a).into_witness();
                let ot = ring.one_three(&a).into_witness();
                for w in [&mp, &pc, &dpc, &ot].into_iter().flatten() {
                    witness_ok &= w.verified;
                }
                if !witness_ok {
                    violations += 1;
                    eprintln!("unverified witness for {a}");
                }
                if ring.is_symmetric(&ring.mul(&a, &d.value)) {
                    dmp_instances += 1;
                    let power_mp = if m == 1 {
                        mp.clone()
                    } else {
                        ring.moore_penrose(&ring.power(&a, m)).into_witness()
                    };
                    let identity_holds = power_mp
                        .as_ref()
                        .is_some_and(|w| ring.power(&d.value, m) == w.value);
                    if !identity_holds {
                        violations += 1;
                        eprintln!("(a^D)^m != (a^m)^+ for {a}");
                    }
                }
                if let Some(pc) = &pc {
                    pc_instances += 1;
                    let a1 = ring.mul(&ring.mul(&a, &pc.value), &a);
                    let agreed = ring
                        .core(&a1)
                        .into_witness()
                        .is_some_and(|c| c.value == pc.value);
                    if !agreed {
                        violations += 1;
                        eprintln!("core of the decomposition part differs from a^(s) for {a}");
                    }
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    let ok = violations == 0 && tested == 8000 && elapsed < Duration::from_secs(120);
    criterion(
        5,
        ok,
        &format!(
            "{tested} random matrices ({dmp_instances} *-DMP, {pc_instances} pseudo-core-invertible), {violations} violations, {elapsed:.2?} (< 2 min)"
        ),
    );
}

/// Decomposition axioms and uniqueness, exhaustively on Z_8 and 2x2 over
/// F_2 and on the randomized matrix sample; coincidence with the
/// core-nilpotent decomposition on every *-DMP instance.
#[test]
fn criterion_6_decomposition_suite() {
    let cfg = RunConfig::default();
    let finite = [
        Universe::Zn { n: 8 },
        Universe::FpMatrices { p: 2, k: 2 },
    ];
    let random = [
        Universe::GaussianRandom {
            n: 2,
            involution: Involution::ConjugateTranspose,
            count: 60,
        },
        Universe::GaussianRandom {
            n: 3,
            involution: Involution::ConjugateTranspose,
            count: 25,
        },
    ];
    let mut ok = true;
    let mut instances = 0;
    for u in finite.iter().chain(random.iter()) {
        instances += assert_pass("T3.1", u, &cfg);
        instances += assert_pass("T3.2", u, &cfg);
        instances += assert_pass("R3.5", u, &cfg);
        ok &= true;
    }
    criterion(
        6,
        ok && instances > 0,
        &format!("decomposition axioms, uniqueness and coincidence over {instances} instances"),
    );
}

/// Order suite: reflexivity and transitivity exhaustively on 2x2 over F_2,
/// a stored anti-symmetry counterexample, the three-way equivalence on all
/// tested pairs, and non-vacuous four-way/two-way checks.
#[test]
fn criterion_7_order_suite() {
    let cfg = RunConfig::default();
    let fp = Universe::FpMatrices { p: 2, k: 2 };
    let mut ok = true;

    let t42 = assert_pass("T4.2", &fp, &cfg);
    ok &= t42 > 0;
    assert_pass("T4.2", &Universe::Zn { n: 8 }, &cfg);

    // The anti-symmetry counterexample is found and matches the stored
    // regression fixture.
    let found = search_counterexample(CounterProperty::OrderAntisymmetry, &fp, &cfg)
        .unwrap()
        .expect("anti-symmetry violation exists on 2x2 over F_2");
    let fixtures: Vec<Counterexample> =
        serde_json::from_str(include_str!("fixtures/counterexamples.json")).unwrap();
    ok &= fixtures.contains(&found);

    for u in [
        Universe::Zn { n: 12 },
        fp.clone(),
        Universe::GaussianRandom {
            n: 2,
            involution: Involution::ConjugateTranspose,
            count: 30,
        },
        Universe::GaussianRandom {
            n: 2,
            involution: Involution::Transpose,
            count: 30,
        },
    ] {
        ok &= assert_pass("T4.3", &u, &cfg) > 0;
    }
    let mut t44 = 0;
    let mut t45 = 0;
    for u in [Universe::Zn { n: 12 }, fp] {
        t44 += assert_pass("T4.4", &u, &cfg);
        t45 += assert_pass("T4.5", &u, &cfg);
    }
    ok &= t44 > 0 && t45 > 0;
    criterion(
        7,
        ok,
        &format!("pre-order laws, stored counterexample, {t44}/{t45} non-vacuous instances"),
    );
}

/// The projector-equality batteries on exhaustive pairs of Z_15 and 2x2
/// over F_2, and the dual-pair conditions wherever both inverses exist.
#[test]
fn criterion_8_projector_battery() {
    let cfg = RunConfig::default();
    let mut instances = 0;
    for u in [Universe::Zn { n: 15 }, Universe::FpMatrices { p: 2, k: 2 }] {
        instances += assert_pass("P5.1", &u, &cfg);
        instances += assert_pass("T5.2", &u, &cfg);
        instances += assert_pass("C5.3", &u, &cfg);
    }
    criterion(
        8,
        instances > 0,
        &format!("four-way, six-way and dual-pair equivalences over {instances} instances"),
    );
}

/// Suite hygiene through the command line: no vacuous verdicts for the
/// hypothesis-heavy statements on the default universes, and byte-identical
/// reports across two runs with the same seed.
#[test]
fn criterion_9_suite_hygiene() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_stardmp"))
            .args(["verify", "--seed", "17"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let mut ok = first.status.code() == Some(0);
    ok &= first.stdout == second.stdout;

    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    ok &= report["summary"]["fail"] == 0;
    ok &= report["all_non_vacuous_pass"] == true;
    let results = report["results"].as_array().unwrap();
    let mut hygiene_counts = [0u64; 4];
    for r in results {
        let id = r["id"].as_str().unwrap();
        if let Some(slot) = ["T2.15", "T2.16", "T4.4", "T4.5"]
            .iter()
            .position(|x| *x == id)
        {
            hygiene_counts[slot] += 1;
            if r["verdict"] == "vacuous" {
                ok = false;
                eprintln!("vacuous verdict: {id} on {}", r["universe"]);
            }
        }
    }
    ok &= hygiene_counts.iter().all(|&c| c > 0);
    criterion(
        9,
        ok,
        &format!(
            "cmd_verify deterministic ({} bytes), zero vacuous hygiene verdicts across {:?} runs",
            first.stdout.len(),
            hygiene_counts
        ),
    );
}
