//! Acceptance gate: one test per criterion, each printing a single
//! `criterion N: PASS/FAIL` line (visible with `--nocapture`). Every check
//! uses exact integer comparisons except where a tolerance is stated.

use projgap::bounds::{
    c_const, evaluate_bound, g_exact, segment_gap_profile, slab_gap_formula, slab_size,
};
use projgap::compress::compute_s;
use projgap::oracle::{max_s_bruteforce, min_gap_bruteforce, SearchOptions};
use projgap::verify::{
    check_fixed_point_structure, check_segments_ccc_fixed, check_segments_match_slabs, run_verify,
    Suite, VerifyConfig,
};
use projgap::{construct_a_n, initial_segment};

fn report(criterion: usize, description: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("criterion {criterion}: PASS — {description}"),
        Err(msg) => {
            println!("criterion {criterion}: FAIL — {description}: {msg}");
            panic!("criterion {criterion} failed: {msg}");
        }
    }
}

fn ensure(condition: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_1_search_equals_segments() {
    report(
        1,
        "exhaustive minimum gap equals the initial-segment gap (n=2 m<=10, n=3 m<=12)",
        (|| {
            let opts = SearchOptions::default();
            for (dim, m_max) in [(2usize, 10usize), (3, 12)] {
                for m in 0..=m_max {
                    let brute = min_gap_bruteforce(dim, m, &opts).map_err(|e| e.to_string())?;
                    let segment = g_exact(dim, m).map_err(|e| e.to_string())?;
                    ensure(brute.value == segment.value, || {
                        format!(
                            "n={dim} m={m}: search found {} but the segment gives {}",
                            brute.value, segment.value
                        )
                    })?;
                    ensure(brute.exhaustive == Some(true), || {
                        format!("n={dim} m={m}: search was not exhaustive")
                    })?;
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_2_slab_gaps_in_closed_form() {
    report(
        2,
        "g(n, N^n-(N-1)^n) = n N^(n-1) - N^n + (N-1)^n for n in 2..=5, N in 1..=6",
        (|| {
            for dim in 2..=5usize {
                for side in 1..=6u64 {
                    let m = slab_size(dim, side).map_err(|e| e.to_string())? as usize;
                    let expected = slab_gap_formula(dim, side).map_err(|e| e.to_string())?;
                    let cert = g_exact(dim, m).map_err(|e| e.to_string())?;
                    ensure(cert.value == expected, || {
                        format!(
                            "n={dim} N={side} (m={m}): exact {} vs formula {expected}",
                            cert.value
                        )
                    })?;
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_3_lower_bound_up_to_2000() {
    report(
        3,
        "exact gap >= c_n m^(1-1/(n-1)) - 1e-9 for n in {3,4}, m <= 2000",
        (|| {
            for dim in [3usize, 4] {
                let profile = segment_gap_profile(dim, 2000).map_err(|e| e.to_string())?;
                let c = c_const(dim).map_err(|e| e.to_string())?;
                let exponent = 1.0 - 1.0 / (dim as f64 - 1.0);
                for (m, &gap) in profile.iter().enumerate() {
                    let bound = if m == 0 {
                        0.0
                    } else {
                        c * (m as f64).powf(exponent)
                    };
                    ensure((gap as f64) >= bound - 1e-9, || {
                        format!("n={dim} m={m}: exact {gap} below bound {bound:.9}")
                    })?;
                }
                // The profile is the same quantity g_exact computes pointwise.
                for m in [0usize, 1, 7, 500, 2000] {
                    let cert = g_exact(dim, m).map_err(|e| e.to_string())?;
                    ensure(profile[m] == cert.value, || {
                        format!(
                            "n={dim} m={m}: profile {} vs exact {}",
                            profile[m], cert.value
                        )
                    })?;
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_4_ratio_at_m_1141() {
    report(
        4,
        "n=3, m=1141: exact value 59 and ratio within [1.0, 1.02]",
        (|| {
            let row = evaluate_bound(3, 1141).map_err(|e| e.to_string())?;
            ensure(row.exact == 59, || format!("exact gap is {}", row.exact))?;
            let ratio = row.ratio.ok_or_else(|| "ratio undefined".to_string())?;
            ensure((1.0..=1.02).contains(&ratio), || {
                format!("ratio {ratio} outside [1.0, 1.02]")
            })?;
            Ok(())
        })(),
    );
}

#[test]
fn criterion_5_s_maximization_oracle() {
    report(
        5,
        "exhaustive |S| maximum equals |S(initial segment)| (n in {2,3}, m <= 10)",
        (|| {
            let opts = SearchOptions::default();
            for dim in [2usize, 3] {
                for m in 0..=10usize {
                    let brute = max_s_bruteforce(dim, m, &opts).map_err(|e| e.to_string())?;
                    let segment = initial_segment(dim, m)
                        .map_err(|e| e.to_string())?
                        .to_point_set();
                    let s = compute_s(&segment).map_err(|e| e.to_string())?;
                    ensure(brute.value == s.len() as i64, || {
                        format!(
                            "n={dim} m={m}: search found {} but the segment gives {}",
                            brute.value,
                            s.len()
                        )
                    })?;
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_6_lemma_suite_seed_0() {
    report(
        6,
        "lemma property suite: seed 0, 1000 cases, n in {2,3,4}, zero failures",
        (|| {
            let config = VerifyConfig {
                suite: Suite::Lemmas,
                n_max: 4,
                m_max: 10,
                seed: 0,
                cases: 1000,
                workers: 1,
            };
            let verify_report = run_verify(&config);
            for outcome in &verify_report.outcomes {
                ensure(outcome.failures == 0, || {
                    format!(
                        "{} failed {} of {} cases ({})",
                        outcome.name,
                        outcome.failures,
                        outcome.cases,
                        outcome
                            .first_failure
                            .clone()
                            .unwrap_or_else(|| "no detail".into())
                    )
                })?;
            }
            // The named lemma families must all be present in the suite.
            for name in [
                "weak-antichain-gap-nonnegative",
                "compression-projection-containment",
                "complete-compression-monotone",
                "reduction-postconditions",
                "balanced-compression-monotone",
                "weak-antichain-layer-decomposable",
            ] {
                ensure(
                    verify_report.outcomes.iter().any(|o| o.name == name),
                    || format!("suite is missing the {name} property"),
                )?;
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_7_fixed_point_structure() {
    report(
        7,
        "all balanced-compression fixed down-sets in X_3 with |A| <= 12 satisfy the boundary structure",
        (|| {
            let outcome = check_fixed_point_structure(12);
            ensure(outcome.failures == 0, || {
                outcome
                    .first_failure
                    .clone()
                    .unwrap_or_else(|| "unnamed failure".into())
            })?;
            // Initial segments are fixed points, so the sweep must have
            // found at least one fixed set per size.
            ensure(outcome.cases >= 12, || {
                format!("only {} fixed sets inspected", outcome.cases)
            })?;
            Ok(())
        })(),
    );
}

#[test]
fn criterion_8_segments_are_fixed_and_match_slabs() {
    report(
        8,
        "initial segments are compression-fixed (n<=4, m<=50) and realize the slabs (n<=4, N<=5)",
        (|| {
            let fixed = check_segments_ccc_fixed(4, 50);
            ensure(fixed.failures == 0, || {
                fixed
                    .first_failure
                    .clone()
                    .unwrap_or_else(|| "unnamed failure".into())
            })?;
            let slabs = check_segments_match_slabs(4, 5);
            ensure(slabs.failures == 0, || {
                slabs
                    .first_failure
                    .clone()
                    .unwrap_or_else(|| "unnamed failure".into())
            })?;
            // Direct spot check of the identity behind the slab property.
            for dim in 2..=4usize {
                for side in 1..=5u64 {
                    let m = slab_size(dim, side).map_err(|e| e.to_string())? as usize;
                    let segment = initial_segment(dim, m)
                        .map_err(|e| e.to_string())?
                        .to_point_set();
                    let slab = construct_a_n(dim, side).map_err(|e| e.to_string())?;
                    ensure(segment == slab, || {
                        format!("n={dim} N={side}: segment of size {m} differs from the slab")
                    })?;
                }
            }
            Ok(())
        })(),
    );
}
