//! The acceptance gate: one verdict line per criterion, all exact.
//!
//! Runs the full default certification envelope (4x4 straight box with flags
//! up to 4, 3x3 skew box, permutations through S_5, the lemma parameter
//! ranges, the beta = 0 regression, and the Laurent-expansion cross-check)
//! and prints `PASS`/`FAIL` for each criterion.  Run with `--nocapture` to
//! see the lines on success:
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

use flagged_groth::certify::{run_certify, CertifyConfig, Phase, PhaseReport};
use flagged_groth::oracle::all_permutations;
use flagged_groth::perm::{is_vexillary, Permutation};

struct Verdict {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn phase(report: &flagged_groth::certify::CertifyReport, which: Phase) -> &PhaseReport {
    report
        .phases
        .iter()
        .find(|p| p.phase == which)
        .unwrap_or_else(|| panic!("phase {which} missing from the report"))
}

fn clean(p: &PhaseReport) -> bool {
    p.failures == 0 && p.complete
}

fn describe(p: &PhaseReport) -> String {
    let mut detail = format!("{} cases in {} ms", p.cases, p.wall_ms);
    if let Some(ce) = &p.first_counterexample {
        detail.push_str(&format!(
            "; first counterexample: {} [{}]",
            ce.description, ce.reproduce
        ));
    }
    detail
}

#[test]
fn acceptance() {
    let config = CertifyConfig::default();
    let report = run_certify(&config);
    let mut verdicts: Vec<Verdict> = Vec::new();

    // 1: tableau sum = determinant with vanishing guard band, every straight
    // shape in the 4x4 box with flag entries up to 4, under two minutes.
    let straight = phase(&report, Phase::Straight);
    verdicts.push(Verdict {
        name: "straight shapes, tableaux vs determinant",
        passed: clean(straight) && straight.cases == 1302 && straight.wall_ms < 120_000,
        detail: describe(straight),
    });

    // 2: the same over every skew shape in the 3x3 box with upper flags up
    // to 4 and lower flags up to one above, hitting all four structural
    // hypotheses, under two minutes.
    let skew = phase(&report, Phase::Skew);
    let coverage = skew.coverage.expect("skew phase reports coverage");
    let covered = coverage.split_rows > 0
        && coverage.flag_recursion > 0
        && coverage.flag_bump > 0
        && coverage.vanishing > 0;
    verdicts.push(Verdict {
        name: "skew shapes, tableaux vs determinant",
        passed: clean(skew) && covered && skew.cases == 205_972 && skew.wall_ms < 120_000,
        detail: format!(
            "{}; hypothesis hits: split {}, recursion {}, bump {}, vanishing {}",
            describe(skew),
            coverage.split_rows,
            coverage.flag_recursion,
            coverage.flag_bump,
            coverage.vanishing
        ),
    });

    // 3: divided differences = tableau sum of the canonical flagged shape
    // for every vexillary permutation through S_5 (exactly 103 of the 120
    // elements of S_5), under one minute.
    let vexillary = phase(&report, Phase::Vexillary);
    let s5_vexillary = all_permutations(5)
        .into_iter()
        .filter(|word| is_vexillary(&Permutation::new(word.clone()).unwrap()))
        .count();
    verdicts.push(Verdict {
        name: "vexillary permutations through S_5",
        passed: clean(vexillary)
            && vexillary.cases == 135
            && s5_vexillary == 103
            && vexillary.wall_ms < 60_000,
        detail: format!("{}; {} vexillary in S_5", describe(vexillary), s5_vexillary),
    });

    // 4: the dominant-monomial divided-difference formula agrees with the
    // tableau sum over the criterion-1 range.
    let monomial = phase(&report, Phase::Monomial);
    verdicts.push(Verdict {
        name: "dominant-monomial formula vs tableaux",
        passed: clean(monomial) && monomial.cases == 1302,
        detail: describe(monomial),
    });

    // 5: the pinned running example w = 2,3,5,4,1: shape (2,1,1,1),
    // essential boxes {(3,4),(4,1)}, exactly three flaggings with equal
    // tableau sums.
    let example = phase(&report, Phase::Example);
    verdicts.push(Verdict {
        name: "pinned example w = 2,3,5,4,1",
        passed: clean(example) && example.cases == 6,
        detail: describe(example),
    });

    // 6: the one-row series lemma suite over caps through 5 with guard 2,
    // m in [-3, 5], p <= 4, q <= p+1, plus at least 100 seeded random
    // operator-identity pairs, under one minute.
    let lemmas = phase(&report, Phase::Lemmas);
    verdicts.push(Verdict {
        name: "one-row series lemma suite",
        passed: clean(lemmas) && lemmas.cases == 2800 && lemmas.wall_ms < 60_000,
        detail: describe(lemmas),
    });

    // 7: both routes at beta = 0 equal the independently coded classical
    // flagged determinant over the criterion-1 range.
    let beta_zero = phase(&report, Phase::BetaZero);
    verdicts.push(Verdict {
        name: "beta = 0 regression vs classical determinant",
        passed: clean(beta_zero) && beta_zero.cases == 1302,
        detail: describe(beta_zero),
    });

    // 8: the Laurent-coefficient expansion equals the determinant on all
    // retained degrees for shapes with at most three rows in the
    // criterion-1 range.
    let laurent = phase(&report, Phase::Laurent);
    verdicts.push(Verdict {
        name: "Laurent expansion vs determinant",
        passed: clean(laurent) && laurent.cases == 427,
        detail: describe(laurent),
    });

    let mut all_passed = true;
    for (i, verdict) in verdicts.iter().enumerate() {
        let label = if verdict.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {} ({}): {label} — {}",
            i + 1,
            verdict.name,
            verdict.detail
        );
        all_passed &= verdict.passed;
    }
    assert!(
        all_passed,
        "at least one acceptance criterion failed; see the lines above"
    );
    assert!(report.passed && report.complete);
}
