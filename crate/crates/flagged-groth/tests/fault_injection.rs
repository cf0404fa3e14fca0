//! Demonstrates that the certifier actually detects wrong arithmetic.
//!
//! A deliberately corrupted binomial coefficient feeds only the determinant
//! entries, so the phases comparing against determinants must fail while the
//! purely combinatorial phases (and the beta = 0 layer, which never sees the
//! corrupted coefficient) keep passing.  This lives in its own test binary
//! because the corruption switch is process-global.

use flagged_groth::certify::{run_certify, CertifyConfig, Phase};
use flagged_groth::poly::fault;

fn small() -> CertifyConfig {
    CertifyConfig {
        straight_rows: 2,
        straight_cols: 2,
        straight_flag_max: 2,
        skew_rows: 2,
        skew_cols: 2,
        skew_flag_max: 2,
        laurent_rows: 2,
        perm_size: 3,
        lemma_cap_max: 2,
        lemma_m_min: -2,
        lemma_m_max: 3,
        lemma_p_max: 2,
        random_pairs: 8,
        seed: 7,
        ..CertifyConfig::default()
    }
}

#[test]
fn corrupted_binomials_fail_exactly_the_determinant_phases() {
    let config = small();

    fault::set_binomial_corruption(true);
    let corrupted = run_certify(&config);
    fault::set_binomial_corruption(false);
    let clean = run_certify(&config);

    assert!(
        clean.passed,
        "the clean rerun must pass: {:#?}",
        clean.phases
    );

    for phase in &corrupted.phases {
        let should_fail = matches!(phase.phase, Phase::Straight | Phase::Skew | Phase::Laurent);
        if should_fail {
            assert!(
                phase.failures > 0,
                "corruption must surface in the {} phase",
                phase.phase
            );
            let ce = phase
                .first_counterexample
                .as_ref()
                .expect("failing phases carry a counterexample");
            assert!(!ce.description.is_empty());
            assert!(ce.reproduce.starts_with("flagged-groth "));
        } else {
            assert_eq!(
                phase.failures, 0,
                "corruption must not leak into the {} phase",
                phase.phase
            );
        }
    }
    assert!(!corrupted.passed);
}
