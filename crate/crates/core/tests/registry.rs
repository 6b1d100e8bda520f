//! Every registered check runs green (or is explicitly skipped) at rank 3
//! with a fast configuration.

use glhat::checks::{registry, run_check, CheckConfig, CheckStatus};
use glhat::scalar::{ParamPoint, Rational};

#[test]
fn whole_registry_at_rank_three() {
    let cfg = CheckConfig {
        cutoff: 10,
        m_max: 2,
        s_range: (-3, 3),
        trials: 40,
        ..CheckConfig::default()
    };
    let params = ParamPoint::new(Rational::new(1, 2), Rational::new(1, 3), 3, true).unwrap();
    let mut failures = Vec::new();
    for def in registry() {
        let report = run_check(def.id, 3, Some(&params), &cfg);
        match report.status {
            CheckStatus::Pass => {}
            CheckStatus::Skipped => {
                assert_eq!(def.id, "rank2_braid_g2", "unexpected skip: {}", def.id);
            }
            _ => failures.push(format!(
                "{}: {} ({:?})",
                def.id, report.status, report.counterexample
            )),
        }
    }
    assert!(failures.is_empty(), "failing checks:\n{}", failures.join("\n"));
}
