use crcs::gen::{generate, GraphKind};
use crcs::oracle::{ecrcs_reachable, SearchBudget};
use crcs::solve::{select, solve, Solver};

/// Every polynomial route through `auto` agrees with exhaustive search.
#[test]
fn auto_matches_oracle() {
    let budget = SearchBudget::default();
    let mut used = std::collections::HashSet::new();
    for (kind, ns, ks) in [
        (GraphKind::Path, 1..=9, 2..=3),
        (GraphKind::Cograph, 1..=7, 2..=4),
        (GraphKind::Split, 1..=9, 2..=4),
        (GraphKind::Random, 1..=7, 2..=4),
    ] {
        for n in ns {
            for k in ks.clone() {
                for seed in 0..12 {
                    let Ok(inst) = generate(kind, n, k, seed % 3 != 0, seed) else { continue };
                    let report = solve(&inst, Solver::Auto, &budget).unwrap();
                    used.insert(select(&inst));
                    let truth = ecrcs_reachable(&inst, &budget).outcome();
                    assert_eq!(report.answer, truth, "{kind:?} {inst:?}");
                }
            }
        }
    }
    for s in [Solver::K2, Solver::Path, Solver::Cograph, Solver::Split, Solver::Oracle] {
        assert!(used.contains(&s), "{s} never selected");
    }
}
