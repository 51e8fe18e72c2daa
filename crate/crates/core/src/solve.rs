//! Solver selection for a single CRCS instance.

use std::fmt;
use std::str::FromStr;

use crate::coloring::Instance;
use crate::error::{Error, Result};
use crate::oracle::{crcs_reachable, ecrcs_reachable, Decision, SearchBudget};
use crate::swap::ReconfSequence;
use crate::{cograph, path, small_k, split};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Solver {
    Auto,
    Oracle,
    Path,
    Cograph,
    Split,
    K2,
}

impl Solver {
    pub const ALL: [Solver; 6] = [
        Solver::Auto,
        Solver::Oracle,
        Solver::Path,
        Solver::Cograph,
        Solver::Split,
        Solver::K2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solver::Auto => "auto",
            Solver::Oracle => "oracle",
            Solver::Path => "path",
            Solver::Cograph => "cograph",
            Solver::Split => "split",
            Solver::K2 => "k2",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Solver::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::IllFormed(format!("unknown solver {s:?}")))
    }
}

/// What a solver run produced. `answer` is `None` when the oracle ran out of
/// budget; `witness` is only ever filled by the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub solver: Solver,
    pub answer: Option<bool>,
    pub witness: Option<ReconfSequence>,
    pub states_explored: Option<usize>,
}

/// The solver `auto` resolves to: k <= 2, then path with k = 3, cograph,
/// split, and finally the oracle. Solvers that only take plain colorings are
/// skipped for extended instances.
pub fn select(instance: &Instance) -> Solver {
    let plain = !instance.is_extended();
    if plain && instance.k <= 2 {
        Solver::K2
    } else if plain && instance.k == 3 && path::path_order(&instance.graph).is_ok() {
        Solver::Path
    } else if cograph::build_cotree(&instance.graph).is_ok() {
        Solver::Cograph
    } else if plain && split::split_partition(&instance.graph).is_ok() {
        Solver::Split
    } else {
        Solver::Oracle
    }
}

pub fn solve(instance: &Instance, solver: Solver, budget: &SearchBudget) -> Result<Report> {
    let solver = match solver {
        Solver::Auto => select(instance),
        s => s,
    };
    let decided = |answer: bool| Report {
        solver,
        answer: Some(answer),
        witness: None,
        states_explored: None,
    };
    match solver {
        Solver::Auto => unreachable!("resolved above"),
        Solver::K2 => small_k::solve_k_le_2(instance).map(decided),
        Solver::Path => path::solve_path(instance).map(decided),
        Solver::Cograph => cograph::solve_crcs_cograph(instance).map(decided),
        Solver::Split => split::solve_split(instance).map(decided),
        Solver::Oracle => {
            let decision = if instance.is_extended() {
                ecrcs_reachable(instance, budget)
            } else {
                crcs_reachable(instance, budget)?
            };
            Ok(match decision {
                Decision::Yes(w) => Report {
                    witness: Some(w),
                    ..decided(true)
                },
                Decision::No => decided(false),
                Decision::Overflow { states_explored } => Report {
                    solver,
                    answer: None,
                    witness: None,
                    states_explored: Some(states_explored),
                },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::fixtures::example_instance;
    use crate::graph::Graph;

    #[test]
    fn auto_dispatch_order() {
        let two = Instance::from_slices(Graph::path(3), 2, &[1, 2, 1], &[1, 2, 1]).unwrap();
        assert_eq!(select(&two), Solver::K2);
        let p = Instance::from_slices(Graph::path(3), 3, &[1, 2, 3], &[3, 2, 1]).unwrap();
        assert_eq!(select(&p), Solver::Path);
        let p4 = Instance::from_slices(Graph::path(4), 4, &[1, 2, 3, 4], &[1, 2, 3, 4]).unwrap();
        assert_eq!(select(&p4), Solver::Split);
        let c5 = Instance::from_slices(Graph::cycle(5), 3, &[1, 2, 1, 2, 3], &[1, 2, 1, 2, 3]).unwrap();
        assert_eq!(select(&c5), Solver::Oracle);
        let k13 = Instance::from_slices(Graph::star(3), 3, &[1, 2, 2, 3], &[1, 2, 2, 3]).unwrap();
        assert_eq!(select(&k13), Solver::Cograph);
        let bull = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let b = Instance::from_slices(bull, 3, &[1, 2, 3, 1, 1], &[1, 2, 3, 1, 1]).unwrap();
        assert_eq!(select(&b), Solver::Split);
        assert_eq!(select(&example_instance()), Solver::Oracle);
    }

    #[test]
    fn oracle_gives_witness_and_others_do_not() {
        let inst = example_instance();
        let r = solve(&inst, Solver::Oracle, &SearchBudget::default()).unwrap();
        assert_eq!(r.answer, Some(true));
        assert_eq!(r.witness.unwrap().len(), 3);
        let p = Instance::from_slices(Graph::path(3), 3, &[1, 2, 3], &[3, 2, 1]).unwrap();
        let r = solve(&p, Solver::Auto, &SearchBudget::default()).unwrap();
        assert_eq!((r.solver, r.answer, r.witness), (Solver::Path, Some(true), None));
    }

    #[test]
    fn forced_mismatch_is_an_error() {
        let inst = example_instance();
        let b = SearchBudget::default();
        assert!(matches!(solve(&inst, Solver::Path, &b), Err(Error::WrongSolver(_))));
        assert!(matches!(solve(&inst, Solver::Cograph, &b), Err(Error::NotACograph)));
        assert!(matches!(solve(&inst, Solver::Split, &b), Err(Error::NotSplit)));
        assert!(matches!(solve(&inst, Solver::K2, &b), Err(Error::WrongSolver(_))));
    }

    #[test]
    fn overflow_is_reported() {
        let inst = example_instance();
        let r = solve(&inst, Solver::Oracle, &SearchBudget::states(2)).unwrap();
        assert_eq!(r.answer, None);
        assert!(r.states_explored.is_some());
    }

    #[test]
    fn names_round_trip() {
        for s in Solver::ALL {
            assert_eq!(s.name().parse::<Solver>().unwrap(), s);
        }
        assert!("bfs".parse::<Solver>().is_err());
    }
}
