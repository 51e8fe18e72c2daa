//! Split graph recognition, twin-based reduction rules and a kernel-then-
//! search solver.

use crate::coloring::{Color, Instance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{crcs_reachable, Decision, SearchBudget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    /// Sorted clique vertices.
    pub clique: Vec<usize>,
    /// Sorted independent vertices.
    pub independent: Vec<usize>,
}

/// Partition into a clique and an independent set, via the degree sequence.
///
/// When one clique vertex has no neighbor in the independent side it is
/// moved across (the lowest such id), so `K1,3` splits as center / leaves.
pub fn split_partition(graph: &Graph) -> Result<SplitPartition> {
    let n = graph.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| graph.degree(v)).collect();
    // largest m with d_m >= m - 1 (1-based)
    let m = (1..=n).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(Error::NotSplit);
    }
    let mut clique: Vec<usize> = order[..m].to_vec();
    let mut independent: Vec<usize> = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    if !graph.is_clique(&clique) || !graph.is_independent(&independent) {
        return Err(Error::NotSplit);
    }
    if !independent.is_empty() {
        let free = clique
            .iter()
            .position(|&c| graph.neighbors(c).iter().all(|w| clique.contains(w)));
        if let Some(i) = free {
            let v = clique.remove(i);
            independent.push(v);
            independent.sort_unstable();
        }
    }
    Ok(SplitPartition { clique, independent })
}

/// Independent-side vertices grouped by (neighborhood, source color), in
/// order of each group's smallest id.
fn twin_classes(instance: &Instance, part: &SplitPartition) -> Vec<Vec<usize>> {
    let mut keyed: Vec<((&[usize], Color), usize)> = part
        .independent
        .iter()
        .map(|&v| ((instance.graph.neighbors(v), instance.source.get(v)), v))
        .collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, &(key, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == key {
            classes.last_mut().expect("non-empty").push(v);
        } else {
            classes.push(vec![v]);
        }
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

/// `true` when two twins share a source color and one of them must change
/// color; such twins can never move, so the answer is NO.
pub fn apply_rule1(instance: &Instance, part: &SplitPartition) -> bool {
    twin_classes(instance, part).iter().any(|class| {
        class.len() >= 2
            && class
                .iter()
                .any(|&v| instance.source.get(v) != instance.target.get(v))
    })
}

/// The vertex removed by one application of the twin-triple rule: the
/// highest id in any class of three or more.
pub fn rule2_candidate(instance: &Instance, part: &SplitPartition) -> Option<usize> {
    twin_classes(instance, part)
        .iter()
        .filter(|c| c.len() >= 3)
        .map(|c| *c.last().expect("non-empty"))
        .max()
}

/// One application of the twin-triple rule, returning the reduced instance
/// (vertex ids compacted) and the removed vertex.
pub fn apply_rule2(instance: &Instance, part: &SplitPartition) -> Option<(Instance, usize)> {
    let w = rule2_candidate(instance, part)?;
    let keep: Vec<usize> = (0..instance.graph.n()).filter(|&v| v != w).collect();
    Some((restrict(instance, &keep), w))
}

fn restrict(instance: &Instance, keep: &[usize]) -> Instance {
    Instance {
        graph: instance.graph.induced(keep),
        k: instance.k,
        source: instance.source.restrict(keep),
        target: instance.target.restrict(keep),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelResult {
    No,
    Kernel {
        instance: Instance,
        /// Original ids of removed vertices, in removal order.
        removed: Vec<usize>,
        /// Original id of each kernel vertex.
        kept: Vec<usize>,
    },
}

/// Applies both rules until neither fires, recomputing the partition after
/// every removal.
pub fn kernelize(instance: &Instance) -> Result<KernelResult> {
    let mut cur = instance.clone();
    let mut kept: Vec<usize> = (0..instance.graph.n()).collect();
    let mut removed = Vec::new();
    loop {
        let part = split_partition(&cur.graph)?;
        if apply_rule1(&cur, &part) {
            return Ok(KernelResult::No);
        }
        match apply_rule2(&cur, &part) {
            Some((next, w)) => {
                removed.push(kept.remove(w));
                cur = next;
            }
            None => break,
        }
    }
    Ok(KernelResult::Kernel {
        instance: cur,
        removed,
        kept,
    })
}

/// Upper bound on kernel size for `k` colors.
pub fn kernel_bound(k: u32) -> u128 {
    let k = k as u128;
    k + 2 * k * 2u128.saturating_pow(k as u32)
}

/// Decides a split instance: kernelize, then search the kernel exhaustively.
pub fn solve_split(instance: &Instance) -> Result<bool> {
    if instance.is_extended() {
        return Err(Error::WrongSolver("split solver takes plain colorings".into()));
    }
    let kernel = match kernelize(instance)? {
        KernelResult::No => return Ok(false),
        KernelResult::Kernel { instance, .. } => instance,
    };
    let n = kernel.graph.n() as u32;
    let states = (kernel.k as u128)
        .checked_pow(n)
        .map_or(usize::MAX, |s| usize::try_from(s + 1).unwrap_or(usize::MAX));
    let budget = SearchBudget::states(states.min(SearchBudget::DEFAULT_STATES));
    match crcs_reachable(&kernel, &budget)? {
        Decision::Yes(_) => Ok(true),
        Decision::No => Ok(false),
        Decision::Overflow { states_explored } => Err(Error::BudgetExceeded {
            states: states_explored,
        }),
    }
}
