//! Breadth-first search over fixed-width integer state vectors.
//!
//! States are `n` small integers. They live in one flat arena; the visited
//! map is keyed by the state packed into a `u128` when it fits, otherwise by
//! a boxed copy of the state.

use std::hash::Hash;

use rustc_hash::FxHashMap;

use super::SearchBudget;

/// A reconfiguration space whose states are `[u32]` vectors of fixed length.
pub(crate) trait Space {
    type Move: Copy;

    /// Moves available at `state`, in a fixed order.
    fn moves(&self, state: &[u32], out: &mut Vec<Self::Move>);

    /// Applies `mv` to `state` in place.
    fn apply(&self, state: &mut [u32], mv: Self::Move);
}

pub(crate) enum Search<M> {
    Found(Vec<M>),
    Exhausted,
    Overflow { states: usize },
}

pub(crate) trait Key: Hash + Eq + Sized {
    fn encode(state: &[u32], bits: u32) -> Self;
}

impl Key for u128 {
    #[inline]
    fn encode(state: &[u32], bits: u32) -> Self {
        state
            .iter()
            .fold(0u128, |acc, &x| (acc << bits) | x as u128)
    }
}

impl Key for Box<[u32]> {
    #[inline]
    fn encode(state: &[u32], _bits: u32) -> Self {
        state.into()
    }
}

/// Bits needed to store values `0..=max`.
pub(crate) fn bits_for(max: u32) -> u32 {
    (u32::BITS - max.leading_zeros()).max(1)
}

pub(crate) fn fits_u128(len: usize, max: u32) -> bool {
    len as u64 * bits_for(max) as u64 <= 128
}

/// Visited-state store shared by reachability and component enumeration.
pub(crate) struct StateStore<K> {
    width: usize,
    bits: u32,
    arena: Vec<u32>,
    index: FxHashMap<K, u32>,
}

impl<K: Key> StateStore<K> {
    pub(crate) fn new(width: usize, max_value: u32) -> Self {
        Self {
            width,
            bits: bits_for(max_value),
            arena: Vec::new(),
            index: FxHashMap::default(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.index.len()
    }

    pub(crate) fn get(&self, i: usize) -> &[u32] {
        &self.arena[i * self.width..(i + 1) * self.width]
    }

    pub(crate) fn find(&self, state: &[u32]) -> Option<usize> {
        self.index.get(&K::encode(state, self.bits)).map(|&i| i as usize)
    }

    /// Inserts `state` if new; returns its index and whether it was new.
    pub(crate) fn insert(&mut self, state: &[u32]) -> (usize, bool) {
        let next = self.index.len() as u32;
        let key = K::encode(state, self.bits);
        match self.index.entry(key) {
            std::collections::hash_map::Entry::Occupied(e) => (*e.get() as usize, false),
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(next);
                self.arena.extend_from_slice(state);
                (next as usize, true)
            }
        }
    }
}

/// Shortest move sequence from `start` to `goal`, or proof that none exists
/// within the budget.
pub(crate) fn shortest_path<S: Space>(
    space: &S,
    start: &[u32],
    goal: &[u32],
    max_value: u32,
    budget: &SearchBudget,
) -> Search<S::Move> {
    if fits_u128(start.len(), max_value) {
        bfs::<S, u128>(space, start, goal, max_value, budget)
    } else {
        bfs::<S, Box<[u32]>>(space, start, goal, max_value, budget)
    }
}

fn bfs<S: Space, K: Key>(
    space: &S,
    start: &[u32],
    goal: &[u32],
    max_value: u32,
    budget: &SearchBudget,
) -> Search<S::Move> {
    if start == goal {
        return Search::Found(Vec::new());
    }
    let mut store = StateStore::<K>::new(start.len(), max_value);
    // parent index and the move that produced each state
    let mut parent: Vec<(u32, Option<S::Move>)> = vec![(0, None)];
    let mut depth: Vec<u32> = vec![0];
    store.insert(start);

    let mut moves = Vec::new();
    let mut scratch = start.to_vec();
    let mut truncated = false;
    let mut head = 0;
    while head < store.len() {
        if depth[head] as usize >= budget.max_moves {
            truncated = true;
            head += 1;
            continue;
        }
        moves.clear();
        space.moves(store.get(head), &mut moves);
        for &mv in &moves {
            scratch.copy_from_slice(store.get(head));
            space.apply(&mut scratch, mv);
            let (idx, fresh) = store.insert(&scratch);
            if !fresh {
                continue;
            }
            parent.push((head as u32, Some(mv)));
            depth.push(depth[head] + 1);
            if scratch == goal {
                let mut path = Vec::new();
                let mut cur = idx;
                while let (p, Some(m)) = parent[cur] {
                    path.push(m);
                    cur = p as usize;
                }
                path.reverse();
                return Search::Found(path);
            }
            if store.len() >= budget.max_states {
                return Search::Overflow {
                    states: store.len(),
                };
            }
        }
        head += 1;
    }
    if truncated {
        Search::Overflow {
            states: store.len(),
        }
    } else {
        Search::Exhausted
    }
}

/// Every state reachable from `start`, in BFS order.
pub(crate) fn reachable_set<S: Space>(
    space: &S,
    start: &[u32],
    max_value: u32,
    budget: &SearchBudget,
) -> Result<Vec<Vec<u32>>, usize> {
    fn run<S: Space, K: Key>(
        space: &S,
        start: &[u32],
        max_value: u32,
        budget: &SearchBudget,
    ) -> Result<Vec<Vec<u32>>, usize> {
        let mut store = StateStore::<K>::new(start.len(), max_value);
        store.insert(start);
        let mut moves = Vec::new();
        let mut scratch = start.to_vec();
        let mut head = 0;
        while head < store.len() {
            moves.clear();
            space.moves(store.get(head), &mut moves);
            for &mv in &moves {
                scratch.copy_from_slice(store.get(head));
                space.apply(&mut scratch, mv);
                store.insert(&scratch);
                if store.len() > budget.max_states {
                    return Err(store.len());
                }
            }
            head += 1;
        }
        Ok((0..store.len()).map(|i| store.get(i).to_vec()).collect())
    }
    if fits_u128(start.len(), max_value) {
        run::<S, u128>(space, start, max_value, budget)
    } else {
        run::<S, Box<[u32]>>(space, start, max_value, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counter on `0..=limit` with +1 / -1 moves.
    struct Line(u32);

    impl Space for Line {
        type Move = i8;
        fn moves(&self, s: &[u32], out: &mut Vec<i8>) {
            if s[0] < self.0 {
                out.push(1);
            }
            if s[0] > 0 {
                out.push(-1);
            }
        }
        fn apply(&self, s: &mut [u32], mv: i8) {
            s[0] = (s[0] as i64 + mv as i64) as u32;
        }
    }

    #[test]
    fn finds_shortest_path() {
        let budget = SearchBudget::default();
        match shortest_path(&Line(10), &[2], &[7], 10, &budget) {
            Search::Found(p) => assert_eq!(p, vec![1; 5]),
            _ => panic!("expected a path"),
        }
    }

    #[test]
    fn depth_limit_reports_overflow_not_no() {
        let budget = SearchBudget {
            max_states: 1000,
            max_moves: 3,
        };
        assert!(matches!(
            shortest_path(&Line(10), &[0], &[7], 10, &budget),
            Search::Overflow { .. }
        ));
    }

    #[test]
    fn state_limit_reports_overflow() {
        let budget = SearchBudget {
            max_states: 4,
            max_moves: 100,
        };
        assert!(matches!(
            shortest_path(&Line(10), &[0], &[9], 10, &budget),
            Search::Overflow { .. }
        ));
    }

    #[test]
    fn packing_widths() {
        assert_eq!(bits_for(0), 1);
        assert_eq!(bits_for(1), 1);
        assert_eq!(bits_for(3), 2);
        assert_eq!(bits_for(4), 3);
        assert!(fits_u128(64, 3));
        assert!(!fits_u128(65, 3));
        assert_ne!(u128::encode(&[1, 0], 2), u128::encode(&[0, 1], 2));
    }
}
