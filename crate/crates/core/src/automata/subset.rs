//! Exact reset thresholds by breadth-first search over subset images.

use std::collections::HashSet;

use super::{AutomataError, SemiAutomaton};
use crate::bits;

/// Default cap on stored subsets for [`reset_threshold_exact`].
pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 22;

/// Length of a shortest word taking the state set `start` to a single
/// state, together with such a word.
///
/// Runs a breadth-first search on subset images: every discovered subset
/// `T` expands to `T·a` for each letter `a`, so the first singleton found
/// is reached by a provably shortest word and the returned length is the
/// exact reset threshold of `start`. Returns `None` when the search
/// exhausts the reachable subsets without meeting a singleton, which
/// happens exactly when `start` contains an unmergeable pair.
///
/// # Errors
///
/// [`AutomataError::BudgetExceeded`] when more than `budget` distinct
/// subsets would have to be stored.
///
/// # Panics
///
/// If `start` is empty or contains an out-of-range state.
pub fn reset_threshold_exact(
    a: &SemiAutomaton,
    start: &[usize],
    budget: u64,
) -> Result<Option<(usize, Vec<usize>)>, AutomataError> {
    let n = a.state_count();
    assert!(!start.is_empty(), "reset threshold of an empty state set");
    assert!(
        start.iter().all(|&s| s < n),
        "start subset leaves the state range"
    );

    let mut root = bits::new_box(n);
    for &s in start {
        bits::set(&mut root, s);
    }
    if bits::count(&root) == 1 {
        return Ok(Some((0, Vec::new())));
    }

    // Arena doubles as the queue: subsets are pushed on discovery and
    // expanded in insertion order, which is breadth-first order.
    let mut arena: Vec<Box<[u64]>> = Vec::new();
    let mut meta: Vec<(u32, u16)> = Vec::new(); // (parent index, letter)
    let mut seen: HashSet<Box<[u64]>> = HashSet::new();
    seen.insert(root.clone());
    arena.push(root);
    meta.push((u32::MAX, 0));

    let mut head = 0;
    while head < arena.len() {
        for letter in 0..a.alphabet_len() {
            let mut next = bits::new_box(n);
            {
                let cur = &arena[head];
                for s in bits::iter_ones(cur) {
                    bits::set(&mut next, a.next(s, letter));
                }
            }
            if seen.contains(&next) {
                continue;
            }
            if arena.len() as u64 >= budget {
                return Err(AutomataError::BudgetExceeded(budget));
            }
            let idx = arena.len() as u32;
            let singleton = bits::count(&next) == 1;
            seen.insert(next.clone());
            arena.push(next);
            meta.push((head as u32, letter as u16));
            if singleton {
                // Walk parents back to the root to recover the word.
                let mut word = Vec::new();
                let mut cur = idx as usize;
                while meta[cur].0 != u32::MAX {
                    word.push(meta[cur].1 as usize);
                    cur = meta[cur].0 as usize;
                }
                word.reverse();
                return Ok(Some((word.len(), word)));
            }
        }
        head += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{is_synchronizing, pair_automaton};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_automaton(rng: &mut StdRng, states: usize, letters: usize) -> SemiAutomaton {
        let rows = (0..letters)
            .map(|_| (0..states).map(|_| rng.gen_range(0..states)).collect())
            .collect();
        SemiAutomaton::new(states, rows).unwrap()
    }

    /// Shortest reset length for the full state set by plain word
    /// enumeration in breadth-first order, up to `max_len`.
    fn brute_reset_length(a: &SemiAutomaton, max_len: usize) -> Option<usize> {
        let all = a.all_states();
        let mut frontier = vec![all.clone()];
        for len in 0..=max_len {
            if frontier.iter().any(|t| t.len() == 1) {
                return Some(len);
            }
            if len == max_len {
                break;
            }
            let mut next: Vec<Vec<usize>> = Vec::new();
            for t in &frontier {
                for letter in 0..a.alphabet_len() {
                    next.push(a.image(t, letter));
                }
            }
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }
        None
    }

    #[test]
    fn singleton_start_needs_no_letters() {
        let a = SemiAutomaton::new(3, vec![vec![1, 2, 0]]).unwrap();
        assert_eq!(
            reset_threshold_exact(&a, &[1], 1 << 10).unwrap(),
            Some((0, vec![]))
        );
    }

    #[test]
    fn merging_letter_resets_in_one_step() {
        let a = SemiAutomaton::new(2, vec![vec![0, 1], vec![0, 0]]).unwrap();
        let (len, word) = reset_threshold_exact(&a, &[0, 1], 1 << 10)
            .unwrap()
            .unwrap();
        assert_eq!(len, 1);
        assert_eq!(word, vec![1]);
    }

    #[test]
    fn identity_automaton_has_no_reset_word() {
        let a = SemiAutomaton::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(reset_threshold_exact(&a, &[0, 1, 2], 1 << 10).unwrap(), None);
        assert_eq!(reset_threshold_exact(&a, &[1, 2], 1 << 10).unwrap(), None);
    }

    #[test]
    fn tiny_budget_is_reported() {
        // A cycle plus a merging letter reaches several subsets before any
        // singleton; a budget of 2 stored subsets cannot finish.
        let a = SemiAutomaton::new(4, vec![vec![1, 2, 3, 0], vec![0, 0, 2, 3]]).unwrap();
        match reset_threshold_exact(&a, &[0, 1, 2, 3], 2) {
            Err(AutomataError::BudgetExceeded(2)) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn exact_threshold_matches_word_enumeration_on_random_automata() {
        let mut rng = StdRng::seed_from_u64(0x7e57_0001);
        for _ in 0..60 {
            let a = random_automaton(&mut rng, 5, 2);
            let exact = reset_threshold_exact(&a, &a.all_states(), 1 << 20).unwrap();
            let brute = brute_reset_length(&a, 10);
            match (exact, brute) {
                (Some((len, word)), Some(b)) => {
                    assert_eq!(len, b);
                    assert_eq!(word.len(), len);
                    assert_eq!(a.image_word(&a.all_states(), &word).len(), 1);
                }
                (Some((len, _)), None) => assert!(len > 10),
                (None, found) => {
                    assert_eq!(found, None);
                    assert!(!is_synchronizing(&a));
                }
            }
        }
    }

    #[test]
    fn absence_coincides_with_an_unmergeable_pair() {
        let mut rng = StdRng::seed_from_u64(0xabcd_ef01);
        for _ in 0..60 {
            let a = random_automaton(&mut rng, 5, 2);
            let absent = reset_threshold_exact(&a, &a.all_states(), 1 << 20)
                .unwrap()
                .is_none();
            let pairs = pair_automaton(&a);
            assert_eq!(absent, !pairs.all_mergeable());
        }
    }

    #[test]
    fn subset_threshold_never_exceeds_full_set_threshold() {
        let mut rng = StdRng::seed_from_u64(0x0fed_cba9);
        for _ in 0..30 {
            let a = random_automaton(&mut rng, 5, 2);
            if let Some((full, _)) = reset_threshold_exact(&a, &a.all_states(), 1 << 20).unwrap()
            {
                let (sub, _) = reset_threshold_exact(&a, &[0, 3], 1 << 20)
                    .unwrap()
                    .expect("subsets of a synchronizing set are synchronizing");
                assert!(sub <= full);
            }
        }
    }
}
