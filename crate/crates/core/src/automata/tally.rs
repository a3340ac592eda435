//! Unary cycle acceptors ("tally automata") and their intersection.
//!
//! A tally automaton reads words over a one-letter alphabet while walking
//! a directed cycle, so it accepts exactly the word lengths congruent to
//! one of finitely many residues. Intersections of such languages encode
//! Chinese-remainder-style counting arguments; the instance generators use
//! them to force long gathering sequences.

use super::{Acceptor, AutomataError, SemiAutomaton};

/// An acceptor over the one-letter alphabet whose transition is the cycle
/// `i -> (i + 1) mod n`.
///
/// The cycle length is required to be odd and greater than one, at least
/// one state must reject, and state `0` must reject; [`tally_cycle`]
/// enforces all of this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TallyAutomaton {
    acceptor: Acceptor,
}

impl TallyAutomaton {
    pub fn acceptor(&self) -> &Acceptor {
        &self.acceptor
    }

    /// Number of states on the cycle.
    pub fn cycle_length(&self) -> usize {
        self.acceptor.automaton().state_count()
    }

    pub fn initial_index(&self) -> usize {
        self.acceptor.initial()
    }

    /// Accepting residues, sorted ascending.
    pub fn accepting_indices(&self) -> &[usize] {
        self.acceptor.accepting()
    }

    /// Whether the unary word of length `len` is accepted, by cycle
    /// arithmetic: the state reached is `(initial + len) mod cycle_length`.
    pub fn accepts_length(&self, len: u64) -> bool {
        let n = self.cycle_length() as u64;
        let state = (self.initial_index() as u64 + len % n) % n;
        self.acceptor.is_accepting(state as usize)
    }
}

/// Builds the tally automaton with `cycle_length` states, the given
/// accepting residues, and `initial` as start state.
///
/// # Errors
///
/// [`AutomataError::InvalidTallyShape`] when the cycle length is even or
/// at most one, when every state would accept, when state `0` accepts, or
/// when an index is out of range.
pub fn tally_cycle(
    cycle_length: usize,
    accepting: &[usize],
    initial: usize,
) -> Result<TallyAutomaton, AutomataError> {
    let shape = |reason: String| AutomataError::InvalidTallyShape { reason };
    if cycle_length <= 1 {
        return Err(shape(format!(
            "cycle length {cycle_length} must be greater than 1"
        )));
    }
    if cycle_length % 2 == 0 {
        return Err(shape(format!("cycle length {cycle_length} must be odd")));
    }
    if initial >= cycle_length {
        return Err(shape(format!(
            "initial index {initial} out of range for cycle length {cycle_length}"
        )));
    }
    if let Some(&bad) = accepting.iter().find(|&&i| i >= cycle_length) {
        return Err(shape(format!(
            "accepting index {bad} out of range for cycle length {cycle_length}"
        )));
    }
    let mut accepting: Vec<usize> = accepting.to_vec();
    accepting.sort_unstable();
    accepting.dedup();
    if accepting.len() == cycle_length {
        return Err(shape("at least one state must reject".into()));
    }
    if accepting.first() == Some(&0) {
        return Err(shape("state 0 must reject".into()));
    }
    let cycle = (0..cycle_length).map(|i| (i + 1) % cycle_length).collect();
    let automaton = SemiAutomaton::new(cycle_length, vec![cycle])
        .expect("cycle transition table is well-formed");
    let acceptor = Acceptor::new(automaton, initial, accepting)
        .expect("indices were range-checked above");
    Ok(TallyAutomaton { acceptor })
}

/// Smallest `len <= bound` such that every automaton accepts the unary
/// word of that length, or `None` if no such length exists within the
/// bound.
///
/// Residue tuples repeat with period `lcm` of the cycle lengths, so the
/// scan is capped at `lcm - 1`; a miss there is a miss everywhere.
///
/// # Panics
///
/// If `automata` is empty.
pub fn tally_intersection_smallest(automata: &[TallyAutomaton], bound: u64) -> Option<u64> {
    assert!(
        !automata.is_empty(),
        "intersection needs at least one automaton"
    );
    let mut period: u128 = 1;
    for a in automata {
        let n = a.cycle_length() as u128;
        period = period / gcd(period, n) * n;
        if period > u128::from(u64::MAX) {
            period = u128::from(u64::MAX);
            break;
        }
    }
    let cap = bound.min(period as u64 - 1);
    (0..=cap).find(|&len| automata.iter().all(|a| a.accepts_length(len)))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape_err(r: Result<TallyAutomaton, AutomataError>) -> bool {
        matches!(r, Err(AutomataError::InvalidTallyShape { .. }))
    }

    #[test]
    fn three_cycle_accepts_matching_residues() {
        let a = tally_cycle(3, &[2], 0).unwrap();
        for len in 0..30u64 {
            assert_eq!(a.accepts_length(len), len % 3 == 2, "length {len}");
        }
    }

    #[test]
    fn malformed_shapes_are_rejected() {
        assert!(shape_err(tally_cycle(4, &[2], 0)), "even cycle");
        assert!(shape_err(tally_cycle(1, &[], 0)), "too short");
        assert!(shape_err(tally_cycle(0, &[], 0)), "empty");
        assert!(shape_err(tally_cycle(3, &[0, 1, 2], 0)), "all accepting");
        assert!(shape_err(tally_cycle(3, &[0], 0)), "state 0 accepting");
        assert!(shape_err(tally_cycle(3, &[3], 0)), "index out of range");
        assert!(shape_err(tally_cycle(3, &[1], 3)), "initial out of range");
        assert!(tally_cycle(3, &[], 0).is_ok(), "empty accepting set is legal");
    }

    #[test]
    fn seven_cycle_example_accepts_length_eight() {
        let a = tally_cycle(7, &[1, 3, 4], 3).unwrap();
        assert!(a.accepts_length(8));
        assert!(a.accepts_length(0)); // starts on an accepting state
        assert!(!a.accepts_length(2));
    }

    #[test]
    fn arithmetic_acceptance_matches_stepping_the_acceptor() {
        let a = tally_cycle(7, &[1, 3, 4], 3).unwrap();
        let b = tally_cycle(5, &[2, 3], 4).unwrap();
        for t in [&a, &b] {
            let acc = t.acceptor();
            let mut state = acc.initial();
            for len in 0..200u64 {
                assert_eq!(t.accepts_length(len), acc.is_accepting(state));
                state = acc.automaton().next(state, 0);
            }
        }
    }

    #[test]
    fn paired_cycles_first_meet_at_eight() {
        let a = tally_cycle(7, &[1, 3, 4], 3).unwrap();
        let b = tally_cycle(5, &[2, 3], 4).unwrap();
        assert_eq!(tally_intersection_smallest(&[a, b], 1 << 20), Some(8));
    }

    #[test]
    fn single_automaton_intersection_is_its_first_accepted_length() {
        let a = tally_cycle(3, &[2], 0).unwrap();
        assert_eq!(tally_intersection_smallest(&[a], 1 << 20), Some(2));
    }

    #[test]
    fn coprime_cycles_meet_at_the_remainder_prescribed_length() {
        let a = tally_cycle(3, &[2], 0).unwrap();
        let b = tally_cycle(5, &[4], 0).unwrap();
        assert_eq!(tally_intersection_smallest(&[a, b], 1 << 20), Some(14));
    }

    #[test]
    fn empty_intersection_reports_none() {
        // Both cycles have length 3 but demand different residues.
        let a = tally_cycle(3, &[1], 0).unwrap();
        let b = tally_cycle(3, &[2], 0).unwrap();
        assert_eq!(tally_intersection_smallest(&[a, b], 1 << 20), None);
    }

    #[test]
    fn bound_is_respected() {
        let a = tally_cycle(3, &[2], 0).unwrap();
        let b = tally_cycle(5, &[4], 0).unwrap();
        assert_eq!(tally_intersection_smallest(&[a.clone(), b.clone()], 13), None);
        assert_eq!(tally_intersection_smallest(&[a, b], 14), Some(14));
    }

    #[test]
    fn intersection_agrees_with_per_length_simulation() {
        let automata = vec![
            tally_cycle(7, &[1, 3, 4], 3).unwrap(),
            tally_cycle(5, &[2, 3], 4).unwrap(),
            tally_cycle(3, &[2], 1).unwrap(),
        ];
        let mut states: Vec<usize> = automata.iter().map(|a| a.acceptor().initial()).collect();
        let mut first_hit = None;
        for len in 0..10_000u64 {
            let all_accept = automata
                .iter()
                .zip(&states)
                .all(|(a, &s)| a.acceptor().is_accepting(s));
            assert_eq!(
                all_accept,
                automata.iter().all(|a| a.accepts_length(len)),
                "length {len}"
            );
            if all_accept && first_hit.is_none() {
                first_hit = Some(len);
            }
            for (a, s) in automata.iter().zip(states.iter_mut()) {
                *s = a.acceptor().automaton().next(*s, 0);
            }
        }
        assert_eq!(tally_intersection_smallest(&automata, 10_000), first_hit);
    }
}
