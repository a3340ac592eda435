//! Deterministic semi-automata and the constructions built on them.
//!
//! The foundation is [`SemiAutomaton`]: a finite state set together with a
//! total transition function per alphabet letter. On top of it sit
//! [`Acceptor`] (initial state plus accepting set), tilt automata whose
//! states are pixels of a polyomino ([`build_tilt_automaton`],
//! [`build_s1_automaton`]), pair automata with shortest merge forests
//! ([`pair_automaton`]), greedy synchronizing-word search
//! ([`synchronizing_word`]), exact reset thresholds via breadth-first
//! search over subset images ([`reset_threshold_exact`]), and unary cycle
//! acceptors for counting arguments ([`tally_cycle`],
//! [`tally_intersection_smallest`]).
//!
//! Letters are plain `usize` indices into the alphabet. Tilt automata fix
//! the alphabet order `U, D, L, R`, matching
//! [`Direction::ALL`](crate::dynamics::Direction::ALL), so conversion
//! between letter words and move sequences is positional.
//!
//! All automata are immutable once built; every search allocates its own
//! frontier, so concurrent use needs no coordination.

mod pair;
mod subset;
mod tally;
mod tilt;

pub use pair::{is_synchronizing, pair_automaton, synchronizing_word, PairAutomaton};
pub use subset::{reset_threshold_exact, DEFAULT_SUBSET_BUDGET};
pub use tally::{tally_cycle, tally_intersection_smallest, TallyAutomaton};
pub use tilt::{
    build_s1_automaton, build_tilt_automaton, check_eulerian_bound, EulerianBoundReport,
    TiltAutomaton,
};

use thiserror::Error;

/// Errors for automaton construction and bounded searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    /// The described automaton is malformed (dimension mismatch or a
    /// transition target outside the state range).
    #[error("invalid automaton: {reason}")]
    InvalidAutomaton { reason: String },
    /// A unary cycle acceptor request violated the required shape.
    #[error("invalid tally shape: {reason}")]
    InvalidTallyShape { reason: String },
    /// A bounded search stored as many states as its budget allows without
    /// finishing.
    #[error("search budget of {0} states exhausted")]
    BudgetExceeded(u64),
}

/// A deterministic semi-automaton: `state_count` states, an alphabet of
/// `alphabet_len` letters, and one total transition map per letter.
///
/// States and letters are dense indices starting at zero. Optional state
/// labels carry human-readable names (pixel coordinates for tilt automata)
/// through to rendering; they play no role in the semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiAutomaton {
    state_count: usize,
    alphabet_len: usize,
    /// Flattened table: `delta[letter * state_count + state]`.
    delta: Vec<u32>,
    state_labels: Option<Vec<String>>,
}

impl SemiAutomaton {
    /// Builds an automaton from one transition row per letter, where
    /// `rows[letter][state]` is the successor state.
    ///
    /// # Errors
    ///
    /// [`AutomataError::InvalidAutomaton`] if there are no states, no
    /// letters, a row has the wrong length, or a target is out of range.
    pub fn new(state_count: usize, rows: Vec<Vec<usize>>) -> Result<Self, AutomataError> {
        let invalid = |reason: String| AutomataError::InvalidAutomaton { reason };
        if state_count == 0 {
            return Err(invalid("automaton needs at least one state".into()));
        }
        if rows.is_empty() {
            return Err(invalid("automaton needs at least one letter".into()));
        }
        if state_count > u32::MAX as usize {
            return Err(invalid(format!("state count {state_count} too large")));
        }
        let alphabet_len = rows.len();
        let mut delta = Vec::with_capacity(alphabet_len * state_count);
        for (letter, row) in rows.iter().enumerate() {
            if row.len() != state_count {
                return Err(invalid(format!(
                    "letter {letter} has {} transitions, expected {state_count}",
                    row.len()
                )));
            }
            for (state, &target) in row.iter().enumerate() {
                if target >= state_count {
                    return Err(invalid(format!(
                        "transition {state} --{letter}--> {target} leaves the state range"
                    )));
                }
                delta.push(target as u32);
            }
        }
        Ok(SemiAutomaton {
            state_count,
            alphabet_len,
            delta,
            state_labels: None,
        })
    }

    /// Builds an automaton by evaluating `f(letter, state)` for every
    /// transition. `f` must return in-range states; the result is validated.
    pub fn from_fn<F>(
        state_count: usize,
        alphabet_len: usize,
        mut f: F,
    ) -> Result<Self, AutomataError>
    where
        F: FnMut(usize, usize) -> usize,
    {
        let rows = (0..alphabet_len)
            .map(|letter| (0..state_count).map(|state| f(letter, state)).collect())
            .collect();
        SemiAutomaton::new(state_count, rows)
    }

    /// Attaches one label per state for display purposes.
    ///
    /// # Errors
    ///
    /// [`AutomataError::InvalidAutomaton`] if the label count differs from
    /// the state count.
    pub fn with_state_labels(mut self, labels: Vec<String>) -> Result<Self, AutomataError> {
        if labels.len() != self.state_count {
            return Err(AutomataError::InvalidAutomaton {
                reason: format!(
                    "{} labels for {} states",
                    labels.len(),
                    self.state_count
                ),
            });
        }
        self.state_labels = Some(labels);
        Ok(self)
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet_len
    }

    pub fn state_labels(&self) -> Option<&[String]> {
        self.state_labels.as_deref()
    }

    /// Successor of `state` under `letter`.
    pub fn next(&self, state: usize, letter: usize) -> usize {
        debug_assert!(state < self.state_count && letter < self.alphabet_len);
        self.delta[letter * self.state_count + state] as usize
    }

    /// State reached from `state` by reading `word` left to right.
    pub fn apply_word(&self, state: usize, word: &[usize]) -> usize {
        word.iter().fold(state, |s, &a| self.next(s, a))
    }

    /// Image of a state set under one letter, sorted and deduplicated.
    pub fn image(&self, states: &[usize], letter: usize) -> Vec<usize> {
        let mut out: Vec<usize> = states.iter().map(|&s| self.next(s, letter)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Image of a state set under a whole word, sorted and deduplicated.
    pub fn image_word(&self, states: &[usize], word: &[usize]) -> Vec<usize> {
        let mut cur: Vec<usize> = states.to_vec();
        cur.sort_unstable();
        cur.dedup();
        for &a in word {
            cur = self.image(&cur, a);
        }
        cur
    }

    /// All states, `0..state_count`, as a vector.
    pub fn all_states(&self) -> Vec<usize> {
        (0..self.state_count).collect()
    }
}

/// An acceptor: a semi-automaton with an initial state and an accepting
/// set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Acceptor {
    automaton: SemiAutomaton,
    initial: usize,
    accepting: Vec<usize>,
}

impl Acceptor {
    /// Wraps `automaton` with an initial state and accepting set.
    ///
    /// # Errors
    ///
    /// [`AutomataError::InvalidAutomaton`] if the initial state or any
    /// accepting state is out of range.
    pub fn new(
        automaton: SemiAutomaton,
        initial: usize,
        accepting: Vec<usize>,
    ) -> Result<Self, AutomataError> {
        let n = automaton.state_count();
        if initial >= n {
            return Err(AutomataError::InvalidAutomaton {
                reason: format!("initial state {initial} out of range for {n} states"),
            });
        }
        let mut accepting = accepting;
        accepting.sort_unstable();
        accepting.dedup();
        if let Some(&bad) = accepting.iter().find(|&&q| q >= n) {
            return Err(AutomataError::InvalidAutomaton {
                reason: format!("accepting state {bad} out of range for {n} states"),
            });
        }
        Ok(Acceptor {
            automaton,
            initial,
            accepting,
        })
    }

    pub fn automaton(&self) -> &SemiAutomaton {
        &self.automaton
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    /// Accepting states, sorted ascending.
    pub fn accepting(&self) -> &[usize] {
        &self.accepting
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting.binary_search(&state).is_ok()
    }

    /// Runs `word` from the initial state and reports acceptance.
    pub fn accepts(&self, word: &[usize]) -> bool {
        self.is_accepting(self.automaton.apply_word(self.initial, word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_validates_shape() {
        assert!(SemiAutomaton::new(0, vec![vec![]]).is_err());
        assert!(SemiAutomaton::new(2, vec![]).is_err());
        assert!(SemiAutomaton::new(2, vec![vec![0]]).is_err());
        assert!(SemiAutomaton::new(2, vec![vec![0, 2]]).is_err());
        assert!(SemiAutomaton::new(2, vec![vec![1, 0]]).is_ok());
    }

    #[test]
    fn word_application_composes_single_steps() {
        // Two states, letter 0 swaps them, letter 1 sends both to state 0.
        let a = SemiAutomaton::new(2, vec![vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(a.next(0, 0), 1);
        assert_eq!(a.apply_word(0, &[0, 0]), 0);
        assert_eq!(a.apply_word(1, &[0, 1, 0]), 1);
        assert_eq!(a.image(&[0, 1], 0), vec![0, 1]);
        assert_eq!(a.image(&[0, 1], 1), vec![0]);
        assert_eq!(a.image_word(&[0, 1], &[0, 0, 1]), vec![0]);
    }

    #[test]
    fn acceptor_checks_membership_after_run() {
        let a = SemiAutomaton::new(3, vec![vec![1, 2, 0]]).unwrap();
        let acc = Acceptor::new(a, 0, vec![2]).unwrap();
        assert!(!acc.accepts(&[]));
        assert!(!acc.accepts(&[0]));
        assert!(acc.accepts(&[0, 0]));
        assert!(acc.accepts(&[0, 0, 0, 0, 0]));
        assert!(acc.is_accepting(2));
        assert!(!acc.is_accepting(0));
    }

    #[test]
    fn acceptor_rejects_out_of_range_states() {
        let a = SemiAutomaton::new(2, vec![vec![0, 1]]).unwrap();
        assert!(Acceptor::new(a.clone(), 2, vec![]).is_err());
        assert!(Acceptor::new(a, 0, vec![5]).is_err());
    }

    #[test]
    fn labels_must_match_state_count() {
        let a = SemiAutomaton::new(2, vec![vec![0, 1]]).unwrap();
        assert!(a.clone().with_state_labels(vec!["x".into()]).is_err());
        let labeled = a
            .with_state_labels(vec!["p".into(), "q".into()])
            .unwrap();
        assert_eq!(labeled.state_labels().unwrap()[1], "q");
    }
}
