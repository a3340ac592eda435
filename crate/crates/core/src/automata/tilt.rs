//! Tilt automata: semi-automata whose states are pixels and whose letters
//! are the four tilt directions.
//!
//! Two builds exist. The full-tilt automaton has the significant pixels as
//! states and moves each one to its slide destination, so a lone full-tilt
//! particle anywhere in the polyomino is tracked exactly once it has made
//! two perpendicular moves. The single-step automaton has every pixel as a
//! state and moves one cell when the neighbor exists, else stays; summing
//! the four letters' edges gives in-degree four at every pixel, making the
//! transition multigraph Eulerian — the structural fact behind the
//! quadratic synchronization bound reported by [`check_eulerian_bound`].

use crate::dynamics::{Direction, Model, Word};
use crate::geometry::{
    project, significant_pixels, Boundary, GeometryError, Pixel, Polyomino, SideIndex,
};

use super::{
    pair_automaton, reset_threshold_exact, synchronizing_word, AutomataError, SemiAutomaton,
};

/// A semi-automaton over the alphabet `U, D, L, R` (letter indices `0..4`
/// in that order) whose states are pixels of a polyomino.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltAutomaton {
    automaton: SemiAutomaton,
    /// State index to pixel, sorted in `(y, x)` order.
    pixels: Vec<Pixel>,
    model: Model,
}

impl TiltAutomaton {
    pub fn automaton(&self) -> &SemiAutomaton {
        &self.automaton
    }

    /// Which dynamics the states and transitions mirror: full-tilt slides
    /// over significant pixels, or single steps over all pixels.
    pub fn model(&self) -> Model {
        self.model
    }

    pub fn state_count(&self) -> usize {
        self.automaton.state_count()
    }

    /// Pixel behind a state index.
    pub fn pixel(&self, state: usize) -> Pixel {
        self.pixels[state]
    }

    /// All state pixels in `(y, x)` order; index in this slice is the
    /// state index.
    pub fn pixels(&self) -> &[Pixel] {
        &self.pixels
    }

    /// State index of a pixel, if it is a state.
    pub fn state_of(&self, p: Pixel) -> Option<usize> {
        self.pixels.binary_search(&p).ok()
    }

    /// Successor of `state` under one tilt direction.
    pub fn next_by(&self, state: usize, d: Direction) -> usize {
        self.automaton.next(state, Self::letter(d))
    }

    /// Letter index of a direction (its position in
    /// [`Direction::ALL`]).
    pub fn letter(d: Direction) -> usize {
        d as usize
    }

    /// Converts a letter word over this alphabet to a move sequence.
    pub fn word_from_letters(letters: &[usize]) -> Word {
        letters
            .iter()
            .map(|&a| Direction::ALL[a])
            .collect::<Vec<_>>()
            .into()
    }

    /// Converts a move sequence to a letter word over this alphabet.
    pub fn letters_from_word(word: &Word) -> Vec<usize> {
        word.letters().iter().map(|&d| Self::letter(d)).collect()
    }
}

fn coordinate_labels(pixels: &[Pixel]) -> Vec<String> {
    pixels.iter().map(|p| format!("({},{})", p.x, p.y)).collect()
}

/// Builds the full-tilt automaton of the polyomino described by
/// `boundary`: states are its significant pixels, and each direction maps
/// a pixel to the end of its slide.
///
/// Works from the boundary alone, so polyominoes with a huge pixel count
/// but few corners stay cheap. The significant set is closed under slides;
/// a slide landing outside it would be a construction bug and panics.
///
/// # Errors
///
/// Propagates [`GeometryError`] from slide projection on an inconsistent
/// boundary.
pub fn build_tilt_automaton(boundary: &Boundary) -> Result<TiltAutomaton, GeometryError> {
    let sig = significant_pixels(boundary);
    let index = SideIndex::build(boundary);
    let pixels = sig.all.clone();
    let mut rows = Vec::with_capacity(4);
    for d in Direction::ALL {
        let mut row = Vec::with_capacity(pixels.len());
        for &p in &pixels {
            let dest = project(&index, p, d)?;
            let state = pixels
                .binary_search(&dest)
                .unwrap_or_else(|_| panic!("slide of {p} along {d} left the significant set"));
            row.push(state);
        }
        rows.push(row);
    }
    let automaton = SemiAutomaton::new(pixels.len(), rows)
        .expect("slide table is square and in range")
        .with_state_labels(coordinate_labels(&pixels))
        .expect("one label per state");
    Ok(TiltAutomaton {
        automaton,
        pixels,
        model: Model::FullTilt,
    })
}

/// Builds the single-step automaton of `p`: states are all pixels, each
/// direction moves one cell when the neighbor is present and self-loops at
/// the boundary.
///
/// Always Eulerian: every pixel has in-degree and out-degree four when the
/// four letters' edges are summed (checked here).
pub fn build_s1_automaton(p: &Polyomino) -> TiltAutomaton {
    let n = p.len();
    let pixels = p.pixels().to_vec();
    let mut rows = Vec::with_capacity(4);
    let mut in_degree = vec![0u32; n];
    for d in Direction::ALL {
        let mut row = Vec::with_capacity(n);
        for s in 0..n {
            let t = p.neighbor_idx(s, d).map_or(s, |t| t as usize);
            in_degree[t] += 1;
            row.push(t);
        }
        rows.push(row);
    }
    assert!(
        in_degree.iter().all(|&d| d == 4),
        "single-step transition multigraph must have in-degree four everywhere"
    );
    let automaton = SemiAutomaton::new(n, rows)
        .expect("neighbor table is square and in range")
        .with_state_labels(coordinate_labels(&pixels))
        .expect("one label per state");
    TiltAutomaton {
        automaton,
        pixels,
        model: Model::SingleStep,
    }
}

/// What [`check_eulerian_bound`] found for one tilt automaton.
///
/// `kari_bound` is the quadratic cap `(n-2)(n-1) + 1` on reset thresholds
/// of synchronizing Eulerian automata. `within_bound` compares the witness
/// against it, but only claims something sound: `Some(true)` needs either
/// an exact threshold or a greedy witness already within the cap, and
/// `Some(false)` needs an exact threshold above it. A too-long greedy
/// witness alone proves nothing, leaving `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianBoundReport {
    /// In-degree equals out-degree at every state of the transition
    /// multigraph.
    pub is_eulerian: bool,
    pub is_synchronizing: bool,
    /// Length of the synchronizing witness found, if any.
    pub witness_length: Option<usize>,
    /// Whether `witness_length` is the exact reset threshold (subset
    /// search finished) rather than a greedy upper bound.
    pub witness_exact: bool,
    /// `(n - 2)(n - 1) + 1` for `n` states, clamped below at one.
    pub kari_bound: usize,
    pub within_bound: Option<bool>,
}

/// Checks the Eulerian structure of a tilt automaton and compares its
/// reset threshold against the quadratic bound.
///
/// The exact threshold comes from [`reset_threshold_exact`] with the given
/// subset budget; when the budget runs out, the greedy
/// [`synchronizing_word`] length is reported instead, flagged as inexact.
pub fn check_eulerian_bound(a: &TiltAutomaton, budget: u64) -> EulerianBoundReport {
    let automaton = a.automaton();
    let n = automaton.state_count();

    let mut in_degree = vec![0u32; n];
    for letter in 0..automaton.alphabet_len() {
        for s in 0..n {
            in_degree[automaton.next(s, letter)] += 1;
        }
    }
    let out = automaton.alphabet_len() as u32;
    let is_eulerian = in_degree.iter().all(|&d| d == out);

    let kari_bound = ((n as i64 - 2) * (n as i64 - 1) + 1).max(1) as usize;
    let is_synchronizing = pair_automaton(automaton).all_mergeable();
    if !is_synchronizing {
        return EulerianBoundReport {
            is_eulerian,
            is_synchronizing,
            witness_length: None,
            witness_exact: false,
            kari_bound,
            within_bound: None,
        };
    }

    let (witness_length, witness_exact) =
        match reset_threshold_exact(automaton, &automaton.all_states(), budget) {
            Ok(found) => {
                let (len, _) = found.expect("mergeable pairs imply a reachable singleton");
                (len, true)
            }
            Err(AutomataError::BudgetExceeded(_)) => {
                let w = synchronizing_word(automaton)
                    .expect("mergeable pairs imply a greedy witness");
                (w.len(), false)
            }
            Err(other) => unreachable!("subset search only fails on budget: {other}"),
        };
    let within_bound = if witness_length <= kari_bound {
        Some(true)
    } else if witness_exact {
        Some(false)
    } else {
        None
    };
    EulerianBoundReport {
        is_eulerian,
        is_synchronizing,
        witness_length: Some(witness_length),
        witness_exact,
        kari_bound,
        within_bound,
    }
}
