//! Gathering algorithms: collapsing every particle of a polyomino to one
//! pixel.
//!
//! The workhorse is [`full_gathering`], which plans over the tilt
//! automaton instead of the configuration space: a `DL` prefix drives all
//! particles into the significant pixels, a helper-elimination loop of
//! further `DL` rounds pushes the tracked state set into corner pixels,
//! and a greedy pair-merging phase replays shortest merge words from the
//! pair forest until one state is left. The tracked set always contains
//! the image of the real configuration, so collapsing it collapses the
//! particles. [`is_gatherable`] stops after the forest: gatherability is
//! exactly mergeability of every significant-pixel pair.
//!
//! The remaining operations cover targeted gathering
//! ([`gather_at_pixel`]), exact shortest sequences by exhaustive search
//! ([`subset_gathering_exact`]), bounded enumeration of axis-alternating
//! sequences ([`para_gathering`]), a verified constant-factor
//! approximation on simple mazes ([`approx_simple_maze`]), and the
//! single-step model ([`s1_gathering`]), where gathering sequences are
//! precisely synchronizing words of the single-step automaton.
//!
//! Every result returned from this module has been replayed through the
//! merging dynamics and found to end in exactly its target pixel.

use thiserror::Error;

use crate::automata::{
    build_s1_automaton, build_tilt_automaton, pair_automaton, synchronizing_word, PairAutomaton,
    TiltAutomaton,
};
use crate::dynamics::{apply, Direction, DynamicsError, Semantics, Word};
use crate::geometry::{
    classify, extract_boundary, materialize, significant_pixels, Axis, Boundary, Config, Pixel,
    Polyomino, Segment, SideIndex,
};
use crate::oracle::{self, OracleError};

/// Pixel cap below which gathering words are additionally re-verified on
/// the fully materialized polyomino rather than only on the significant
/// pixels.
const FULL_VERIFY_PIXELS: i64 = 1 << 16;

/// Errors from gathering operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GatheringError {
    /// The requested pixel is not part of the polyomino.
    #[error("pixel {0} lies outside the polyomino")]
    PixelOutsidePolyomino(Pixel),
    /// The approximation requires a hole-free maze.
    #[error("polyomino is not a simple maze")]
    NotASimpleMaze,
    /// Some pair of significant pixels cannot be merged.
    #[error("polyomino is not gatherable")]
    NotGatherable,
    /// A bounded search ran out of budget.
    #[error("search budget of {0} exhausted")]
    BudgetExceeded(u64),
    /// A configuration argument does not fit the polyomino.
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

/// A verified gathering plan: applying `sequence` under the merging
/// dynamics of `semantics` to the configuration it was built for ends in
/// exactly `{target}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GatherResult {
    pub sequence: Word,
    pub target: Pixel,
    pub semantics: Semantics,
}

/// Shared plumbing: the full-tilt automaton of a boundary plus its pair
/// forest and the corner flags of its states.
struct Planner {
    ta: TiltAutomaton,
    pairs: PairAutomaton,
    corner_state: Vec<bool>,
}

impl Planner {
    fn build(b: &Boundary) -> Planner {
        let sig = significant_pixels(b);
        let ta = build_tilt_automaton(b).expect("a well-formed boundary projects cleanly");
        let corner_state = ta
            .pixels()
            .iter()
            .map(|p| sig.corners.binary_search(p).is_ok())
            .collect();
        let pairs = pair_automaton(ta.automaton());
        Planner {
            ta,
            pairs,
            corner_state,
        }
    }

    /// The planning loop: `DL` prefix, helper-elimination rounds, then
    /// greedy pair merging. Returns the letter word and the surviving
    /// state, or `None` when some pair is unmergeable.
    ///
    /// The set `x` tracks the image of the significant pixels under all
    /// but the leading `DL` of the emitted word. Because two perpendicular
    /// moves put every pixel into the significant set, the real
    /// configuration after the full word is contained in `x`, so driving
    /// `x` to a singleton gathers everything.
    fn plan(&self) -> Option<(Vec<usize>, usize)> {
        if !self.pairs.all_mergeable() {
            return None;
        }
        let a = self.ta.automaton();
        let n = a.state_count();
        let down = TiltAutomaton::letter(Direction::D);
        let left = TiltAutomaton::letter(Direction::L);

        let mut letters = vec![down, left];
        let mut x = a.all_states();
        let mut rounds = 0usize;
        while x.iter().any(|&s| !self.corner_state[s]) {
            rounds += 1;
            assert!(
                rounds <= n,
                "helper elimination must finish within one round per state"
            );
            letters.push(down);
            letters.push(left);
            x = a.image_word(&x, &[down, left]);
        }
        let corner_count = self.corner_state.iter().filter(|&&c| c).count();
        assert!(
            x.len() <= corner_count,
            "after helper elimination the tracked set fits into the corners"
        );

        while x.len() > 1 {
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, &p) in x.iter().enumerate() {
                for &q in &x[i + 1..] {
                    let d = self
                        .pairs
                        .distance(p, q)
                        .expect("mergeable automaton has a distance for every pair");
                    if best.map_or(true, |(bd, _, _)| d < bd) {
                        best = Some((d, p, q));
                    }
                }
            }
            let (_, p, q) = best.expect("a set of two or more states has a pair");
            let merge = self
                .pairs
                .merge_word(p, q)
                .expect("mergeable pair has a merge word");
            letters.extend_from_slice(&merge);
            x = a.image_word(&x, &merge);
        }

        assert!(
            letters.len() <= 2 * (rounds + 1) + corner_count * n * n,
            "planned word exceeds its structural length bound"
        );
        Some((letters, x[0]))
    }

    /// Checks that reading `word` from every state ends in exactly
    /// `target`, i.e. the word gathers the significant pixels.
    fn verify_on_states(&self, word: &Word, target: usize) {
        let a = self.ta.automaton();
        let image = a.image_word(&a.all_states(), &TiltAutomaton::letters_from_word(word));
        assert_eq!(
            image,
            vec![target],
            "gathering word must collapse the significant pixels to its target"
        );
    }
}

/// Pixel count enclosed by a boundary (outer area minus holes).
fn enclosed_pixels(b: &Boundary) -> i64 {
    b.loops.iter().map(|l| l.signed_area2()).sum::<i64>() / 2
}

/// Re-verifies a full-polyomino gathering word by direct merging
/// simulation when the pixel count is small enough to materialize.
fn verify_on_pixels(b: &Boundary, word: &Word, target: Pixel) {
    if enclosed_pixels(b) > FULL_VERIFY_PIXELS {
        return;
    }
    let p = materialize(b, FULL_VERIFY_PIXELS as u64).expect("area was just checked");
    let end = apply(&p, &p.full_config(), word, Semantics::FULL_TILT_MERGING)
        .expect("the full configuration is always valid");
    assert_eq!(
        end,
        Config::singleton(target),
        "gathering word must collapse the whole polyomino to its target"
    );
}

/// A gathering sequence for the whole polyomino under full-tilt merging,
/// or `None` exactly when the polyomino is not gatherable.
///
/// The word always starts with `DL`, is in full-tilt normal form, and has
/// been verified to gather the significant pixels (always) and the full
/// pixel set (whenever it is small enough to materialize).
pub fn full_gathering(b: &Boundary) -> Option<GatherResult> {
    let planner = Planner::build(b);
    let (letters, target_state) = planner.plan()?;
    let word = TiltAutomaton::word_from_letters(&letters).full_tilt_normal_form();
    let target = planner.ta.pixel(target_state);
    planner.verify_on_states(&word, target_state);
    verify_on_pixels(b, &word, target);
    Some(GatherResult {
        sequence: word,
        target,
        semantics: Semantics::FULL_TILT_MERGING,
    })
}

/// Whether the polyomino can be gathered at all: true exactly when every
/// pair of significant pixels has a merging word.
pub fn is_gatherable(b: &Boundary) -> bool {
    let ta = build_tilt_automaton(b).expect("a well-formed boundary projects cleanly");
    pair_automaton(ta.automaton()).all_mergeable()
}

/// Shortest letter word moving a lone full-tilt particle from state
/// `from` to state `to` of the automaton.
fn singleton_path(ta: &TiltAutomaton, from: usize, to: usize) -> Option<Vec<usize>> {
    let a = ta.automaton();
    let mut prev: Vec<Option<(u32, u8)>> = vec![None; a.state_count()];
    let mut queue = std::collections::VecDeque::from([from]);
    let mut seen = vec![false; a.state_count()];
    seen[from] = true;
    while let Some(s) = queue.pop_front() {
        if s == to {
            let mut letters = Vec::new();
            let mut cur = s;
            while let Some((p, letter)) = prev[cur] {
                letters.push(letter as usize);
                cur = p as usize;
            }
            letters.reverse();
            return Some(letters);
        }
        for letter in 0..a.alphabet_len() {
            let t = a.next(s, letter);
            if !seen[t] {
                seen[t] = true;
                prev[t] = Some((s as u32, letter as u8));
                queue.push_back(t);
            }
        }
    }
    None
}

/// A gathering sequence ending at the requested pixel, or `None` when the
/// polyomino is not gatherable or no gathering word can end there.
///
/// Plans a full gathering first, then steers the surviving particle to
/// `p` through the slide graph. Slides never leave the significant
/// pixels, so a target outside them is unreachable and immediately
/// absent.
///
/// # Errors
///
/// [`GatheringError::PixelOutsidePolyomino`] when `p` is not a pixel of
/// the polyomino.
pub fn gather_at_pixel(b: &Boundary, p: Pixel) -> Result<Option<GatherResult>, GatheringError> {
    let index = SideIndex::build(b);
    if !index.contains(p) {
        return Err(GatheringError::PixelOutsidePolyomino(p));
    }
    let planner = Planner::build(b);
    let Some((mut letters, target_state)) = planner.plan() else {
        return Ok(None);
    };
    let Some(goal_state) = planner.ta.state_of(p) else {
        return Ok(None);
    };
    let Some(tail) = singleton_path(&planner.ta, target_state, goal_state) else {
        return Ok(None);
    };
    letters.extend_from_slice(&tail);
    let word = TiltAutomaton::word_from_letters(&letters).full_tilt_normal_form();
    planner.verify_on_states(&word, goal_state);
    verify_on_pixels(b, &word, p);
    Ok(Some(GatherResult {
        sequence: word,
        target: p,
        semantics: Semantics::FULL_TILT_MERGING,
    }))
}

/// Exact shortest gathering of one configuration, by exhaustive
/// breadth-first search over its reachable configurations under full-tilt
/// merging. Doubles as the ground-truth oracle for shortest gathering
/// sequences.
///
/// # Errors
///
/// [`GatheringError::BudgetExceeded`]; propagated [`DynamicsError`] when
/// `c` leaves the polyomino.
///
/// # Panics
///
/// If `c` is empty.
pub fn subset_gathering_exact(
    p: &Polyomino,
    c: &Config,
    budget: u64,
) -> Result<Option<GatherResult>, GatheringError> {
    match oracle::sgs_exact(p, c, budget) {
        Ok(Some((_, word))) => {
            let end = apply(p, c, &word, Semantics::FULL_TILT_MERGING)?;
            assert_eq!(end.len(), 1, "oracle witness was verified already");
            Ok(Some(GatherResult {
                sequence: word,
                target: end.pixels()[0],
                semantics: Semantics::FULL_TILT_MERGING,
            }))
        }
        Ok(None) => Ok(None),
        Err(OracleError::BudgetExceeded(n)) => Err(GatheringError::BudgetExceeded(n)),
        Err(OracleError::Dynamics(e)) => Err(GatheringError::Dynamics(e)),
        Err(other) => unreachable!("gathering search cannot fail with {other}"),
    }
}

/// Bounded search over axis-alternating words: tries every word of length
/// at most `max_len` whose consecutive letters alternate between
/// horizontal and vertical, in length-then-lexicographic order, and
/// returns the first that gathers `c`.
///
/// Because consecutive same-axis full-tilt moves collapse in normal form,
/// the shortest gathering word is always axis-alternating, so this finds
/// a shortest gathering sequence whenever `max_len` is large enough.
pub fn para_gathering(p: &Polyomino, c: &Config, max_len: usize) -> Option<GatherResult> {
    fn dfs(
        p: &Polyomino,
        cfg: &Config,
        last: Option<Direction>,
        left: usize,
        word: &mut Vec<Direction>,
    ) -> Option<Config> {
        if left == 0 {
            return (cfg.len() == 1).then(|| cfg.clone());
        }
        let choices: &[Direction] = match last.map(|d| d.axis()) {
            None => &Direction::ALL,
            Some(Axis::Vertical) => &[Direction::L, Direction::R],
            Some(Axis::Horizontal) => &[Direction::U, Direction::D],
        };
        for &d in choices {
            let next = crate::dynamics::step(p, cfg, d, Semantics::FULL_TILT_MERGING)
                .expect("configuration stays inside the polyomino");
            word.push(d);
            if let Some(end) = dfs(p, &next, Some(d), left - 1, word) {
                return Some(end);
            }
            word.pop();
        }
        None
    }

    for len in 0..=max_len {
        let mut letters = Vec::with_capacity(len);
        if let Some(end) = dfs(p, c, None, len, &mut letters) {
            let word = Word::from(letters);
            let end2 = apply(p, c, &word, Semantics::FULL_TILT_MERGING).ok()?;
            assert_eq!(end2, end, "replay must agree with the search");
            return Some(GatherResult {
                sequence: word,
                target: end.pixels()[0],
                semantics: Semantics::FULL_TILT_MERGING,
            });
        }
    }
    None
}

/// The doubly-cornered segment of a simple maze: the unique maximal run
/// whose both endpoint pixels are corner pixels.
fn doubly_cornered_segment(p: &Polyomino) -> Segment {
    let mut found: Vec<Segment> = p
        .row_segments()
        .into_iter()
        .chain(p.column_segments())
        .filter(|s| s.corner_endpoint_count == 2)
        .collect();
    assert_eq!(
        found.len(),
        1,
        "a gatherable simple maze has exactly one doubly-cornered segment"
    );
    found.pop().unwrap()
}

/// Breadth-first slide distance from `start` to any pixel of `goal`.
fn slide_distance_to(p: &Polyomino, start: usize, goal: &[Pixel]) -> Option<usize> {
    let mut dist = vec![usize::MAX; p.len()];
    let mut queue = std::collections::VecDeque::from([start]);
    dist[start] = 0;
    while let Some(s) = queue.pop_front() {
        if goal.binary_search(&p.pixels()[s]).is_ok() {
            return Some(dist[s]);
        }
        for d in Direction::ALL {
            let t = p.slide_idx(s, d) as usize;
            if dist[t] == usize::MAX {
                dist[t] = dist[s] + 1;
                queue.push_back(t);
            }
        }
    }
    None
}

/// A gathering sequence for a gatherable simple maze whose length is at
/// most four times the shortest one.
///
/// Finds the doubly-cornered segment, measures the largest slide distance
/// `d` from any corner pixel to it, and tries the four candidates built
/// from `d` repetitions of a four-direction sweep plus one final move
/// along the segment's axis. Candidates are verified by merging
/// simulation on the whole pixel set; among the verified ones the
/// shortest (earliest-built on ties) is returned.
///
/// # Errors
///
/// [`GatheringError::NotASimpleMaze`] when the polyomino has a hole or is
/// not a maze; [`GatheringError::NotGatherable`] when gathering is
/// impossible.
pub fn approx_simple_maze(p: &Polyomino) -> Result<GatherResult, GatheringError> {
    let report = classify(p);
    if !(report.simple && report.maze) {
        return Err(GatheringError::NotASimpleMaze);
    }
    let boundary = extract_boundary(p);
    if !is_gatherable(&boundary) {
        return Err(GatheringError::NotGatherable);
    }
    if p.len() == 1 {
        // Nothing to move; the empty word already gathers.
        return Ok(GatherResult {
            sequence: Word::new(),
            target: p.pixels()[0],
            semantics: Semantics::FULL_TILT_MERGING,
        });
    }

    let segment = doubly_cornered_segment(p);
    let corners: Vec<usize> = (0..p.len())
        .filter(|&i| p.is_corner_pixel(p.pixels()[i]))
        .collect();
    let d = corners
        .iter()
        .map(|&s| {
            slide_distance_to(p, s, &segment.pixels)
                .expect("a gatherable maze connects every corner to the segment")
        })
        .max()
        .unwrap_or(0);

    let finals: [Direction; 2] = match segment.axis {
        Axis::Horizontal => [Direction::L, Direction::R],
        Axis::Vertical => [Direction::U, Direction::D],
    };
    let sweeps = [
        [Direction::U, Direction::R, Direction::D, Direction::L],
        [Direction::R, Direction::D, Direction::L, Direction::U],
    ];
    let full = p.full_config();
    let mut best: Option<GatherResult> = None;
    for sweep in sweeps {
        for fin in finals {
            let mut letters: Vec<Direction> = Vec::with_capacity(4 * d + 1);
            for _ in 0..d {
                letters.extend_from_slice(&sweep);
            }
            letters.push(fin);
            let word = Word::from(letters).full_tilt_normal_form();
            let end = apply(p, &full, &word, Semantics::FULL_TILT_MERGING)
                .expect("the full configuration is always valid");
            if end.len() == 1 && best.as_ref().map_or(true, |b| word.len() < b.sequence.len()) {
                best = Some(GatherResult {
                    sequence: word,
                    target: end.pixels()[0],
                    semantics: Semantics::FULL_TILT_MERGING,
                });
            }
        }
    }
    Ok(best.expect("some sweep candidate must gather a gatherable simple maze"))
}

/// A gathering sequence under single-step merging: a synchronizing word
/// of the single-step automaton, which exists for every connected
/// polyomino.
///
/// `budget` caps the number of pair states (`N(N+1)/2`) the planner may
/// build.
///
/// # Errors
///
/// [`GatheringError::BudgetExceeded`].
pub fn s1_gathering(p: &Polyomino, budget: u64) -> Result<GatherResult, GatheringError> {
    let n = p.len() as u64;
    if n * (n + 1) / 2 > budget {
        return Err(GatheringError::BudgetExceeded(budget));
    }
    let ta = build_s1_automaton(p);
    let letters = synchronizing_word(ta.automaton())
        .expect("every connected polyomino gathers under single steps");
    let word = TiltAutomaton::word_from_letters(&letters);
    let end = apply(p, &p.full_config(), &word, Semantics::SINGLE_STEP_MERGING)
        .expect("the full configuration is always valid");
    assert_eq!(
        end.len(),
        1,
        "synchronizing word must gather the whole polyomino"
    );
    Ok(GatherResult {
        sequence: word,
        target: end.pixels()[0],
        semantics: Semantics::SINGLE_STEP_MERGING,
    })
}
