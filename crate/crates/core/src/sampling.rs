//! Seeded random generation of polyominoes, configurations, words, and
//! automata.
//!
//! Everything here is deterministic given the seed: all functions draw
//! from a caller-supplied ChaCha stream cipher RNG, so identical seeds
//! reproduce identical instances on every platform. Generators that
//! promise structural properties (connectivity, gatherability, maze
//! shape) check them before returning and panic if the construction ever
//! violates its own contract.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{is_synchronizing, SemiAutomaton};
use crate::dynamics::{Direction, Word};
use crate::gathering::is_gatherable;
use crate::geometry::{classify, extract_boundary, Config, Pixel, Polyomino};

/// The RNG used by every randomized driver in this crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random connected polyomino grown by repeated attachment:
/// starting from one pixel, each step adds a uniformly chosen free
/// neighbor of the current shape. Exactly `n` pixels.
pub fn random_polyomino(rng: &mut ChaCha8Rng, n: usize) -> Polyomino {
    assert!(n >= 1, "a polyomino has at least one pixel");
    let mut cells: Vec<Pixel> = vec![Pixel::new(0, 0)];
    let mut occupied: std::collections::HashSet<Pixel> = cells.iter().copied().collect();
    while cells.len() < n {
        let mut frontier: Vec<Pixel> = Vec::new();
        for &c in &cells {
            for d in Direction::ALL {
                let q = c.step(d);
                if !occupied.contains(&q) {
                    frontier.push(q);
                }
            }
        }
        frontier.sort();
        frontier.dedup();
        let &pick = frontier.choose(rng).expect("a finite shape has free neighbors");
        occupied.insert(pick);
        cells.push(pick);
    }
    Polyomino::from_pixels(cells).expect("growth by attachment stays connected")
}

/// A connected polyomino with at most `n_max` pixels that the full-tilt
/// model can gather, found by rejection sampling.
pub fn random_gatherable_polyomino(rng: &mut ChaCha8Rng, n_max: usize) -> Polyomino {
    assert!(n_max >= 1);
    loop {
        let n = rng.gen_range(1..=n_max);
        let p = random_polyomino(rng, n);
        if is_gatherable(&extract_boundary(&p)) {
            return p;
        }
    }
}

/// A random configuration of exactly `k` particles on `p`, sampled
/// uniformly without replacement.
pub fn random_config(rng: &mut ChaCha8Rng, p: &Polyomino, k: usize) -> Config {
    assert!(k <= p.len(), "cannot place {k} particles on {} pixels", p.len());
    let chosen: Vec<Pixel> = p.pixels().choose_multiple(rng, k).copied().collect();
    Config::new(chosen)
}

/// A random configuration with a uniformly chosen particle count between
/// 1 and the full pixel count.
pub fn random_nonempty_config(rng: &mut ChaCha8Rng, p: &Polyomino) -> Config {
    let k = rng.gen_range(1..=p.len());
    random_config(rng, p, k)
}

/// A uniformly random move word of the given length.
pub fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    let letters: Vec<Direction> = (0..len)
        .map(|_| *Direction::ALL.choose(rng).unwrap())
        .collect();
    Word::from(letters)
}

/// A uniformly random complete deterministic automaton: every
/// `(state, letter)` transition is drawn independently.
pub fn random_automaton(rng: &mut ChaCha8Rng, states: usize, letters: usize) -> SemiAutomaton {
    let rows = (0..letters)
        .map(|_| (0..states).map(|_| rng.gen_range(0..states)).collect())
        .collect();
    SemiAutomaton::new(states, rows).expect("all transitions drawn in range")
}

/// A random automaton that synchronizes, found by rejection sampling.
///
/// # Panics
///
/// After `max_tries` consecutive non-synchronizing draws.
pub fn random_synchronizing_automaton(
    rng: &mut ChaCha8Rng,
    states: usize,
    letters: usize,
    max_tries: usize,
) -> SemiAutomaton {
    for _ in 0..max_tries {
        let a = random_automaton(rng, states, letters);
        if is_synchronizing(&a) {
            return a;
        }
    }
    panic!("no synchronizing automaton with {states} states found in {max_tries} draws");
}

/// A random set of at most `max_words` distinct nonempty binary words of
/// length at most `max_len`, always containing at least one word.
pub fn random_binary_words(
    rng: &mut ChaCha8Rng,
    max_words: usize,
    max_len: usize,
) -> Vec<Vec<bool>> {
    assert!(max_words >= 1 && max_len >= 1);
    let count = rng.gen_range(1..=max_words);
    let mut words: Vec<Vec<bool>> = Vec::new();
    while words.len() < count {
        let len = rng.gen_range(1..=max_len);
        let w: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
        if !words.contains(&w) {
            words.push(w);
        }
    }
    words
}

/// A random gatherable hole-free maze with at most `n_max` pixels.
///
/// The shape is a caterpillar: one straight spine plus perpendicular
/// teeth attached at interior spine positions. Teeth never sit on both
/// sides of the same position (that traps a particle in the tooth
/// column) and same-side teeth are never adjacent (that would thicken
/// the shape). Half the time the result is transposed so both
/// orientations occur. The promised properties are re-checked before
/// returning.
pub fn random_maze(rng: &mut ChaCha8Rng, n_max: usize) -> Polyomino {
    assert!(n_max >= 3, "maze sampling needs room for a spine");
    let spine_len = rng.gen_range(3..=n_max.min(12));
    let mut cells: Vec<Pixel> = (0..spine_len as i32).map(|x| Pixel::new(x, 0)).collect();
    let mut budget = n_max - spine_len;

    let mut positions: Vec<i32> = (1..spine_len as i32 - 1).collect();
    positions.shuffle(rng);
    // side of the tooth at each spine position: +1 above, -1 below
    let mut side_at = vec![0i32; spine_len];
    for x in positions {
        if budget == 0 {
            break;
        }
        if !rng.gen_bool(0.5) {
            continue;
        }
        let side = if rng.gen_bool(0.5) { 1 } else { -1 };
        let xi = x as usize;
        if side_at[xi - 1] == side || side_at[xi + 1] == side {
            continue;
        }
        let len = rng.gen_range(1..=3.min(budget));
        side_at[xi] = side;
        for h in 1..=len as i32 {
            cells.push(Pixel::new(x, side * h));
        }
        budget -= len;
    }

    if rng.gen_bool(0.5) {
        for c in &mut cells {
            std::mem::swap(&mut c.x, &mut c.y);
        }
    }
    let p = Polyomino::from_pixels(cells).expect("spine and teeth are connected");
    let report = classify(&p);
    assert!(
        report.simple && report.maze,
        "caterpillar construction must yield a simple maze"
    );
    assert!(
        is_gatherable(&extract_boundary(&p)),
        "caterpillar mazes must be gatherable"
    );
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{apply, Semantics};
    use crate::gathering::full_gathering;

    #[test]
    fn polyomino_growth_hits_the_requested_size() {
        let mut rng = rng_from_seed(7);
        for n in [1, 2, 5, 12, 30] {
            let p = random_polyomino(&mut rng, n);
            assert_eq!(p.len(), n);
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let a = random_polyomino(&mut rng_from_seed(99), 15);
        let b = random_polyomino(&mut rng_from_seed(99), 15);
        assert_eq!(a.pixels(), b.pixels());
        let c = random_polyomino(&mut rng_from_seed(100), 15);
        assert!(a.pixels() != c.pixels() || a.len() == 1);
        let w1 = random_word(&mut rng_from_seed(5), 8);
        let w2 = random_word(&mut rng_from_seed(5), 8);
        assert_eq!(w1, w2);
    }

    #[test]
    fn configs_fit_their_polyomino() {
        let mut rng = rng_from_seed(3);
        let p = random_polyomino(&mut rng, 18);
        for _ in 0..20 {
            let c = random_nonempty_config(&mut rng, &p);
            assert!(!c.is_empty() && c.len() <= p.len());
            assert!(c.pixels().iter().all(|&q| p.pixel_index(q).is_some()));
            // Words applied to sampled configurations never error.
            let w = random_word(&mut rng, 6);
            apply(&p, &c, &w, Semantics::FULL_TILT_MERGING).unwrap();
        }
    }

    #[test]
    fn random_automata_are_well_formed_and_synchronizing_when_promised() {
        let mut rng = rng_from_seed(11);
        for _ in 0..10 {
            let a = random_automaton(&mut rng, 5, 2);
            assert_eq!((a.state_count(), a.alphabet_len()), (5, 2));
        }
        for states in 2..=5 {
            let a = random_synchronizing_automaton(&mut rng, states, 2, 10_000);
            assert!(is_synchronizing(&a));
        }
    }

    #[test]
    fn gatherable_samples_really_gather() {
        let mut rng = rng_from_seed(21);
        for _ in 0..15 {
            let p = random_gatherable_polyomino(&mut rng, 20);
            let r = full_gathering(&extract_boundary(&p)).expect("sampled as gatherable");
            let end = apply(&p, &p.full_config(), &r.sequence, r.semantics).unwrap();
            assert_eq!(end, Config::singleton(r.target));
        }
    }

    #[test]
    fn maze_samples_satisfy_their_contract_across_seeds() {
        for seed in 0..30 {
            let mut rng = rng_from_seed(seed);
            let p = random_maze(&mut rng, 40);
            assert!(p.len() <= 40);
            let report = classify(&p);
            assert!(report.simple && report.maze);
        }
    }

    #[test]
    fn binary_word_sets_are_distinct_and_bounded() {
        let mut rng = rng_from_seed(17);
        for _ in 0..25 {
            let ws = random_binary_words(&mut rng, 4, 4);
            assert!(!ws.is_empty() && ws.len() <= 4);
            for (i, w) in ws.iter().enumerate() {
                assert!((1..=4).contains(&w.len()));
                assert!(!ws[..i].contains(w));
            }
        }
    }
}
