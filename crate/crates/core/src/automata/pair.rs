//! Pair automata and synchronizing words.
//!
//! The pair automaton of a semi-automaton has one state per unordered pair
//! of base states (singletons included) and moves both components
//! elementwise. A single backward breadth-first search from the singleton
//! states yields, for every pair, the exact length of a shortest merging
//! word plus a forest edge (letter and successor pair) realizing it.
//! Synchronizing words are then found greedily: repeatedly merge the
//! cheapest pair inside the current image by replaying forest letters.

use std::collections::VecDeque;

use super::SemiAutomaton;

/// Shortest-merge data for every unordered pair of states of a base
/// automaton.
///
/// Pairs are triangles `{lo, hi}` with `lo <= hi`; the diagonal entries
/// are the already-merged singletons at distance zero. `distance` is the
/// exact length of a shortest word collapsing the pair to one state, or
/// `None` if no word does.
#[derive(Debug, Clone)]
pub struct PairAutomaton {
    base_states: usize,
    dist: Vec<Option<u32>>,
    /// Per pair: letter to read next and the pair it leads to, on some
    /// shortest path to a singleton. `None` on singletons and unmergeable
    /// pairs.
    edge: Vec<Option<(u32, u32)>>,
}

/// Triangular index of the unordered pair `{a, b}`.
fn pair_index(a: usize, b: usize) -> usize {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    hi * (hi + 1) / 2 + lo
}

impl PairAutomaton {
    pub fn base_state_count(&self) -> usize {
        self.base_states
    }

    /// Number of pair states, `n(n+1)/2`.
    pub fn pair_state_count(&self) -> usize {
        self.dist.len()
    }

    /// Exact shortest merge length for `{p, q}`; zero when `p == q`,
    /// `None` when the pair cannot be merged.
    pub fn distance(&self, p: usize, q: usize) -> Option<usize> {
        self.dist[pair_index(p, q)].map(|d| d as usize)
    }

    /// A shortest word merging `{p, q}`, reconstructed from forest edges.
    /// The empty word for `p == q`; `None` when unmergeable.
    pub fn merge_word(&self, p: usize, q: usize) -> Option<Vec<usize>> {
        self.dist[pair_index(p, q)]?;
        let mut word = Vec::new();
        let mut cur = pair_index(p, q);
        while let Some((letter, parent)) = self.edge[cur] {
            word.push(letter as usize);
            cur = parent as usize;
        }
        debug_assert_eq!(self.dist[cur], Some(0));
        Some(word)
    }

    /// True when every pair of base states has a merging word.
    pub fn all_mergeable(&self) -> bool {
        self.dist.iter().all(|d| d.is_some())
    }
}

/// Builds the pair automaton of `a` and its shortest-merge forest.
///
/// Distances are computed by one breadth-first search over reversed pair
/// transitions, seeded with all singletons, so each is the true minimum
/// merge length.
pub fn pair_automaton(a: &SemiAutomaton) -> PairAutomaton {
    let n = a.state_count();
    let m = n * (n + 1) / 2;
    let letters = a.alphabet_len();

    // Reverse adjacency over pair states: rev[target] lists (source,
    // letter) with source·letter = target and source != target.
    let mut rev: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
    for hi in 0..n {
        for lo in 0..=hi {
            let src = pair_index(lo, hi);
            for letter in 0..letters {
                let tgt = pair_index(a.next(lo, letter), a.next(hi, letter));
                if tgt != src {
                    rev[tgt].push((src as u32, letter as u32));
                }
            }
        }
    }

    let mut dist: Vec<Option<u32>> = vec![None; m];
    let mut edge: Vec<Option<(u32, u32)>> = vec![None; m];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let si = pair_index(s, s);
        dist[si] = Some(0);
        queue.push_back(si);
    }
    while let Some(tgt) = queue.pop_front() {
        let next_dist = dist[tgt].unwrap() + 1;
        for &(src, letter) in &rev[tgt] {
            let src = src as usize;
            if dist[src].is_none() {
                dist[src] = Some(next_dist);
                edge[src] = Some((letter, tgt as u32));
                queue.push_back(src);
            }
        }
    }

    PairAutomaton {
        base_states: n,
        dist,
        edge,
    }
}

/// True when every unordered pair of states can be merged — equivalently,
/// when some word maps all states to a single one.
pub fn is_synchronizing(a: &SemiAutomaton) -> bool {
    pair_automaton(a).all_mergeable()
}

/// A synchronizing word for `a`, or `None` if `a` has an unmergeable pair.
///
/// Greedy strategy: keep the image of the full state set; as long as it
/// holds more than one state, pick the pair with the smallest shortest-merge
/// distance (ties broken by lexicographic pair order) and replay its forest
/// letters, shrinking the image along the way. Each merge costs at most the
/// pair-state count, so the result is shorter than `n³`. The word is
/// re-applied from scratch before returning to confirm it resets the
/// automaton.
pub fn synchronizing_word(a: &SemiAutomaton) -> Option<Vec<usize>> {
    let pairs = pair_automaton(a);
    if !pairs.all_mergeable() {
        return None;
    }
    let n = a.state_count();
    let mut image: Vec<usize> = a.all_states();
    let mut word = Vec::new();
    while image.len() > 1 {
        // Cheapest pair in the current image, first-in-lex on ties.
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, &p) in image.iter().enumerate() {
            for &q in &image[i + 1..] {
                let d = pairs
                    .distance(p, q)
                    .expect("mergeable automaton has a distance for every pair");
                if best.map_or(true, |(bd, _, _)| d < bd) {
                    best = Some((d, p, q));
                }
            }
        }
        let (_, p, q) = best.expect("image with two or more states has a pair");
        let mut cur = pair_index(p, q);
        while let Some((letter, parent)) = pairs.edge[cur] {
            word.push(letter as usize);
            image = a.image(&image, letter as usize);
            cur = parent as usize;
        }
    }
    assert_eq!(
        a.image_word(&a.all_states(), &word).len(),
        1,
        "greedy pair merging must produce a reset word"
    );
    assert!(word.len() <= n * n * n, "greedy word exceeded the cubic bound");
    Some(word)
}
