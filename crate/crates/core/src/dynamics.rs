//! Tilt directions, move words and the four step semantics.
//!
//! A move is a compass letter `U`, `D`, `L` or `R` broadcast to every
//! particle at once. Two timing models are supported:
//!
//! * **full tilt** — every particle slides in the commanded direction until
//!   it hits the boundary or a blocking particle;
//! * **single step** — every particle advances at most one cell.
//!
//! Each model comes in two collision variants:
//!
//! * **merging** — particles are indistinguishable points that may share a
//!   pixel; a configuration is the set of occupied pixels and collisions
//!   simply fuse;
//! * **blocking** — particles are solid; a moving particle stops behind a
//!   particle that cannot move, so per-pixel occupancy is exclusive and
//!   particle count is conserved.
//!
//! Words act left to right: applying `wv` means applying `w`, then `v`.
//! Full-tilt steps are idempotent and a move followed by a same-axis move is
//! absorbed by it, which gives every word a unique axis-alternating
//! [normal form](Word::full_tilt_normal_form) with the same full-tilt
//! action. Neither law holds in the single-step model, so the normal form
//! is named for — and only promised under — full tilt.

use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::geometry::{Axis, Config, Pixel, Polyomino};

// ===========================================================================
// Directions
// ===========================================================================

/// A compass tilt command. The enum order `U < D < L < R` is the letter
/// order used for every lexicographic tie-break in the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Direction {
    U = 0,
    D = 1,
    L = 2,
    R = 3,
}

impl Direction {
    /// All four letters in canonical order.
    pub const ALL: [Direction; 4] = [Direction::U, Direction::D, Direction::L, Direction::R];

    /// Unit lattice offset `(dx, dy)`; `U` increases `y`, `R` increases `x`.
    pub fn offset(self) -> (i32, i32) {
        match self {
            Direction::U => (0, 1),
            Direction::D => (0, -1),
            Direction::L => (-1, 0),
            Direction::R => (1, 0),
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::U => Direction::D,
            Direction::D => Direction::U,
            Direction::L => Direction::R,
            Direction::R => Direction::L,
        }
    }

    /// Quarter turn clockwise (to the right of a walker facing `self`).
    pub fn turn_right(self) -> Direction {
        match self {
            Direction::U => Direction::R,
            Direction::R => Direction::D,
            Direction::D => Direction::L,
            Direction::L => Direction::U,
        }
    }

    /// Quarter turn counterclockwise.
    pub fn turn_left(self) -> Direction {
        self.turn_right().opposite()
    }

    /// The axis this direction moves along.
    pub fn axis(self) -> Axis {
        match self {
            Direction::U | Direction::D => Axis::Vertical,
            Direction::L | Direction::R => Axis::Horizontal,
        }
    }

    pub fn is_perpendicular_to(self, other: Direction) -> bool {
        self.axis() != other.axis()
    }

    pub fn to_char(self) -> char {
        match self {
            Direction::U => 'U',
            Direction::D => 'D',
            Direction::L => 'L',
            Direction::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Direction> {
        match c {
            'U' => Some(Direction::U),
            'D' => Some(Direction::D),
            'L' => Some(Direction::L),
            'R' => Some(Direction::R),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl FromStr for Direction {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => {
                Direction::from_char(c).ok_or(WordParseError::BadLetter { ch: c, pos: 0 })
            }
            _ => Err(WordParseError::NotASingleLetter),
        }
    }
}

// ===========================================================================
// Words
// ===========================================================================

/// Error raised when parsing a move word from text.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("letter {ch:?} at position {pos} is not one of U, D, L, R")]
    BadLetter { ch: char, pos: usize },
    #[error("expected exactly one direction letter")]
    NotASingleLetter,
}

/// A finite sequence of tilt moves, applied left to right.
///
/// Serializes as an uppercase string over `UDLR` with no separators; the
/// empty word serializes as the empty string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Direction>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Direction] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, d: Direction) {
        self.0.push(d);
    }

    pub fn iter(&self) -> impl Iterator<Item = Direction> + '_ {
        self.0.iter().copied()
    }

    /// `self` concatenated with `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// `self` concatenated with itself `k` times (`k = 0` gives the empty
    /// word).
    pub fn repeated(&self, k: usize) -> Word {
        let mut out = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    /// The unique axis-alternating word with the same full-tilt action.
    ///
    /// A full-tilt move is idempotent, and a move directly followed by a
    /// move on the same axis is absorbed by it (sliding left after sliding
    /// right is just sliding left). One left-to-right pass therefore
    /// suffices: whenever the incoming letter shares an axis with the last
    /// kept letter, it replaces it. The result never beats the original in
    /// length and alternates horizontal and vertical letters.
    ///
    /// The single-step model obeys neither law, so this normal form must
    /// not be used to rewrite single-step words.
    pub fn full_tilt_normal_form(&self) -> Word {
        let mut out: Vec<Direction> = Vec::with_capacity(self.0.len());
        for &d in &self.0 {
            match out.last_mut() {
                Some(t) if t.axis() == d.axis() => *t = d,
                _ => out.push(d),
            }
        }
        Word(out)
    }
}

impl From<Vec<Direction>> for Word {
    fn from(v: Vec<Direction>) -> Word {
        Word(v)
    }
}

impl FromIterator<Direction> for Word {
    fn from_iter<I: IntoIterator<Item = Direction>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl Extend<Direction> for Word {
    fn extend<I: IntoIterator<Item = Direction>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = Direction;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Direction>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{}", d.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| {
                Direction::from_char(ch).ok_or(WordParseError::BadLetter { ch, pos })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

// ===========================================================================
// Semantics selection
// ===========================================================================

/// Timing model: how far a particle travels per move.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Model {
    /// Particles slide until blocked.
    FullTilt,
    /// Particles advance at most one cell.
    SingleStep,
}

/// Collision variant: what happens when particles meet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    /// Particles may share a pixel and fuse; configurations can shrink.
    Merging,
    /// Particles are solid and pile up; particle count is conserved.
    Blocking,
}

/// A full choice of step semantics: timing model plus collision variant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Semantics {
    pub model: Model,
    pub variant: Variant,
}

impl Semantics {
    pub const FULL_TILT_MERGING: Semantics = Semantics {
        model: Model::FullTilt,
        variant: Variant::Merging,
    };
    pub const FULL_TILT_BLOCKING: Semantics = Semantics {
        model: Model::FullTilt,
        variant: Variant::Blocking,
    };
    pub const SINGLE_STEP_MERGING: Semantics = Semantics {
        model: Model::SingleStep,
        variant: Variant::Merging,
    };
    pub const SINGLE_STEP_BLOCKING: Semantics = Semantics {
        model: Model::SingleStep,
        variant: Variant::Blocking,
    };

    pub const ALL: [Semantics; 4] = [
        Semantics::FULL_TILT_MERGING,
        Semantics::FULL_TILT_BLOCKING,
        Semantics::SINGLE_STEP_MERGING,
        Semantics::SINGLE_STEP_BLOCKING,
    ];
}

// ===========================================================================
// Errors
// ===========================================================================

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum DynamicsError {
    #[error("configuration contains pixel {pixel}, which is outside the polyomino")]
    ConfigurationNotInPolyomino { pixel: Pixel },
    #[error("pixel {0} lies outside the polyomino")]
    PixelOutsidePolyomino(Pixel),
}

// ===========================================================================
// Stepping
// ===========================================================================

/// One step of the chosen semantics on a packed index bitset.
///
/// `cur` and `next` are bitsets over the polyomino's pixel indices; `next`
/// is overwritten. This is the shared kernel behind [`step`], [`apply`] and
/// the configuration-space oracle.
pub(crate) fn step_bits(
    p: &Polyomino,
    sem: Semantics,
    d: Direction,
    cur: &[u64],
    next: &mut [u64],
) {
    bits::clear_all(next);
    match (sem.model, sem.variant) {
        (Model::FullTilt, Variant::Merging) => {
            // Every particle slides to its run's far end; merging is the
            // set union that falls out of bit-setting.
            for i in bits::iter_ones(cur) {
                bits::set(next, p.slide_idx(i, d) as usize);
            }
        }
        (Model::FullTilt, Variant::Blocking) => {
            // Particles within one run pack against the commanded side;
            // counts per run are conserved.
            for members in p.runs_along(d) {
                let k = members
                    .iter()
                    .filter(|&&i| bits::get(cur, i as usize))
                    .count();
                if k == 0 {
                    continue;
                }
                let packed = match d {
                    Direction::U | Direction::R => &members[members.len() - k..],
                    Direction::D | Direction::L => &members[..k],
                };
                for &i in packed {
                    bits::set(next, i as usize);
                }
            }
        }
        (Model::SingleStep, Variant::Merging) => {
            // Advance one cell when the neighbor exists, else stay.
            for i in bits::iter_ones(cur) {
                let j = p.neighbor_idx(i, d).map_or(i, |x| x as usize);
                bits::set(next, j);
            }
        }
        (Model::SingleStep, Variant::Blocking) => {
            // A particle stays exactly when the stretch from it to the
            // commanded wall of its run is fully occupied (it is blocked
            // transitively); otherwise the whole chain behind the first
            // gap advances one cell, so a pixel is also covered when its
            // trailing neighbor is occupied.
            for members in p.runs_along(d) {
                let last = members.len() - 1;
                match d {
                    Direction::U | Direction::R => {
                        let mut chain = true;
                        for j in (0..=last).rev() {
                            let occ = bits::get(cur, members[j] as usize);
                            if occ && j < last {
                                bits::set(next, members[j + 1] as usize);
                            }
                            chain = occ && (j == last || chain);
                            if chain {
                                bits::set(next, members[j] as usize);
                            }
                        }
                    }
                    Direction::D | Direction::L => {
                        let mut chain = true;
                        for j in 0..=last {
                            let occ = bits::get(cur, members[j] as usize);
                            if occ && j > 0 {
                                bits::set(next, members[j - 1] as usize);
                            }
                            chain = occ && (j == 0 || chain);
                            if chain {
                                bits::set(next, members[j] as usize);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Packs a configuration into an index bitset, validating membership.
pub(crate) fn config_to_bits(p: &Polyomino, c: &Config) -> Result<Box<[u64]>, DynamicsError> {
    let mut out = bits::new_box(p.len());
    for q in c.iter() {
        match p.pixel_index(q) {
            Some(i) => bits::set(&mut out, i),
            None => return Err(DynamicsError::ConfigurationNotInPolyomino { pixel: q }),
        }
    }
    Ok(out)
}

/// Unpacks an index bitset back into a configuration.
pub(crate) fn bits_to_config(p: &Polyomino, b: &[u64]) -> Config {
    // Index order is (y, x) order, so the pixels come out sorted.
    Config::new(bits::iter_ones(b).map(|i| p.pixel_at(i)).collect())
}

/// Applies one move to a configuration.
pub fn step(
    p: &Polyomino,
    c: &Config,
    d: Direction,
    sem: Semantics,
) -> Result<Config, DynamicsError> {
    let cur = config_to_bits(p, c)?;
    let mut next = bits::new_box(p.len());
    step_bits(p, sem, d, &cur, &mut next);
    Ok(bits_to_config(p, &next))
}

/// Applies a whole word to a configuration, left to right.
pub fn apply(
    p: &Polyomino,
    c: &Config,
    w: &Word,
    sem: Semantics,
) -> Result<Config, DynamicsError> {
    let mut cur = config_to_bits(p, c)?;
    let mut next = bits::new_box(p.len());
    for d in w {
        step_bits(p, sem, d, &cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
    }
    Ok(bits_to_config(p, &cur))
}

/// Where a lone particle at `q` ends up after one move.
///
/// With a single particle the merging and blocking variants agree, so only
/// the timing model matters: full tilt slides to the run's far end, single
/// step advances one cell when possible.
pub fn singleton_move(
    p: &Polyomino,
    q: Pixel,
    d: Direction,
    model: Model,
) -> Result<Pixel, DynamicsError> {
    let i = p
        .pixel_index(q)
        .ok_or(DynamicsError::PixelOutsidePolyomino(q))?;
    let j = match model {
        Model::FullTilt => p.slide_idx(i, d) as usize,
        Model::SingleStep => p.neighbor_idx(i, d).map_or(i, |x| x as usize),
    };
    Ok(p.pixel_at(j))
}

/// Folds [`singleton_move`] over a word.
pub fn singleton_apply(
    p: &Polyomino,
    q: Pixel,
    w: &Word,
    model: Model,
) -> Result<Pixel, DynamicsError> {
    let mut at = q;
    for d in w {
        at = singleton_move(p, at, d, model)?;
    }
    Ok(at)
}

// ===========================================================================
// Tests
// ===========================================================================
