//! Particle models on polyominoes under global tilts.
//!
//! A polyomino is a finite edge-connected set of unit cells ("pixels") in the
//! square lattice. Configurations of particles living on those pixels evolve
//! under global tilt moves: every particle simultaneously receives the same
//! command from the compass alphabet `U`, `D`, `L`, `R`. Two timing models are
//! supported — full tilt (particles slide until they hit something) and single
//! step (particles advance one cell) — each in a merging variant (particles
//! share pixels and fuse) and a blocking variant (particles occupy distinct
//! pixels and pile up).
//!
//! The crate provides:
//!
//! * [`geometry`] — pixel sets, boundary loops, segment structure, shape
//!   classification, significant pixels and sparse slide projection;
//! * [`dynamics`] — the four step semantics, word application and word
//!   normalization, all deterministic;
//! * [`automata`] — finite semiautomata, the tilt automaton of a polyomino,
//!   pair-merging forests, synchronizing words, exact reset thresholds and
//!   unary (tally) cycle automata;
//! * [`gathering`] — decision procedures and word constructions that collect
//!   all particles of a polyomino on a single pixel;
//! * [`oracle`] — brute-force breadth-first search over configuration space,
//!   used both as a standalone solver and as the ground truth the rest of the
//!   crate verifies itself against;
//! * [`generators`] — families of self-verifying benchmark instances that
//!   embed automata problems (synchronization, tally intersection, shortest
//!   common supersequences) into gathering problems;
//! * [`sampling`] — seeded random instance generators for tests;
//! * [`format`] — plain-text interchange formats for grids, instances,
//!   automata, boundaries and move words.
//!
//! Everything in the crate is deterministic: pixel sets are iterated in
//! lexicographic `(y, x)` order, ties are broken by that order or by fixed
//! letter order `U < D < L < R`, and random sampling takes explicit seeds.

pub mod automata;
mod bits;
pub mod dynamics;
pub mod format;
pub mod gathering;
pub mod generators;
pub mod geometry;
pub mod oracle;
pub mod parallel;
pub mod sampling;

pub use dynamics::{Direction, Model, Semantics, Variant, Word};
pub use geometry::{Boundary, Config, Pixel, Polyomino};
