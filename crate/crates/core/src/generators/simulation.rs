//! Boards whose single-particle tilt behaviour simulates a binary automaton.

#![allow(dead_code, unused_variables)]

use crate::automata::Acceptor;
use crate::dynamics::Word;
use crate::geometry::{Pixel, Polyomino};

use super::GeneratorError;

/// A board that simulates a two-letter automaton: each state has a
/// representative pixel, letter `0` is played as `URDL` and letter `1`
/// as `DRUL`, and every such block moves each representative to the
/// representative of the successor state.
#[derive(Debug, Clone)]
pub struct SimulationInstance {
    pub polyomino: Polyomino,
    pub representatives: Vec<Pixel>,
    pub acceptor: Acceptor,
    pub as_maze: bool,
}

/// Builds the simulating board for a binary-alphabet acceptor.
pub fn gen_simulation(acceptor: &Acceptor, as_maze: bool) -> Result<SimulationInstance, GeneratorError> {
    todo!("state-row board construction")
}

/// Rewrites a move word into representative-to-representative letter
/// blocks of equal or shorter length, failing if the word ever leaves
/// the representative set.
pub fn canonicalize_cycle_word(
    instance: &SimulationInstance,
    word: &Word,
) -> Result<Word, GeneratorError> {
    todo!("leg-by-leg block matching")
}
