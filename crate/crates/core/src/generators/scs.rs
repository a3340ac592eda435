//! Shortest-common-supersequence reductions to gathering.

#![allow(dead_code, unused_variables)]

use crate::geometry::{Config, Polyomino};

use super::GeneratorError;

/// A board whose shortest gathering sequence encodes the shortest common
/// supersequence of the input words.
#[derive(Debug, Clone)]
pub struct ScsInstance {
    pub polyomino: Polyomino,
    pub initial: Config,
    pub words: Vec<String>,
    pub scs_length: usize,
    pub expected_gathering_length: usize,
}

/// Exact shortest-common-supersequence length by breadth-first search
/// over per-word position vectors.
pub fn scs_exact(words: &[String]) -> usize {
    todo!("position-vector BFS")
}

/// Builds the binary-alphabet reduction board.
pub fn gen_scs_binary(words: &[String]) -> Result<ScsInstance, GeneratorError> {
    todo!("binary gadget chain")
}

/// Builds the general-alphabet reduction board.
pub fn gen_scs_general(words: &[String]) -> Result<ScsInstance, GeneratorError> {
    todo!("bit-encoded gadget chain")
}
