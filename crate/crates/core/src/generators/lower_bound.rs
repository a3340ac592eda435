//! Conveyor families with forced long gathering sequences.

#![allow(dead_code, unused_variables)]

use crate::geometry::{Config, Pixel, Polyomino};

use super::GeneratorError;

/// Census class of a board pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PixelClass {
    P,
    Q,
    R,
    S,
    Other,
}

/// A conveyor board of parameter `m` whose shortest gathering sequence
/// grows linearly in `m` while the board stays census-bounded.
#[derive(Debug, Clone)]
pub struct LowerBoundInstance {
    pub polyomino: Polyomino,
    pub initial: Config,
    pub classes: Vec<(Pixel, PixelClass)>,
}

/// Builds the parameterised conveyor board.
pub fn gen_lower_bound(m: usize, as_maze: bool) -> Result<LowerBoundInstance, GeneratorError> {
    todo!("conveyor lower-bound family")
}
