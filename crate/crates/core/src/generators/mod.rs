//! Self-verifying benchmark instance families.
//!
//! Each generator in this module emits a polyomino instance together with
//! the annotations (representative pixels, start configurations, goals)
//! that downstream tools need, and refuses to return anything that fails
//! its own simulation-based verification pass: every structural claim the
//! instance is supposed to satisfy is checked by running the tilt dynamics
//! on the freshly built shape. A generator that cannot meet its contract
//! aborts with a named invariant instead of emitting a broken instance.
//!
//! Families:
//! - [`gen_lower_bound`]: conveyor polyominoes whose shortest subset
//!   gathering sequences grow quadratically in the corner count.
//! - [`gen_simulation`]: polyominoes that simulate binary automata, with
//!   one representative pixel per state and fixed four-move cycles for the
//!   two letters; optionally decorated into a maze.
//! - [`gen_tally`]: strip layouts that run one cyclic unary acceptor per
//!   strip on a shared four-move conveyor cycle, with a common goal column
//!   reachable exactly from accepting representatives.
//! - [`gen_tiltcover`] / [`gen_occupancy_variant`]: reduction wrappers
//!   around the tally layout for covering and occupancy decision problems.
//! - [`gen_scs_binary`] / [`gen_scs_general`]: gadget chains translating
//!   shortest-common-supersequence questions into gathering questions.
//! - [`gen_prime_tally`]: cyclic unary acceptors with pairwise coprime
//!   cycle lengths, for Chinese-remainder style length forcing.

use thiserror::Error;

use crate::automata::AutomataError;
use crate::dynamics::DynamicsError;
use crate::geometry::GeometryError;

mod kit;
mod lower_bound;
mod prime;
mod scs;
mod simulation;
mod tally;

pub use kit::GridBuilder;
pub use lower_bound::{gen_lower_bound, LowerBoundInstance, PixelClass};
pub use prime::gen_prime_tally;
pub use scs::{gen_scs_binary, gen_scs_general, scs_exact, ScsInstance};
pub use simulation::{canonicalize_cycle_word, gen_simulation, SimulationInstance};
pub use tally::{gen_occupancy_variant, gen_tally, gen_tiltcover, OccupancyInstance, TallyInstance, TiltCoverInstance};

/// Errors shared by the instance generators.
#[derive(Debug, Error)]
pub enum GeneratorError {
    /// An automaton input uses an alphabet the generator cannot encode.
    #[error("unsupported alphabet: {0}")]
    InvalidAlphabet(String),
    /// A word-list input was empty or contained an empty word.
    #[error("word list invalid: {0}")]
    EmptyWordList(String),
    /// A prime-list input contained a number that is not an odd prime.
    #[error("{0} is not an odd prime at least 3")]
    NotOddPrime(u64),
    /// A cyclic-acceptor input or list violates the required shape.
    #[error("invalid tally input: {0}")]
    InvalidTallyShape(String),
    /// A move sequence never returns any representative to the
    /// representative set, so it cannot be rewritten into cycle blocks.
    #[error("sequence is not representative-closed: {0}")]
    NotRepresentativeClosed(String),
    /// The built instance failed its own verification pass; the named
    /// invariant identifies the first check that did not hold.
    #[error("self-verification failed: invariant `{invariant}`: {detail}")]
    VerificationFailed {
        invariant: &'static str,
        detail: String,
    },
    /// Geometry construction failed (disconnected or empty pixel set).
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// Automaton construction failed.
    #[error(transparent)]
    Automata(#[from] AutomataError),
    /// Simulation during verification failed.
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

impl GeneratorError {
    pub(crate) fn verify(invariant: &'static str, detail: impl Into<String>) -> Self {
        GeneratorError::VerificationFailed {
            invariant,
            detail: detail.into(),
        }
    }
}
