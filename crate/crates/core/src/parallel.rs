//! Order-preserving batch evaluation, sequential or data-parallel.
//!
//! The crate's batch workloads (verifying many instances, scanning many
//! start configurations) are embarrassingly parallel maps over independent
//! inputs. With the `parallel` feature (on by default) they fan out over a
//! rayon thread pool; without it the same API runs sequentially. Results
//! come back in input order either way, so feature choice never changes
//! observable output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every input, returning outputs in input order.
#[cfg(feature = "parallel")]
pub fn map_batch<I, O, F>(inputs: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    inputs.par_iter().map(f).collect()
}

/// Applies `f` to every input, returning outputs in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_batch<I, O, F>(inputs: &[I], f: F) -> Vec<O>
where
    F: Fn(&I) -> O,
{
    inputs.iter().map(f).collect()
}

/// True when this build fans batches out over a thread pool.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order() {
        let inputs: Vec<u64> = (0..1000).collect();
        let outputs = map_batch(&inputs, |&x| x * x);
        assert_eq!(outputs, inputs.iter().map(|&x| x * x).collect::<Vec<_>>());
    }
}
