//! Prime-cycle acceptor families.
//!
//! One cyclic acceptor per odd prime `ρ`: states `0..ρ`, initial `0`,
//! accepting exactly state `ρ - 1`. Joint acceptance forces the word
//! length to be congruent to `ρ - 1` modulo every `ρ`, so by remainder
//! arithmetic the smallest jointly accepted length is the product of the
//! primes minus one. Feeding the family to the strip builders yields
//! instances whose gathering sequences are provably long relative to
//! their size.

use crate::automata::{tally_cycle, tally_intersection_smallest, TallyAutomaton};

use super::GeneratorError;

/// Scan bound under which the joint first-acceptance is re-verified by
/// exhaustive search rather than modular arithmetic alone.
const SCAN_VERIFY_CAP: u64 = 100_000;

fn is_odd_prime_at_least_3(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Builds one cycle acceptor per prime (initial state `0`, accepting
/// state `ρ - 1`). The returned family jointly accepts its first unary
/// word at length `∏ρ − 1`; this is re-verified by scan for small
/// products and by modular arithmetic otherwise.
///
/// # Errors
///
/// [`GeneratorError::NotOddPrime`] if an entry is not an odd prime at
/// least 3; [`GeneratorError::InvalidTallyShape`] for an empty or
/// repeating list.
pub fn gen_prime_tally(primes: &[u64]) -> Result<Vec<TallyAutomaton>, GeneratorError> {
    if primes.is_empty() {
        return Err(GeneratorError::InvalidTallyShape(
            "at least one prime is required".into(),
        ));
    }
    let mut seen = std::collections::HashSet::new();
    for &p in primes {
        if !is_odd_prime_at_least_3(p) {
            return Err(GeneratorError::NotOddPrime(p));
        }
        if !seen.insert(p) {
            return Err(GeneratorError::InvalidTallyShape(format!(
                "prime {p} is repeated"
            )));
        }
    }
    let family: Vec<TallyAutomaton> = primes
        .iter()
        .map(|&p| {
            tally_cycle(p as usize, &[p as usize - 1], 0)
                .expect("odd prime cycles with one rejecting start are well-formed")
        })
        .collect::<Vec<_>>();

    let product: u64 = primes.iter().product();
    if product <= SCAN_VERIFY_CAP {
        let got = tally_intersection_smallest(&family, product);
        if got != Some(product - 1) {
            return Err(GeneratorError::verify(
                "prime-first-acceptance",
                format!("scan found {got:?}, expected {}", product - 1),
            ));
        }
    } else {
        for (a, &p) in family.iter().zip(primes) {
            if !a.accepts_length(product - 1) {
                return Err(GeneratorError::verify(
                    "prime-first-acceptance",
                    format!("cycle {p} rejects length {}", product - 1),
                ));
            }
        }
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_prime_first_accepts_at_two() {
        let family = gen_prime_tally(&[3]).unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(tally_intersection_smallest(&family, 1 << 20), Some(2));
    }

    #[test]
    fn pair_first_accepts_at_fourteen() {
        let family = gen_prime_tally(&[3, 5]).unwrap();
        assert_eq!(tally_intersection_smallest(&family, 1 << 20), Some(14));
    }

    #[test]
    fn triple_first_accepts_at_one_hundred_four() {
        let family = gen_prime_tally(&[3, 5, 7]).unwrap();
        assert_eq!(tally_intersection_smallest(&family, 1 << 20), Some(104));
    }

    #[test]
    fn family_shape_is_cyclic_with_one_accepting_state() {
        let family = gen_prime_tally(&[5, 7]).unwrap();
        assert_eq!(family[0].cycle_length(), 5);
        assert_eq!(family[0].initial_index(), 0);
        assert_eq!(family[0].accepting_indices(), &[4]);
        assert_eq!(family[1].cycle_length(), 7);
        assert_eq!(family[1].accepting_indices(), &[6]);
    }

    #[test]
    fn non_primes_are_rejected() {
        for bad in [0u64, 1, 2, 4, 9, 15, 21] {
            match gen_prime_tally(&[3, bad]) {
                Err(GeneratorError::NotOddPrime(p)) => assert_eq!(p, bad),
                other => panic!("expected NotOddPrime for {bad}, got {other:?}"),
            }
        }
    }

    #[test]
    fn repeats_and_empty_lists_are_rejected() {
        assert!(matches!(
            gen_prime_tally(&[3, 3]),
            Err(GeneratorError::InvalidTallyShape(_))
        ));
        assert!(matches!(
            gen_prime_tally(&[]),
            Err(GeneratorError::InvalidTallyShape(_))
        ));
    }
}
