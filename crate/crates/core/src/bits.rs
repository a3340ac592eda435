//! Minimal bitset helpers over `u64` word slices.
//!
//! Configurations indexed by pixel number are stored as packed bit vectors
//! during stepping and search; keeping the representation a plain
//! `Box<[u64]>` lets the oracle use the buffers directly as hash keys.

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn new_box(n: usize) -> Box<[u64]> {
    vec![0u64; words_for(n)].into_boxed_slice()
}

#[inline]
pub(crate) fn get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1u64 << (i % 64);
}

pub(crate) fn clear_all(bits: &mut [u64]) {
    bits.fill(0);
}

pub(crate) fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

/// True when every bit of `sub` is also set in `sup`.
pub(crate) fn is_superset(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(&a, &b)| b & !a == 0)
}

/// Indices of set bits, ascending.
pub(crate) fn iter_ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count_iter() {
        let mut b = new_box(130);
        assert_eq!(b.len(), 3);
        for i in [0, 63, 64, 129] {
            set(&mut b, i);
        }
        assert!(get(&b, 63) && get(&b, 64));
        assert!(!get(&b, 1));
        assert_eq!(count(&b), 4);
        assert_eq!(iter_ones(&b).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        clear_all(&mut b);
        assert_eq!(count(&b), 0);
    }

    #[test]
    fn superset_comparison() {
        let mut a = new_box(70);
        let mut b = new_box(70);
        set(&mut a, 3);
        set(&mut a, 66);
        set(&mut b, 66);
        assert!(is_superset(&a, &b));
        assert!(!is_superset(&b, &a));
        assert!(is_superset(&a, &a));
    }
}
