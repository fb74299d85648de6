//! Parallel driver shared by the subset-enumeration invariants: maps every
//! mask below 2^n to an optional slot index and counts hits per slot.
//!
//! The mask space is split into fixed chunks; each chunk accumulates a
//! local count vector and vectors merge by elementwise addition, which is
//! commutative and associative, so the totals are identical for every
//! thread count. Counts cannot overflow: there are at most 2^63 masks.

use rayon::prelude::*;

pub(crate) fn subset_counts<F>(n: usize, slots: usize, f: F) -> Vec<u64>
where
    F: Fn(u64) -> Option<usize> + Sync,
{
    debug_assert!(n < 64);
    let total = 1u64 << n;
    let chunk = 1u64 << 16;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * chunk;
            let end = total.min(start + chunk);
            let mut counts = vec![0u64; slots];
            for mask in start..end {
                if let Some(slot) = f(mask) {
                    counts[slot] += 1;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; slots],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_every_mask_once() {
        let counts = subset_counts(18, 19, |m| Some(m.count_ones() as usize));
        for (k, &c) in counts.iter().enumerate() {
            let mut binom = 1u64;
            for i in 0..k {
                binom = binom * (18 - i as u64) / (i as u64 + 1);
            }
            assert_eq!(c, binom);
        }
        assert_eq!(counts.iter().sum::<u64>(), 1 << 18);
    }

    #[test]
    fn skipped_masks_are_not_counted() {
        let counts = subset_counts(10, 1, |m| (m % 2 == 0).then_some(0));
        assert_eq!(counts, vec![512]);
    }

    #[test]
    fn zero_bit_space_has_one_mask() {
        assert_eq!(subset_counts(0, 2, |_| Some(1)), vec![0, 1]);
    }
}
