//! Independent oracles used by the suites.
//!
//! These deliberately avoid the implementation paths they check: the
//! partition counter is a plain integer dynamic program over allowed part
//! sizes, with no series arithmetic involved.

/// Number of partitions of `0..=order` into parts `n >= 1` with
/// `n mod modulus` not in `excluded`.
pub fn partition_count_excluded(modulus: u32, excluded: &[u32], order: usize) -> Vec<u64> {
    let mut table = vec![0u64; order + 1];
    table[0] = 1;
    for part in 1..=order {
        let r = (part as u32) % modulus;
        if excluded.contains(&r) {
            continue;
        }
        for total in part..=order {
            table[total] += table[total - part];
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrestricted_partitions() {
        // no residue excluded mod 1 would exclude everything; use mod 5 with
        // nothing excluded to count all partitions
        let p = partition_count_excluded(5, &[], 10);
        assert_eq!(&p[..11], &[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn first_rr_pattern() {
        // parts = 1, 4 (mod 5)
        let p = partition_count_excluded(5, &[0, 2, 3], 8);
        assert_eq!(&p[..8], &[1, 1, 1, 1, 2, 2, 3, 3]);
    }
}
