//! Partition counting. `partition_count` is the generating-function count
//! used by the library; `enumerate_partitions` lists partitions explicitly
//! and serves as the brute-force cross-check.

/// Number of partitions of `n` into parts `>= min_part`.
pub fn partition_count(n: u32, min_part: u32) -> u64 {
    let n = n as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in (min_part.max(1) as usize)..=n {
        for total in part..=n {
            ways[total] = ways[total].saturating_add(ways[total - part]);
        }
    }
    ways[n]
}

/// All partitions of `n` into parts `>= min_part`, each listed with parts
/// in non-increasing order.
pub fn enumerate_partitions(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (min..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let p: Vec<u64> = (0..=10).map(|n| partition_count(n, 1)).collect();
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partition_count(6, 2), 4);
        assert_eq!(partition_count(5, 3), 1);
        assert_eq!(partition_count(2, 3), 0);
        assert_eq!(enumerate_partitions(6, 2), vec![vec![6], vec![4, 2], vec![3, 3], vec![2, 2, 2]]);
    }

    #[test]
    fn count_matches_enumeration() {
        for min in 1..=3 {
            for n in 0..=20 {
                assert_eq!(partition_count(n, min), enumerate_partitions(n, min).len() as u64);
            }
        }
    }
}
