/// `Some((p, t))` when `n = p^t` for a prime `p` and `t >= 1`.
///
/// Trial division; the inputs here are generator indices.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > n {
        return Some((n, 1));
    }
    let (mut rest, mut t) = (n, 0);
    while rest % p == 0 {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(prime_power(0), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(31), Some((31, 1)));
        assert_eq!(prime_power(121), Some((11, 2)));
        assert_eq!(prime_power(1024), Some((2, 10)));
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        let primes: Vec<u64> = (2..200u64).filter(|&q| (2..q).all(|d| q % d != 0)).collect();
        for n in 0..200u64 {
            let expected = primes.iter().find_map(|&p| {
                let mut x = p;
                let mut t = 1;
                while x < n {
                    x *= p;
                    t += 1;
                }
                (x == n).then_some((p, t))
            });
            assert_eq!(prime_power(n), expected, "n = {n}");
        }
    }
}
