//! Small-prime arithmetic used for torsion bookkeeping.

use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All primes `p` with `2p <= bound`.
pub fn primes_at_most_half(bound: u64) -> Vec<u64> {
    (2..=bound / 2).filter(|&p| is_prime(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(1 << 20), vec![(2, 20)]);
    }

    #[test]
    fn half_bound_is_inclusive() {
        assert_eq!(primes_at_most_half(6), vec![2, 3]);
        assert_eq!(primes_at_most_half(3), vec![]);
        assert_eq!(primes_at_most_half(4), vec![2]);
        assert_eq!(primes_at_most_half(0), vec![]);
    }
}
