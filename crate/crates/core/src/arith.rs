//! Small integer arithmetic: primality, factoring, modular powers.

use alloc::vec::Vec;

/// a*b mod m without overflow for any u64 inputs.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    a %= m;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.checked_mul(p).is_some_and(|pp| pp <= n) {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// 2-adic valuation of n > 0.
pub fn v2(n: u64) -> u32 {
    debug_assert!(n > 0);
    n.trailing_zeros()
}

/// Euler's totient via trial-division factoring.
pub fn euler_phi(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_against_sieve() {
        let mut sieve = [true; 2000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..2000usize {
            if sieve[i] {
                for j in (i * i..2000).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for n in 0..2000u64 {
            assert_eq!(is_prime(n), sieve[n as usize], "n = {n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_647u64 * 2_147_483_647));
    }

    #[test]
    fn factor_reassembles() {
        for n in 1..3000u64 {
            let f = factor(n);
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            for &(p, _) in &f {
                assert!(is_prime(p));
            }
        }
        assert_eq!(factor(1), Vec::new());
        assert_eq!(factor(2 * 2 * 3 * 2027), [(2, 2), (3, 1), (2027, 1)]);
    }

    #[test]
    fn powmod_matches_naive() {
        for (a, e, m) in [(3u64, 20u64, 1009u64), (7, 0, 13), (0, 5, 7), (12, 11, 13)] {
            let mut naive = 1u64 % m;
            for _ in 0..e {
                naive = naive * a % m;
            }
            assert_eq!(powmod(a, e, m), naive);
        }
    }

    #[test]
    fn phi_small() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(25), 20);
        assert_eq!(euler_phi(4 * 5 * 13), 96);
        let naive = |n: u64| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64;
        for n in 1..200 {
            assert_eq!(euler_phi(n), naive(n), "n = {n}");
        }
    }

    #[test]
    fn v2_values() {
        assert_eq!(v2(12), 2);
        assert_eq!(v2(16), 4);
        assert_eq!(v2(5 - 1), 2);
        assert_eq!(v2(97 - 1), 5);
    }
}
