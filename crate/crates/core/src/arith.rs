//! Small integer helpers: primality, factorisation and prime parts.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Ascending list of the primes dividing `n`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Highest power of `p` dividing `n` (written `n_p`).
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    if n == 0 || p < 2 {
        return out;
    }
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// The part of `n` made of the primes in `pi`.
pub fn pi_part(n: u64, pi: &[u64]) -> u64 {
    pi.iter().map(|&p| p_part(n, p)).product()
}

pub fn is_square_free(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// `n > 1` and `n` is a power of a single prime. Returns that prime.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Orders 1 and `p^k` both count as prime power orders.
pub fn is_prime_power(n: u64) -> bool {
    n == 1 || prime_power_base(n).is_some()
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

pub(crate) fn require_prime(p: u64) -> crate::Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(crate::GroupError::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free() {
        assert!(!is_square_free(12));
        assert!(is_square_free(30));
        assert!(is_square_free(1));
    }

    #[test]
    fn parts() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(15, 7), 1);
        assert_eq!(pi_part(60, &[2, 5]), 20);
        assert_eq!(factorize(300), vec![(2, 2), (3, 1), (5, 2)]);
    }

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(1));
        assert!(is_prime_power(8));
        assert!(!is_prime_power(12));
        assert!(!is_prime_power(6));
        assert_eq!(prime_power_base(49), Some(7));
    }
}
