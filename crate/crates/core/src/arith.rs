//! Small integer helpers shared by the group code.

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `None` on overflow.
pub fn checked_lcm(a: u128, b: u128) -> Option<u128> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Prime factorization as `(prime, exponent)` pairs with ascending primes.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u128) -> Vec<u128> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u128) -> u128 {
    let mut part = 1;
    if n == 0 {
        return 0;
    }
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_prime(n: u128) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn divides(d: u128, n: u128) -> bool {
    d != 0 && n % d == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_of_alt10_order() {
        assert_eq!(factorize(1_814_400), vec![(2, 7), (3, 4), (5, 2), (7, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn lcm_and_parts() {
        assert_eq!(checked_lcm(8, 12), Some(24));
        assert_eq!(checked_lcm(u128::MAX, 2), None);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_prime(7));
        assert!(!is_prime(1));
        assert!(!is_prime(12));
    }
}
