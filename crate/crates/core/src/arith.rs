//! Small integer helpers: gcd/lcm, primality, unit groups and modular powers.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_power_of(mut n: u128, p: u64) -> bool {
    let p = p as u128;
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Residues in `1..n` coprime to `n`; `[1]` when `n == 1`.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo the prime `p`.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

/// Least primitive root modulo the prime `p`.
pub fn least_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Multiplicative order of `k` modulo `n` (requires gcd(k, n) = 1).
pub fn multiplicative_order(k: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut acc = k % n;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * k % n;
        ord += 1;
    }
    ord
}

/// Integer square root (floor).
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_and_units_agree() {
        for n in 1..200 {
            assert_eq!(euler_phi(n), units(n).len() as u64, "n = {n}");
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(least_primitive_root(7), 3);
        assert_eq!(least_primitive_root(19), 2);
        assert_eq!(least_primitive_root(43), 3);
        for p in [13u64, 37, 109, 163] {
            let g = least_primitive_root(p);
            assert_eq!(multiplicative_order(g, p), p - 1);
        }
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(15309, 3), 2187);
        assert_eq!(p_part(15309, 7), 7);
        assert_eq!(p_part(21, 5), 1);
        assert!(is_power_of(81, 3));
        assert!(is_power_of(1, 3));
        assert!(!is_power_of(21, 3));
    }

    #[test]
    fn square_roots() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(2187), 46);
    }
}
