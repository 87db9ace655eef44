//! Residue arithmetic helpers for `Z/n` and `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub fn mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn add(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

pub fn sub(a: u64, b: u64, n: u64) -> u64 {
    add(a, n - b % n, n)
}

pub fn neg(a: u64, n: u64) -> u64 {
    (n - a % n) % n
}

pub fn pow(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, n);
        }
        a = mul(a, a, n);
        e >>= 1;
    }
    acc
}

/// Extended gcd on signed integers: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn inv(a: u64, n: u64) -> Option<u64> {
    let (g, s, _) = egcd(a as i128, n as i128);
    (g == 1).then(|| s.rem_euclid(n as i128) as u64)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

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

/// Bézout coefficients for a list of residues together with the modulus:
/// returns `b` with `sum a_i b_i = gcd(a_1, .., a_k, n)` modulo `n` and that gcd.
///
/// At each step the multiplier of the running gcd is taken least nonnegative,
/// so `(2, 3)` over `Z/6` gives `(2, 5)`.
pub fn bezout_mod(row: &[u64], n: u64) -> (u64, Vec<u64>) {
    let mut g = n as i128;
    let mut coeffs = vec![0i128; row.len()];
    for (k, &a) in row.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let (h, s, _) = egcd(g, a as i128);
        let s = s.rem_euclid(a as i128 / h);
        let t = (h - g * s) / a as i128;
        for c in coeffs.iter_mut().take(k) {
            *c = (*c * s).rem_euclid(n as i128);
        }
        coeffs[k] = t.rem_euclid(n as i128);
        g = h;
    }
    (g as u64, coeffs.into_iter().map(|c| c as u64).collect())
}

/// Bézout coefficients over `Z`: `sum a_i b_i = gcd(a)` with the gcd nonnegative.
pub fn bezout_int(row: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs = vec![BigInt::zero(); row.len()];
    for (k, a) in row.iter().enumerate() {
        let e = g.extended_gcd(a);
        let (h, s, t) = if e.gcd.is_negative() { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
        for c in coeffs.iter_mut().take(k) {
            *c = &*c * &s;
        }
        coeffs[k] = t;
        g = h;
    }
    (g, coeffs)
}
