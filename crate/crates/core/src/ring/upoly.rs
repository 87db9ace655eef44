//! Univariate polynomials over a base ring, plus dense `F_p[X]` helpers.

use super::{zmod, Elem, Ring};
use crate::error::{Error, Result};

pub(crate) fn trim(base: &Ring, mut coeffs: Vec<Elem>) -> Elem {
    while coeffs.last().is_some_and(|c| base.is_zero(c)) {
        coeffs.pop();
    }
    Elem::UPoly(coeffs)
}

pub(crate) fn add(base: &Ring, a: &[Elem], b: &[Elem]) -> Elem {
    let n = a.len().max(b.len());
    let zero = base.zero();
    let out = (0..n).map(|k| base.add(a.get(k).unwrap_or(&zero), b.get(k).unwrap_or(&zero))).collect();
    trim(base, out)
}

pub(crate) fn mul(base: &Ring, a: &[Elem], b: &[Elem]) -> Elem {
    if a.is_empty() || b.is_empty() {
        return Elem::UPoly(Vec::new());
    }
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = base.add(&out[i + j], &base.mul(x, y));
        }
    }
    trim(base, out)
}

/// A polynomial is a unit iff its constant term is a unit and every other
/// coefficient is nilpotent. The inverse is a finite geometric series.
pub(crate) fn inverse(ring: &Ring, base: &Ring, a: &[Elem]) -> Option<Elem> {
    let c0 = a.first()?;
    let c0_inv = base.inverse(c0)?;
    if !a[1..].iter().all(|c| base.is_nilpotent(c)) {
        return None;
    }
    let c0_inv_poly = trim(base, vec![c0_inv]);
    let unit = ring.mul(&c0_inv_poly, &Elem::UPoly(a.to_vec()));
    let m = ring.sub(&unit, &ring.one());
    let neg_m = ring.neg(&m);
    let mut sum = ring.one();
    let mut term = ring.one();
    loop {
        term = ring.mul(&term, &neg_m);
        if ring.is_zero(&term) {
            break;
        }
        sum = ring.add(&sum, &term);
    }
    Some(ring.mul(&sum, &c0_inv_poly))
}

/// Division with remainder by a polynomial whose leading coefficient is a unit.
pub(crate) fn divrem(base: &Ring, a: &[Elem], b: &[Elem]) -> Option<(Elem, Elem)> {
    let lead_inv = base.inverse(b.last()?)?;
    let mut r = a.to_vec();
    let mut q = vec![base.zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = base.mul(r.last().unwrap(), &lead_inv);
        for (k, y) in b.iter().enumerate() {
            r[shift + k] = base.sub(&r[shift + k], &base.mul(&c, y));
        }
        q[shift] = c;
        r = trim(base, r).as_upoly().to_vec();
    }
    Some((trim(base, q), Elem::UPoly(r)))
}

fn needs_parens(s: &str) -> bool {
    s.starts_with('-') || s.starts_with('(') || s.contains(['+', '*', '^', '-'])
}

pub(crate) fn format(base: &Ring, var: &str, coeffs: &[Elem]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if base.is_zero(c) {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let cs = base.format(c);
        let cs = if needs_parens(&cs) { format!("({cs})") } else { cs };
        parts.push(if k == 0 {
            cs
        } else if base.is_one(c) {
            mono
        } else {
            format!("{cs}*{mono}")
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

// ---- dense polynomials over F_p, coefficients ascending -------------------

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim((0..n).map(|k| zmod::sub(*a.get(k).unwrap_or(&0), *b.get(k).unwrap_or(&0), p)).collect())
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = zmod::add(out[i + j], zmod::mul(*x, *y, p), p);
        }
    }
    fp_trim(out)
}

fn fp_scale(a: &[u64], c: u64, p: u64) -> Fp {
    fp_trim(a.iter().map(|x| zmod::mul(*x, c, p)).collect())
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let lead_inv = zmod::inv(*b.last().expect("division by zero polynomial"), p).unwrap();
    let mut r = a.to_vec();
    let mut q = vec![0; a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = zmod::mul(*r.last().unwrap(), lead_inv, p);
        q[shift] = c;
        for (k, y) in b.iter().enumerate() {
            r[shift + k] = zmod::sub(r[shift + k], zmod::mul(c, *y, p), p);
        }
        r = fp_trim(r);
    }
    (fp_trim(q), r)
}

/// `(g, s, t)` with `g = s a + t b` a gcd of `a` and `b`.
fn fp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// Bezout coefficients for a row over `F_p[X]`: `(g, b)` with `sum a_i b_i = g`.
fn fp_row_gcd(row: &[Fp], p: u64) -> (Fp, Vec<Fp>) {
    let mut g = Vec::new();
    let mut coeffs: Vec<Fp> = Vec::with_capacity(row.len());
    for a in row {
        let (h, s, t) = fp_xgcd(&g, a, p);
        for c in coeffs.iter_mut() {
            *c = fp_mul(c, &s, p);
        }
        coeffs.push(t);
        g = h;
    }
    (g, coeffs)
}

fn residues(a: &Elem, p: u64) -> Fp {
    fp_trim(a.as_upoly().iter().map(|c| c.as_res() % p).collect())
}

/// Bezout solve over `Z/n[X]`: solve over each `F_p[X]` with `p | n`, glue by
/// the Chinese remainder theorem modulo `rad(n)`, then divide by the resulting
/// sum, which is `1` plus a nilpotent and hence a unit.
pub(crate) fn solve_unimodular(ring: &Ring, base: &Ring, row: &[Elem]) -> Result<Option<Vec<Elem>>> {
    for (k, a) in row.iter().enumerate() {
        if let Some(inv) = ring.inverse(a) {
            let mut b = vec![ring.zero(); row.len()];
            b[k] = inv;
            return Ok(Some(b));
        }
    }
    let Some(n) = base.modulus() else {
        return Err(Error::UnsupportedBase(format!(
            "exact unimodularity over {ring}; use a bounded search instead"
        )));
    };
    let primes = zmod::prime_factors(n);
    let mut rad = 1u64;
    let mut glued: Vec<Vec<u64>> = vec![Vec::new(); row.len()];
    for &p in &primes {
        let reduced: Vec<Fp> = row.iter().map(|a| residues(a, p)).collect();
        let (g, coeffs) = fp_row_gcd(&reduced, p);
        if g.len() != 1 {
            return Ok(None);
        }
        let g_inv = zmod::inv(g[0], p).unwrap();
        for (t, c) in coeffs.iter().enumerate() {
            let c = fp_scale(c, g_inv, p);
            let len = glued[t].len().max(c.len());
            glued[t].resize(len, 0);
            for (k, slot) in glued[t].iter_mut().enumerate() {
                *slot = crt(*slot, rad, *c.get(k).unwrap_or(&0), p);
            }
        }
        rad *= p;
    }
    let b: Vec<Elem> = glued
        .into_iter()
        .map(|cs| trim(base, cs.into_iter().map(|c| base.elem_of_u64(c)).collect()))
        .collect();
    let s = ring.dot(row, &b);
    let s_inv = ring.inverse(&s).expect("sum is congruent to 1 modulo the nilradical");
    Ok(Some(b.iter().map(|x| ring.mul(x, &s_inv)).collect()))
}

/// The residue modulo `m1 * m2` congruent to `x1` mod `m1` and `x2` mod `m2`.
fn crt(x1: u64, m1: u64, x2: u64, m2: u64) -> u64 {
    let m = m1 * m2;
    let inv = zmod::inv(m1 % m2, m2).unwrap_or(0);
    let k = zmod::mul(zmod::sub(x2 % m2, x1 % m2, m2), inv, m2);
    (x1 + zmod::mul(k, m1, m)) % m
}

/// Ideal membership over `F_p[X]`: divisibility by the gcd of the generators.
pub(crate) fn field_ideal_contains(base: &Ring, gens: &[Elem], x: &Elem) -> Result<bool> {
    let p = base.modulus().expect("prime field base");
    let reduced: Vec<Fp> = gens.iter().map(|g| residues(g, p)).collect();
    let (g, _) = fp_row_gcd(&reduced, p);
    let xs = residues(x, p);
    if g.is_empty() {
        return Ok(xs.is_empty());
    }
    Ok(fp_divrem(&xs, &g, p).1.is_empty())
}
