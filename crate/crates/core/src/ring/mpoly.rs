//! Multivariate polynomials over a prime field, degrevlex Gröbner bases with
//! optional cofactor tracking, and the `PolyQuotient` backend built on them.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};

use super::zmod;

/// Exponent vector of a monomial.
pub type Mono = Vec<u32>;

/// A polynomial over `F_p`. Terms are sorted descending in degrevlex order and
/// carry coefficients in `1..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    terms: Vec<(Mono, u64)>,
}

pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for k in (0..a.len()).rev() {
        if a[k] != b[k] {
            return b[k].cmp(&a[k]);
        }
    }
    Ordering::Equal
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Arithmetic context: characteristic and number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyCtx {
    pub p: u64,
    pub nvars: usize,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Mono, u64)] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&(Mono, u64)> {
        self.terms.first()
    }

    /// The constant value when the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.iter().all(|&e| e == 0) => Some(*c),
            _ => None,
        }
    }

    fn from_map(map: HashMap<Mono, u64>) -> Self {
        let mut terms: Vec<(Mono, u64)> = map.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| degrevlex(&b.0, &a.0));
        MPoly { terms }
    }
}

impl PolyCtx {
    pub fn constant(&self, c: u64) -> MPoly {
        let c = c % self.p;
        if c == 0 {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(vec![0; self.nvars], c)] }
        }
    }

    pub fn var(&self, k: usize) -> MPoly {
        let mut m = vec![0; self.nvars];
        m[k] = 1;
        MPoly { terms: vec![(m, 1)] }
    }

    pub fn monomial(&self, m: Mono, c: u64) -> MPoly {
        let c = c % self.p;
        if c == 0 {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    pub fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        self.combine(a, b, 1)
    }

    pub fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        self.combine(a, b, self.p - 1)
    }

    /// `a + s*b` by merging the sorted term lists.
    fn combine(&self, a: &MPoly, b: &MPoly, s: u64) -> MPoly {
        let p = self.p;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match degrevlex(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = zmod::mul(b.terms[j].1, s, p);
                    out.push((b.terms[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = (a.terms[i].1 + zmod::mul(b.terms[j].1, s, p)) % p;
                    if c != 0 {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        for t in &b.terms[j..] {
            out.push((t.0.clone(), zmod::mul(t.1, s, p)));
        }
        MPoly { terms: out }
    }

    pub fn neg(&self, a: &MPoly) -> MPoly {
        self.scale(a, self.p - 1)
    }

    pub fn scale(&self, a: &MPoly, c: u64) -> MPoly {
        let c = c % self.p;
        if c == 0 {
            return MPoly::zero();
        }
        MPoly {
            terms: a.terms.iter().map(|(m, x)| (m.clone(), zmod::mul(*x, c, self.p))).collect(),
        }
    }

    /// `c * m * a`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, a: &MPoly, m: &[u32], c: u64) -> MPoly {
        let c = c % self.p;
        if c == 0 {
            return MPoly::zero();
        }
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(t, x)| (mono_mul(t, m), zmod::mul(*x, c, self.p)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut acc: HashMap<Mono, u64> = HashMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e = acc.entry(mono_mul(ma, mb)).or_insert(0);
                *e = (*e + zmod::mul(*ca, *cb, self.p)) % self.p;
            }
        }
        MPoly::from_map(acc)
    }

    /// Full reduction of `h` modulo `basis`; returns the remainder.
    pub fn reduce(&self, h: &MPoly, basis: &[MPoly]) -> MPoly {
        let p = self.p;
        let mut rest = h.clone();
        let mut remainder: Vec<(Mono, u64)> = Vec::new();
        while let Some((lm, lc)) = rest.terms.first().cloned() {
            match basis.iter().find(|g| g.lead().is_some_and(|(gm, _)| divides(gm, &lm))) {
                Some(g) => {
                    let (gm, gc) = g.lead().unwrap();
                    let c = zmod::mul(lc, zmod::inv(*gc, p).unwrap(), p);
                    rest = self.sub(&rest, &self.mul_term(g, &mono_div(&lm, gm), c));
                }
                None => {
                    remainder.push((lm, lc));
                    rest.terms.remove(0);
                }
            }
        }
        MPoly { terms: remainder }
    }

    fn reduce_tracked(&self, h: Tracked, basis: &[Tracked], cof_nf: Option<&[MPoly]>) -> Tracked {
        let p = self.p;
        let mut rest = h.poly;
        let mut cof = h.cof;
        let mut remainder: Vec<(Mono, u64)> = Vec::new();
        while let Some((lm, lc)) = rest.terms.first().cloned() {
            let divisor = basis
                .iter()
                .find(|g| g.poly.lead().is_some_and(|(gm, _)| divides(gm, &lm)));
            match divisor {
                Some(g) => {
                    let (gm, gc) = g.poly.lead().unwrap();
                    let q = mono_div(&lm, gm);
                    let c = zmod::mul(lc, zmod::inv(*gc, p).unwrap(), p);
                    rest = self.sub(&rest, &self.mul_term(&g.poly, &q, c));
                    if !cof.is_empty() {
                        for (ck, gk) in cof.iter_mut().zip(&g.cof) {
                            *ck = self.sub(ck, &self.mul_term(gk, &q, c));
                        }
                    }
                }
                None => {
                    remainder.push((lm, lc));
                    rest.terms.remove(0);
                }
            }
        }
        if let Some(nf_basis) = cof_nf {
            for ck in cof.iter_mut() {
                *ck = self.reduce(ck, nf_basis);
            }
        }
        Tracked { poly: MPoly { terms: remainder }, cof }
    }

    /// Buchberger's algorithm over tracked generators. When `stop_at_unit` is
    /// set the computation returns as soon as a nonzero constant appears.
    fn buchberger(
        &self,
        gens: Vec<Tracked>,
        cof_nf: Option<&[MPoly]>,
        stop_at_unit: bool,
    ) -> Vec<Tracked> {
        let mut basis: Vec<Tracked> = Vec::new();
        for g in gens {
            let r = self.reduce_tracked(g, &basis, cof_nf);
            if !r.poly.is_zero() {
                let unit = r.poly.as_constant().is_some();
                basis.push(r);
                if unit && stop_at_unit {
                    return basis;
                }
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        while let Some((i, j)) = pairs.pop() {
            let (mi, ci) = basis[i].poly.lead().unwrap().clone();
            let (mj, cj) = basis[j].poly.lead().unwrap().clone();
            if mi.iter().zip(&mj).all(|(a, b)| *a == 0 || *b == 0) {
                continue;
            }
            let l = mono_lcm(&mi, &mj);
            let fi = zmod::inv(ci, self.p).unwrap();
            let fj = zmod::inv(cj, self.p).unwrap();
            let qi = mono_div(&l, &mi);
            let qj = mono_div(&l, &mj);
            let poly = self.sub(
                &self.mul_term(&basis[i].poly, &qi, fi),
                &self.mul_term(&basis[j].poly, &qj, fj),
            );
            let cof = basis[i]
                .cof
                .iter()
                .zip(&basis[j].cof)
                .map(|(a, b)| self.sub(&self.mul_term(a, &qi, fi), &self.mul_term(b, &qj, fj)))
                .collect();
            let r = self.reduce_tracked(Tracked { poly, cof }, &basis, cof_nf);
            if !r.poly.is_zero() {
                let unit = r.poly.as_constant().is_some();
                let k = basis.len();
                basis.push(r);
                if unit && stop_at_unit {
                    return basis;
                }
                for i in 0..k {
                    pairs.push((i, k));
                }
            }
        }
        basis
    }

    /// Reduced Gröbner basis of the ideal generated by `gens`.
    pub fn groebner(&self, gens: &[MPoly]) -> Vec<MPoly> {
        let tracked = gens.iter().map(|g| Tracked { poly: g.clone(), cof: Vec::new() }).collect();
        let basis: Vec<MPoly> =
            self.buchberger(tracked, None, false).into_iter().map(|t| t.poly).collect();
        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<MPoly>) -> Vec<MPoly> {
        // drop elements whose leading monomial is divisible by another one
        let mut minimal: Vec<MPoly> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let lm = &g.lead().unwrap().0;
            let redundant = basis.iter().enumerate().any(|(l, h)| {
                let hm = &h.lead().unwrap().0;
                l != k && divides(hm, lm) && (hm != lm || l < k)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<MPoly> =
                minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
            let r = self.reduce(&minimal[k], &others);
            let lc = r.lead().unwrap().1;
            reduced.push(self.scale(&r, zmod::inv(lc, self.p).unwrap()));
        }
        reduced.sort_by(|a, b| degrevlex(&a.lead().unwrap().0, &b.lead().unwrap().0));
        reduced
    }

    /// Looks for `b` with `sum a_t b_t = 1` modulo the ideal with Gröbner basis
    /// `relations`, tracking cofactors through Buchberger's algorithm.
    pub fn unit_combination(&self, row: &[MPoly], relations: &[MPoly]) -> Option<Vec<MPoly>> {
        let k = row.len();
        let mut gens: Vec<Tracked> = relations
            .iter()
            .map(|r| Tracked { poly: r.clone(), cof: vec![MPoly::zero(); k] })
            .collect();
        for (t, a) in row.iter().enumerate() {
            let mut cof = vec![MPoly::zero(); k];
            cof[t] = self.constant(1);
            gens.push(Tracked { poly: a.clone(), cof });
        }
        let basis = self.buchberger(gens, Some(relations), true);
        let unit = basis.iter().find(|g| g.poly.as_constant().is_some_and(|c| c != 0))?;
        let c = zmod::inv(unit.poly.as_constant().unwrap(), self.p).unwrap();
        Some(unit.cof.iter().map(|b| self.reduce(&self.scale(b, c), relations)).collect())
    }
}

#[derive(Clone, Debug)]
struct Tracked {
    poly: MPoly,
    cof: Vec<MPoly>,
}

/// `F_p[x_1..x_k] / (relations)` with elements in Gröbner normal form.
#[derive(Debug)]
pub struct PolyQuotient {
    pub ctx: PolyCtx,
    pub vars: Vec<String>,
    pub gb: Vec<MPoly>,
    standard: Option<Vec<Mono>>,
}

impl PolyQuotient {
    pub fn new(p: u64, vars: Vec<String>, relations: &[MPoly]) -> Result<Self> {
        let ctx = PolyCtx { p, nvars: vars.len() };
        let gb = ctx.groebner(relations);
        if gb.iter().any(|g| g.as_constant().is_some()) {
            return Err(Error::InvalidRing("relations generate the unit ideal".into()));
        }
        let standard = standard_monomials(&gb, vars.len());
        Ok(PolyQuotient { ctx, vars, gb, standard })
    }

    pub fn nf(&self, f: &MPoly) -> MPoly {
        self.ctx.reduce(f, &self.gb)
    }

    pub fn is_finite(&self) -> bool {
        self.standard.is_some()
    }

    pub fn standard_monomials(&self) -> Option<&[Mono]> {
        self.standard.as_deref()
    }

    /// All elements, sorted, when the quotient is finite and small enough.
    pub fn enumerate(&self, cap: u64) -> Option<Vec<MPoly>> {
        let std = self.standard.as_ref()?;
        let count = (self.ctx.p as u128).checked_pow(std.len() as u32)?;
        if count > cap as u128 {
            return None;
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0u64; std.len()];
        loop {
            let mut acc = HashMap::new();
            for (m, &c) in std.iter().zip(&digits) {
                if c != 0 {
                    acc.insert(m.clone(), c);
                }
            }
            out.push(MPoly::from_map(acc));
            let mut k = 0;
            loop {
                if k == digits.len() {
                    out.sort();
                    return Some(out);
                }
                digits[k] += 1;
                if digits[k] < self.ctx.p {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    pub fn inverse(&self, a: &MPoly) -> Option<MPoly> {
        self.ctx.unit_combination(std::slice::from_ref(a), &self.gb).map(|mut v| v.remove(0))
    }

    /// Gröbner basis of `relations + extra`.
    pub fn extended_basis(&self, extra: &[MPoly]) -> Vec<MPoly> {
        let mut gens = self.gb.clone();
        gens.extend(extra.iter().cloned());
        self.ctx.groebner(&gens)
    }

    pub fn format(&self, f: &MPoly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in &f.terms {
            let mut factors = Vec::new();
            for (k, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[k].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[k], e)),
                }
            }
            if factors.is_empty() {
                parts.push(c.to_string());
            } else if *c == 1 {
                parts.push(factors.join("*"));
            } else {
                parts.push(format!("{}*{}", c, factors.join("*")));
            }
        }
        parts.join("+")
    }
}

fn standard_monomials(gb: &[MPoly], nvars: usize) -> Option<Vec<Mono>> {
    let mut bounds = vec![None; nvars];
    for g in gb {
        let m = &g.lead().unwrap().0;
        let nonzero: Vec<usize> = (0..nvars).filter(|&k| m[k] > 0).collect();
        if let [k] = nonzero.as_slice() {
            let b: &mut Option<u32> = &mut bounds[*k];
            *b = Some(b.map_or(m[*k], |x: u32| x.min(m[*k])));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut m = vec![0u32; nvars];
    loop {
        if !gb.iter().any(|g| divides(&g.lead().unwrap().0, &m)) {
            out.push(m.clone());
        }
        let mut k = 0;
        loop {
            if k == nvars {
                out.sort_by(|a, b| degrevlex(b, a));
                return Some(out);
            }
            m[k] += 1;
            if m[k] < bounds[k] {
                break;
            }
            m[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PolyCtx {
        PolyCtx { p: 5, nvars: 2 }
    }

    fn xy(a: u32, b: u32, c: u64) -> MPoly {
        ctx().monomial(vec![a, b], c)
    }

    #[test]
    fn degrevlex_orders_by_degree_then_reverse_last_variable() {
        assert_eq!(degrevlex(&[2, 0], &[0, 1]), Ordering::Greater);
        // x*y > y^2 in degrevlex with x > y
        assert_eq!(degrevlex(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(degrevlex(&[2, 0], &[1, 1]), Ordering::Greater);
    }

    #[test]
    fn circle_is_infinite_and_point_is_finite() {
        let c = ctx();
        let circle = c.add(&c.add(&xy(2, 0, 1), &xy(0, 2, 1)), &c.constant(4));
        let q = PolyQuotient::new(5, vec!["x".into(), "y".into()], &[circle]).unwrap();
        assert!(!q.is_finite());
        let q = PolyQuotient::new(5, vec!["x".into(), "y".into()], &[xy(2, 0, 1), xy(1, 1, 1), xy(0, 2, 1)])
            .unwrap();
        assert_eq!(q.standard_monomials().unwrap().len(), 3);
        assert_eq!(q.enumerate(1000).unwrap().len(), 125);
    }

    #[test]
    fn unit_combination_of_coprime_pair() {
        let c = ctx();
        let x = c.var(0);
        let y = c.var(1);
        let rel = c.sub(&c.add(&c.mul(&x, &x), &c.mul(&y, &y)), &c.constant(1));
        let q = PolyQuotient::new(5, vec!["x".into(), "y".into()], &[rel]).unwrap();
        let row = vec![x.clone(), y.clone()];
        let w = c.unit_combination(&row, &q.gb).unwrap();
        let s = c.add(&c.mul(&row[0], &w[0]), &c.mul(&row[1], &w[1]));
        assert_eq!(q.nf(&s), c.constant(1));
        assert!(c.unit_combination(&[x.clone(), c.mul(&x, &y)], &q.gb).is_none());
    }

    #[test]
    fn reduced_basis_is_normalised() {
        let c = ctx();
        let gb = c.groebner(&[xy(2, 0, 3), c.add(&xy(2, 0, 1), &xy(0, 1, 1))]);
        assert_eq!(gb, vec![xy(0, 1, 1), xy(2, 0, 1)]);
    }
}
