use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::mpoly::MPoly;
use super::{upoly, zmod, Backend, Elem, Ring};
use crate::error::{Error, Result};

/// A finitely generated ideal of a [`Ring`].
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Elem>,
    members: Arc<OnceLock<std::result::Result<Arc<Vec<Elem>>, Error>>>,
    basis: Arc<OnceLock<Vec<MPoly>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} of {}", self, self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .filter(|g| !self.ring.is_zero(g))
            .map(|g| self.ring.format(g))
            .collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(","))
        }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Elem>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators,
            members: Arc::new(OnceLock::new()),
            basis: Arc::new(OnceLock::new()),
        }
    }

    /// The ideal generated by the entries of `row`.
    pub fn of_row(ring: &Ring, row: &[Elem]) -> Ideal {
        Ideal::new(ring, row.to_vec())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Membership test: gcds over `Z` and `Z/n`, Gröbner normal forms over
    /// polynomial quotients, closure over other finite rings.
    pub fn contains(&self, x: &Elem) -> Result<bool> {
        let ring = &self.ring;
        match ring.backend() {
            Backend::Integers => {
                let g = self.generators.iter().fold(BigInt::zero(), |acc, y| acc.gcd(y.as_int()));
                let v = x.as_int();
                Ok(if g.is_zero() { v.is_zero() } else { (v % &g).is_zero() })
            }
            Backend::Mod(n) => {
                let g = self.generators.iter().fold(*n, |acc, y| zmod::gcd(acc, y.as_res()));
                Ok(x.as_res().is_multiple_of(g))
            }
            Backend::PolyQ(q) => {
                let basis = self.basis.get_or_init(|| {
                    let extra: Vec<MPoly> = self.generators.iter().map(|g| g.as_poly().clone()).collect();
                    q.extended_basis(&extra)
                });
                Ok(q.ctx.reduce(x.as_poly(), basis).is_zero())
            }
            Backend::PolyExt { base, .. } if base.is_prime_field() => {
                upoly::field_ideal_contains(base, &self.generators, x)
            }
            _ => Ok(self.members()?.binary_search(x).is_ok()),
        }
    }

    /// Sorted list of members; finite rings only.
    pub fn members(&self) -> Result<Arc<Vec<Elem>>> {
        self.members
            .get_or_init(|| {
                let ring = &self.ring;
                let els = ring.elements()?;
                let mut set: BTreeSet<Elem> = BTreeSet::from([ring.zero()]);
                for g in &self.generators {
                    let multiples: HashSet<Elem> = els.iter().map(|r| ring.mul(r, g)).collect();
                    let mut next = BTreeSet::new();
                    for s in &set {
                        for m in &multiples {
                            next.insert(ring.add(s, m));
                        }
                    }
                    set = next;
                }
                Ok(Arc::new(set.into_iter().collect()))
            })
            .clone()
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        self.contains(&self.ring.one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(|g| self.ring.is_zero(g))
    }

    /// Whether both ideals have the same members.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_in_zmod() {
        let r = Ring::zmod(12).unwrap();
        let i = Ideal::new(&r, vec![r.from_i64(8)]);
        assert!(i.contains(&r.from_i64(4)).unwrap());
        assert!(!i.contains(&r.from_i64(2)).unwrap());
        assert_eq!(i.members().unwrap().len(), 3);
        assert_eq!(i.to_string(), "(8)");
        assert_eq!(Ideal::new(&r, vec![]).to_string(), "(0)");
    }

    #[test]
    fn membership_over_integers() {
        let z = Ring::integers();
        let i = Ideal::new(&z, vec![z.from_i64(6), z.from_i64(10)]);
        assert!(i.contains(&z.from_i64(-4)).unwrap());
        assert!(!i.contains(&z.from_i64(3)).unwrap());
        assert!(i.members().is_err());
    }

    #[test]
    fn membership_in_polynomial_quotient() {
        let r = Ring::parse_descriptor(r#"{"kind":"PolyQuotient","p":2,"vars":["x","y"],"relations":["x^2","y^2"]}"#)
            .unwrap();
        let i = Ideal::new(&r, vec![r.parse("x").unwrap()]);
        assert!(i.contains(&r.parse("x*y+x").unwrap()).unwrap());
        assert!(!i.contains(&r.parse("y").unwrap()).unwrap());
        let via_closure = i.members().unwrap();
        for m in r.elements().unwrap() {
            assert_eq!(i.contains(m).unwrap(), via_closure.binary_search(m).is_ok());
        }
    }

    #[test]
    fn same_members_different_generators() {
        let r = Ring::zmod(12).unwrap();
        let a = Ideal::new(&r, vec![r.from_i64(8)]);
        let b = Ideal::new(&r, vec![r.from_i64(4)]);
        assert!(a.same_as(&b).unwrap());
    }
}
