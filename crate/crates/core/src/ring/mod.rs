//! Computable commutative rings with canonical forms.
//!
//! A [`Ring`] is built from a [`RingDescriptor`] and operates on [`Elem`]
//! payloads. Every payload produced by ring arithmetic is in canonical form,
//! so equality of elements is plain structural equality and rows of elements
//! can be hashed directly during orbit searches.
//!
//! The raw `Elem` API does not record which ring an element came from; mixing
//! payloads of different rings is a logic error. [`RingElement`] is the
//! checked wrapper that reports [`Error::MixedRings`](crate::Error::MixedRings).

pub mod descriptor;
mod element;
mod excision;
pub mod expr;
mod ideal;
pub mod mpoly;
mod upoly;
pub mod zmod;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub use descriptor::RingDescriptor;
pub use element::{ring_arith, ArithOp, RingElement};
pub use excision::{lift_row, ExcisionMap};
pub use expr::Expr;
pub use ideal::Ideal;

use mpoly::{MPoly, PolyCtx, PolyQuotient};

/// Largest ring that will be enumerated element by element.
pub const ENUMERATION_CAP: u64 = 1 << 22;

/// Canonical element payload. The variant in use is fixed by the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    /// An integer (ring `Z`).
    Int(BigInt),
    /// A least nonnegative residue (`Z/n`, `F_p`).
    Res(u64),
    /// A Gröbner normal form (`PolyQuotient`).
    Poly(MPoly),
    /// Components of a product, or the pair `(r, i)` of an excision ring.
    Tuple(Vec<Elem>),
    /// Coefficients of a univariate polynomial, degree ascending, no trailing zeros.
    UPoly(Vec<Elem>),
}

impl Elem {
    pub(crate) fn as_int(&self) -> &BigInt {
        match self {
            Elem::Int(v) => v,
            other => panic!("expected an integer payload, found {other:?}"),
        }
    }

    pub(crate) fn as_res(&self) -> u64 {
        match self {
            Elem::Res(v) => *v,
            other => panic!("expected a residue payload, found {other:?}"),
        }
    }

    pub(crate) fn as_poly(&self) -> &MPoly {
        match self {
            Elem::Poly(v) => v,
            other => panic!("expected a polynomial payload, found {other:?}"),
        }
    }

    pub(crate) fn as_tuple(&self) -> &[Elem] {
        match self {
            Elem::Tuple(v) => v,
            other => panic!("expected a tuple payload, found {other:?}"),
        }
    }

    pub(crate) fn as_upoly(&self) -> &[Elem] {
        match self {
            Elem::UPoly(v) => v,
            other => panic!("expected a univariate polynomial payload, found {other:?}"),
        }
    }
}

enum Quot {
    /// Quotient of `Z` or `Z/n` by `(g)`; payloads are base residues in `0..g`.
    Residue(u64),
    /// Quotient of `Z` by the zero ideal.
    Identity,
    /// Quotient of a polynomial quotient ring: a bigger Gröbner basis.
    Poly(PolyQuotient),
    /// Quotient of a finite ring: each base element maps to the least member of its coset.
    Finite(HashMap<Elem, Elem>),
}

enum Backend {
    Integers,
    Mod(u64),
    PolyQ(PolyQuotient),
    Product(Vec<Ring>),
    Quotient { base: Ring, ideal: Ideal, strategy: Quot },
    Excision { base: Ring, ideal: Ideal },
    PolyExt { base: Ring, var: String },
}

struct FiniteData {
    elements: Vec<Elem>,
    index: HashMap<Elem, usize>,
    inverses: OnceLock<Vec<Option<usize>>>,
}

struct Inner {
    desc: RingDescriptor,
    backend: Backend,
    finite: OnceLock<Option<FiniteData>>,
}

/// A commutative ring with canonical forms. Cheap to clone and shareable
/// across threads.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.desc.hash(state)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.desc)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.desc)
    }
}

fn check_var(name: &str) -> Result<()> {
    let ok = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidRing(format!("bad variable name {name:?}")))
    }
}

impl Ring {
    pub fn new(desc: RingDescriptor) -> Result<Ring> {
        let backend = match &desc {
            RingDescriptor::Integers => Backend::Integers,
            RingDescriptor::IntegersMod { n } => {
                if *n < 2 {
                    return Err(Error::InvalidRing(format!("modulus {n} must be at least 2")));
                }
                Backend::Mod(*n)
            }
            RingDescriptor::PrimeField { p } => {
                if !zmod::is_prime(*p) {
                    return Err(Error::InvalidRing(format!("{p} is not prime")));
                }
                Backend::Mod(*p)
            }
            RingDescriptor::PolyQuotient { p, vars, relations } => {
                if !zmod::is_prime(*p) {
                    return Err(Error::InvalidRing(format!("{p} is not prime")));
                }
                for (k, v) in vars.iter().enumerate() {
                    check_var(v)?;
                    if vars[..k].contains(v) {
                        return Err(Error::InvalidRing(format!("duplicate variable {v}")));
                    }
                }
                let free = PolyQuotient::new(*p, vars.clone(), &[])?;
                let rels = relations
                    .iter()
                    .map(|r| eval_poly(&free, &expr::parse(r)?))
                    .collect::<Result<Vec<_>>>()?;
                Backend::PolyQ(PolyQuotient::new(*p, vars.clone(), &rels)?)
            }
            RingDescriptor::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidRing("empty product".into()));
                }
                Backend::Product(factors.iter().cloned().map(Ring::new).collect::<Result<_>>()?)
            }
            RingDescriptor::Quotient { base, ideal } => {
                let base = Ring::new((**base).clone())?;
                let gens = ideal.iter().map(|g| base.parse(g)).collect::<Result<Vec<_>>>()?;
                let strategy = quotient_strategy(&base, &gens)?;
                Backend::Quotient { ideal: Ideal::new(&base, gens), base, strategy }
            }
            RingDescriptor::Excision { base, ideal } => {
                let base = Ring::new((**base).clone())?;
                let gens = ideal.iter().map(|g| base.parse(g)).collect::<Result<Vec<_>>>()?;
                let ideal = Ideal::new(&base, gens);
                // fail early when membership is not decidable for this base
                ideal.contains(&base.zero())?;
                Backend::Excision { base, ideal }
            }
            RingDescriptor::PolyExt { base, var } => {
                check_var(var)?;
                Backend::PolyExt { base: Ring::new((**base).clone())?, var: var.clone() }
            }
        };
        Ok(Ring(Arc::new(Inner { desc, backend, finite: OnceLock::new() })))
    }

    /// Parses a ring from the JSON DSL or a shorthand alias.
    pub fn parse_descriptor(text: &str) -> Result<Ring> {
        Ring::new(RingDescriptor::parse(text)?)
    }

    pub fn integers() -> Ring {
        Ring::new(RingDescriptor::Integers).unwrap()
    }

    /// `Z/n`.
    pub fn zmod(n: u64) -> Result<Ring> {
        Ring::new(RingDescriptor::IntegersMod { n })
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        Ring::new(RingDescriptor::PrimeField { p })
    }

    pub fn product(factors: &[Ring]) -> Result<Ring> {
        Ring::new(RingDescriptor::Product { factors: factors.iter().map(|r| r.descriptor().clone()).collect() })
    }

    /// The excision ring `R (+) I` for the ideal generated by `gens`.
    pub fn excision(base: &Ring, gens: &[Elem]) -> Result<Ring> {
        Ring::new(RingDescriptor::Excision {
            base: Box::new(base.descriptor().clone()),
            ideal: gens.iter().map(|g| base.format(g)).collect(),
        })
    }

    pub fn quotient(base: &Ring, gens: &[Elem]) -> Result<Ring> {
        Ring::new(RingDescriptor::Quotient {
            base: Box::new(base.descriptor().clone()),
            ideal: gens.iter().map(|g| base.format(g)).collect(),
        })
    }

    /// The polynomial extension `R[var]`.
    pub fn poly_ext(base: &Ring, var: &str) -> Result<Ring> {
        Ring::new(RingDescriptor::PolyExt { base: Box::new(base.descriptor().clone()), var: var.to_string() })
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0.desc
    }

    fn backend(&self) -> &Backend {
        &self.0.backend
    }

    /// Base ring of an excision, quotient or polynomial extension.
    pub fn base(&self) -> Option<&Ring> {
        match self.backend() {
            Backend::Quotient { base, .. } | Backend::Excision { base, .. } | Backend::PolyExt { base, .. } => {
                Some(base)
            }
            _ => None,
        }
    }

    /// The ideal of an excision ring `R (+) I` or quotient `R/I`, as an ideal of the base.
    pub fn defining_ideal(&self) -> Option<&Ideal> {
        match self.backend() {
            Backend::Quotient { ideal, .. } | Backend::Excision { ideal, .. } => Some(ideal),
            _ => None,
        }
    }

    pub fn is_excision(&self) -> bool {
        matches!(self.backend(), Backend::Excision { .. })
    }

    pub fn is_quotient(&self) -> bool {
        matches!(self.backend(), Backend::Quotient { .. })
    }

    pub fn is_poly_ext(&self) -> bool {
        matches!(self.backend(), Backend::PolyExt { .. })
    }

    pub fn is_integers(&self) -> bool {
        matches!(self.backend(), Backend::Integers)
    }

    /// The modulus when this ring is `Z/n` or `F_p`.
    pub fn modulus(&self) -> Option<u64> {
        match self.backend() {
            Backend::Mod(n) => Some(*n),
            _ => None,
        }
    }

    /// Whether the ring is a field of the form `F_p`.
    pub fn is_prime_field(&self) -> bool {
        self.modulus().is_some_and(zmod::is_prime)
    }

    /// Variable name of a polynomial extension.
    pub fn poly_var(&self) -> Option<&str> {
        match self.backend() {
            Backend::PolyExt { var, .. } => Some(var),
            _ => None,
        }
    }

    /// Exact number of elements, or `None` for infinite rings (and for finite
    /// rings whose size overflows `u64`).
    pub fn cardinality(&self) -> Option<u64> {
        match self.backend() {
            Backend::Integers | Backend::PolyExt { .. } => None,
            Backend::Mod(n) => Some(*n),
            Backend::PolyQ(q) => {
                let s = q.standard_monomials()?.len() as u32;
                q.ctx.p.checked_pow(s)
            }
            Backend::Product(fs) => fs.iter().try_fold(1u64, |acc, f| acc.checked_mul(f.cardinality()?)),
            Backend::Quotient { base, strategy, .. } => match strategy {
                Quot::Residue(g) => Some(*g),
                Quot::Identity => base.cardinality(),
                Quot::Poly(q) => q.ctx.p.checked_pow(q.standard_monomials()?.len() as u32),
                Quot::Finite(map) => {
                    let mut reps: Vec<&Elem> = map.values().collect();
                    reps.sort();
                    reps.dedup();
                    Some(reps.len() as u64)
                }
            },
            Backend::Excision { base, ideal } => {
                let r = base.cardinality()?;
                let i = ideal.members().ok()?.len() as u64;
                r.checked_mul(i)
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    fn finite_data(&self) -> Result<&FiniteData> {
        let data = self.0.finite.get_or_init(|| {
            let card = self.cardinality()?;
            if card > ENUMERATION_CAP {
                return None;
            }
            let mut elements = self.generate_elements()?;
            elements.sort();
            elements.dedup();
            let index = elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
            Some(FiniteData { elements, index, inverses: OnceLock::new() })
        });
        match data {
            Some(d) => Ok(d),
            None if self.is_finite() => Err(Error::BudgetExceeded(ENUMERATION_CAP as usize)),
            None => Err(Error::InfiniteRing),
        }
    }

    fn generate_elements(&self) -> Option<Vec<Elem>> {
        Some(match self.backend() {
            Backend::Integers | Backend::PolyExt { .. } => return None,
            Backend::Mod(n) => (0..*n).map(Elem::Res).collect(),
            Backend::PolyQ(q) => q.enumerate(ENUMERATION_CAP)?.into_iter().map(Elem::Poly).collect(),
            Backend::Product(fs) => {
                let lists: Vec<&[Elem]> = fs.iter().map(|f| f.elements().ok()).collect::<Option<_>>()?;
                cartesian(&lists).into_iter().map(Elem::Tuple).collect()
            }
            Backend::Quotient { base, strategy, .. } => match strategy {
                Quot::Residue(g) => (0..*g).map(|r| base.elem_of_u64(r)).collect(),
                Quot::Identity => base.elements().ok()?.to_vec(),
                Quot::Poly(q) => q.enumerate(ENUMERATION_CAP)?.into_iter().map(Elem::Poly).collect(),
                Quot::Finite(map) => map.values().cloned().collect(),
            },
            Backend::Excision { base, ideal } => {
                let members = ideal.members().ok()?;
                let mut out = Vec::new();
                for r in base.elements().ok()? {
                    for i in members.iter() {
                        out.push(Elem::Tuple(vec![r.clone(), i.clone()]));
                    }
                }
                out
            }
        })
    }

    /// All elements in sorted canonical order.
    pub fn elements(&self) -> Result<&[Elem]> {
        Ok(&self.finite_data()?.elements)
    }

    /// Position of `a` in [`Ring::elements`].
    pub fn index_of(&self, a: &Elem) -> Option<usize> {
        self.finite_data().ok()?.index.get(a).copied()
    }

    // ---- arithmetic -------------------------------------------------------

    pub fn from_bigint(&self, k: &BigInt) -> Elem {
        match self.backend() {
            Backend::Integers => Elem::Int(k.clone()),
            Backend::Mod(n) => Elem::Res(k.mod_floor(&BigInt::from(*n)).to_u64().unwrap()),
            Backend::PolyQ(q) => {
                let c = k.mod_floor(&BigInt::from(q.ctx.p)).to_u64().unwrap();
                Elem::Poly(q.nf(&q.ctx.constant(c)))
            }
            Backend::Product(fs) => Elem::Tuple(fs.iter().map(|f| f.from_bigint(k)).collect()),
            Backend::Quotient { base, .. } => self.project(&base.from_bigint(k)),
            Backend::Excision { base, .. } => Elem::Tuple(vec![base.from_bigint(k), base.zero()]),
            Backend::PolyExt { base, .. } => upoly::trim(base, vec![base.from_bigint(k)]),
        }
    }

    pub fn from_i64(&self, k: i64) -> Elem {
        self.from_bigint(&BigInt::from(k))
    }

    pub(crate) fn elem_of_u64(&self, k: u64) -> Elem {
        self.from_bigint(&BigInt::from(k))
    }

    pub fn zero(&self) -> Elem {
        self.from_i64(0)
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match self.backend() {
            Backend::Integers => Elem::Int(a.as_int() + b.as_int()),
            Backend::Mod(n) => Elem::Res(zmod::add(a.as_res(), b.as_res(), *n)),
            Backend::PolyQ(q) => Elem::Poly(q.ctx.add(a.as_poly(), b.as_poly())),
            Backend::Product(fs) => Elem::Tuple(
                fs.iter().zip(a.as_tuple().iter().zip(b.as_tuple())).map(|(f, (x, y))| f.add(x, y)).collect(),
            ),
            Backend::Quotient { base, .. } => self.project(&base.add(a, b)),
            Backend::Excision { base, .. } => {
                let (x, y) = (a.as_tuple(), b.as_tuple());
                Elem::Tuple(vec![base.add(&x[0], &y[0]), base.add(&x[1], &y[1])])
            }
            Backend::PolyExt { base, .. } => upoly::add(base, a.as_upoly(), b.as_upoly()),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match self.backend() {
            Backend::Integers => Elem::Int(-a.as_int()),
            Backend::Mod(n) => Elem::Res(zmod::neg(a.as_res(), *n)),
            Backend::PolyQ(q) => Elem::Poly(q.ctx.neg(a.as_poly())),
            Backend::Product(fs) => Elem::Tuple(fs.iter().zip(a.as_tuple()).map(|(f, x)| f.neg(x)).collect()),
            Backend::Quotient { base, .. } => self.project(&base.neg(a)),
            Backend::Excision { base, .. } => {
                let x = a.as_tuple();
                Elem::Tuple(vec![base.neg(&x[0]), base.neg(&x[1])])
            }
            Backend::PolyExt { base, .. } => Elem::UPoly(a.as_upoly().iter().map(|c| base.neg(c)).collect()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match self.backend() {
            Backend::Integers => Elem::Int(a.as_int() * b.as_int()),
            Backend::Mod(n) => Elem::Res(zmod::mul(a.as_res(), b.as_res(), *n)),
            Backend::PolyQ(q) => Elem::Poly(q.nf(&q.ctx.mul(a.as_poly(), b.as_poly()))),
            Backend::Product(fs) => Elem::Tuple(
                fs.iter().zip(a.as_tuple().iter().zip(b.as_tuple())).map(|(f, (x, y))| f.mul(x, y)).collect(),
            ),
            Backend::Quotient { base, .. } => self.project(&base.mul(a, b)),
            Backend::Excision { base, .. } => {
                // (r,i)(s,j) = (rs, rj + si + ij)
                let (x, y) = (a.as_tuple(), b.as_tuple());
                let (r, i, s, j) = (&x[0], &x[1], &y[0], &y[1]);
                let second = base.add(&base.add(&base.mul(r, j), &base.mul(s, i)), &base.mul(i, j));
                Elem::Tuple(vec![base.mul(r, s), second])
            }
            Backend::PolyExt { base, .. } => upoly::mul(base, a.as_upoly(), b.as_upoly()),
        }
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Sum of products `sum a_i b_i`.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }

    /// The inverse of `a` when it is a unit.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match self.backend() {
            Backend::Integers => {
                let v = a.as_int();
                (v.abs().is_one()).then(|| a.clone())
            }
            Backend::Mod(n) => zmod::inv(a.as_res(), *n).map(Elem::Res),
            Backend::PolyQ(q) => q.inverse(a.as_poly()).map(Elem::Poly),
            Backend::Product(fs) => Some(Elem::Tuple(
                fs.iter().zip(a.as_tuple()).map(|(f, x)| f.inverse(x)).collect::<Option<_>>()?,
            )),
            Backend::Quotient { base, strategy, .. } => match strategy {
                Quot::Residue(g) => {
                    let r = base_residue(base, a);
                    zmod::inv(r, *g).map(|x| base.elem_of_u64(x))
                }
                Quot::Identity => base.inverse(a),
                Quot::Poly(q) => q.inverse(a.as_poly()).map(Elem::Poly),
                Quot::Finite(_) => self.inverse_by_table(a),
            },
            Backend::Excision { base, .. } => {
                // (r,i) is a unit iff r and r+i are; the inverse is (r^-1, -r^-1 i (r+i)^-1)
                let x = a.as_tuple();
                let s = base.inverse(&x[0])?;
                let t = base.inverse(&base.add(&x[0], &x[1]))?;
                let j = base.neg(&base.mul(&base.mul(&s, &x[1]), &t));
                Some(Elem::Tuple(vec![s, j]))
            }
            Backend::PolyExt { base, .. } => upoly::inverse(self, base, a.as_upoly()),
        }
    }

    fn inverse_by_table(&self, a: &Elem) -> Option<Elem> {
        let data = self.finite_data().ok()?;
        let table = data.inverses.get_or_init(|| {
            let els = &data.elements;
            let one = self.one();
            let mut inv = vec![None; els.len()];
            for (i, x) in els.iter().enumerate() {
                if inv[i].is_some() {
                    continue;
                }
                if let Some(j) = els.iter().position(|y| self.mul(x, y) == one) {
                    inv[i] = Some(j);
                    inv[j] = Some(i);
                }
            }
            inv
        });
        table[*data.index.get(a)?].map(|j| data.elements[j].clone())
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// Whether some power of `a` vanishes.
    pub fn is_nilpotent(&self, a: &Elem) -> bool {
        if let Some(card) = self.cardinality() {
            return self.is_zero(&self.pow(a, card));
        }
        match self.backend() {
            Backend::Integers => self.is_zero(a),
            Backend::Product(fs) => fs.iter().zip(a.as_tuple()).all(|(f, x)| f.is_nilpotent(x)),
            Backend::Excision { base, .. } => {
                let x = a.as_tuple();
                base.is_nilpotent(&x[0]) && base.is_nilpotent(&base.add(&x[0], &x[1]))
            }
            Backend::PolyExt { base, .. } => a.as_upoly().iter().all(|c| base.is_nilpotent(c)),
            // radical membership by repeated squaring; exact once the nilpotency index is below 2^16
            _ => {
                let mut b = a.clone();
                for _ in 0..16 {
                    if self.is_zero(&b) {
                        return true;
                    }
                    b = self.mul(&b, &b);
                }
                self.is_zero(&b)
            }
        }
    }

    /// Euclidean size for `Z` (absolute value) and for polynomials over a
    /// field (degree); `None` for zero and for other rings.
    pub fn euclid_norm(&self, a: &Elem) -> Option<BigInt> {
        match self.backend() {
            Backend::Integers => (!a.as_int().is_zero()).then(|| a.as_int().abs()),
            Backend::PolyExt { base, .. } if base.is_prime_field() => {
                let cs = a.as_upoly();
                (!cs.is_empty()).then(|| BigInt::from(cs.len() - 1))
            }
            _ => None,
        }
    }

    /// Division with remainder for the rings that have [`Ring::euclid_norm`].
    pub fn euclid_divrem(&self, a: &Elem, b: &Elem) -> Option<(Elem, Elem)> {
        match self.backend() {
            Backend::Integers => {
                let (q, r) = a.as_int().div_mod_floor(b.as_int());
                Some((Elem::Int(q), Elem::Int(r)))
            }
            Backend::PolyExt { base, .. } if base.is_prime_field() => {
                upoly::divrem(base, a.as_upoly(), b.as_upoly())
            }
            _ => None,
        }
    }

    /// Constant coefficient of a polynomial, as a base element.
    pub fn eval0(&self, a: &Elem) -> Result<Elem> {
        match self.backend() {
            Backend::PolyExt { base, .. } => Ok(a.as_upoly().first().cloned().unwrap_or_else(|| base.zero())),
            _ => Err(Error::InvalidRing(format!("{self} is not a polynomial extension"))),
        }
    }

    /// Coefficients of a polynomial, degree ascending.
    pub fn coefficients(&self, a: &Elem) -> Result<Vec<Elem>> {
        match self.backend() {
            Backend::PolyExt { .. } => Ok(a.as_upoly().to_vec()),
            _ => Err(Error::InvalidRing(format!("{self} is not a polynomial extension"))),
        }
    }

    /// The polynomial with the given coefficients.
    pub fn from_coefficients(&self, coeffs: Vec<Elem>) -> Result<Elem> {
        match self.backend() {
            Backend::PolyExt { base, .. } => Ok(upoly::trim(base, coeffs)),
            _ => Err(Error::InvalidRing(format!("{self} is not a polynomial extension"))),
        }
    }

    /// Degree of a polynomial; `None` for zero.
    pub fn degree(&self, a: &Elem) -> Option<usize> {
        match a {
            Elem::UPoly(cs) => cs.len().checked_sub(1),
            _ => None,
        }
    }

    // ---- quotients and lifts ---------------------------------------------

    /// Canonical image in a quotient ring of a base-ring element.
    pub fn project(&self, x: &Elem) -> Elem {
        match self.backend() {
            Backend::Quotient { base, strategy, .. } => match strategy {
                Quot::Residue(g) => base.elem_of_u64(base_residue(base, x) % g),
                Quot::Identity => x.clone(),
                Quot::Poly(q) => Elem::Poly(q.nf(x.as_poly())),
                Quot::Finite(map) => map[x].clone(),
            },
            _ => x.clone(),
        }
    }

    /// Canonical coset representative of a quotient element, as a base element.
    pub fn lift(&self, x: &Elem) -> Elem {
        x.clone()
    }

    // ---- parsing and printing --------------------------------------------

    /// Evaluates an expression tree in this ring.
    pub fn eval(&self, e: &Expr) -> Result<Elem> {
        Ok(match e {
            Expr::Int(k) => self.from_bigint(k),
            Expr::Var(name) => self.var(name)?,
            Expr::Tuple(items) => self.tuple(items)?,
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.sub(&self.eval(a)?, &self.eval(b)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Pow(a, k) => self.pow(&self.eval(a)?, *k as u64),
        })
    }

    fn var(&self, name: &str) -> Result<Elem> {
        match self.backend() {
            Backend::PolyQ(q) => eval_poly(q, &Expr::Var(name.to_string())).map(Elem::Poly),
            Backend::Quotient { base, .. } => Ok(self.project(&base.var(name)?)),
            Backend::PolyExt { base, var } => {
                if name == var {
                    Ok(Elem::UPoly(vec![base.zero(), base.one()]))
                } else {
                    Ok(upoly::trim(base, vec![base.var(name)?]))
                }
            }
            _ => Err(Error::Parse(format!("unknown variable {name:?} in {}", self))),
        }
    }

    fn tuple(&self, items: &[Expr]) -> Result<Elem> {
        match self.backend() {
            Backend::Product(fs) => {
                if items.len() != fs.len() {
                    return Err(Error::Parse(format!("expected {} components", fs.len())));
                }
                Ok(Elem::Tuple(fs.iter().zip(items).map(|(f, e)| f.eval(e)).collect::<Result<_>>()?))
            }
            Backend::Excision { base, ideal } => {
                if items.len() != 2 {
                    return Err(Error::Parse("excision elements are pairs (r,i)".into()));
                }
                let r = base.eval(&items[0])?;
                let i = base.eval(&items[1])?;
                if !ideal.contains(&i)? {
                    return Err(Error::NotInIdeal(base.format(&i)));
                }
                Ok(Elem::Tuple(vec![r, i]))
            }
            Backend::Quotient { base, .. } => Ok(self.project(&base.tuple(items)?)),
            Backend::PolyExt { base, .. } => Ok(upoly::trim(base, vec![base.tuple(items)?])),
            _ => Err(Error::Parse(format!("tuple literal in {}", self))),
        }
    }

    /// Parses an element literal.
    pub fn parse(&self, text: &str) -> Result<Elem> {
        self.eval(&expr::parse(text)?)
    }

    /// Parses a comma separated row, respecting parentheses.
    pub fn parse_row(&self, text: &str) -> Result<Vec<Elem>> {
        let text = text.trim();
        let text = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(text);
        expr::split_top_level(text).iter().map(|s| self.parse(s)).collect()
    }

    /// Canonical textual form; `parse(format(x)) == x`.
    pub fn format(&self, a: &Elem) -> String {
        match self.backend() {
            Backend::Integers => a.as_int().to_string(),
            Backend::Mod(_) => a.as_res().to_string(),
            Backend::PolyQ(q) => q.format(a.as_poly()),
            Backend::Product(fs) => {
                let parts: Vec<String> = fs.iter().zip(a.as_tuple()).map(|(f, x)| f.format(x)).collect();
                format!("({})", parts.join(","))
            }
            Backend::Quotient { base, .. } => base.format(a),
            Backend::Excision { base, .. } => {
                let x = a.as_tuple();
                format!("({},{})", base.format(&x[0]), base.format(&x[1]))
            }
            Backend::PolyExt { base, var } => upoly::format(base, var, a.as_upoly()),
        }
    }

    pub fn format_row(&self, row: &[Elem]) -> Vec<String> {
        row.iter().map(|x| self.format(x)).collect()
    }

    /// JSON form: a string for most rings, a degree-ascending coefficient
    /// array for polynomial extensions.
    pub fn to_json(&self, a: &Elem) -> Value {
        match self.backend() {
            Backend::PolyExt { base, .. } => Value::Array(a.as_upoly().iter().map(|c| base.to_json(c)).collect()),
            _ => Value::String(self.format(a)),
        }
    }

    pub fn from_json(&self, v: &Value) -> Result<Elem> {
        match (v, self.backend()) {
            (Value::String(s), _) => self.parse(s),
            (Value::Number(n), _) => {
                let k: BigInt =
                    n.to_string().parse().map_err(|_| Error::Parse(format!("not an integer: {n}")))?;
                Ok(self.from_bigint(&k))
            }
            (Value::Array(items), Backend::PolyExt { base, .. }) => {
                let coeffs = items.iter().map(|c| base.from_json(c)).collect::<Result<Vec<_>>>()?;
                Ok(upoly::trim(base, coeffs))
            }
            _ => Err(Error::Parse(format!("cannot read element {v} of {}", self))),
        }
    }

    /// Whether `a` is a canonical element of this ring.
    pub fn contains(&self, a: &Elem) -> bool {
        if let Ok(data) = self.finite_data() {
            return data.index.contains_key(a);
        }
        match (self.backend(), a) {
            (Backend::Integers, Elem::Int(_)) => true,
            (Backend::PolyQ(q), Elem::Poly(f)) => q.nf(f) == *f,
            (Backend::Product(fs), Elem::Tuple(xs)) => {
                fs.len() == xs.len() && fs.iter().zip(xs).all(|(f, x)| f.contains(x))
            }
            (Backend::Excision { base, ideal }, Elem::Tuple(xs)) => {
                xs.len() == 2 && base.contains(&xs[0]) && base.contains(&xs[1]) && ideal.contains(&xs[1]).unwrap_or(false)
            }
            (Backend::Quotient { base, .. }, x) => base.contains(x) && self.project(x) == *x,
            (Backend::PolyExt { base, .. }, Elem::UPoly(cs)) => {
                cs.iter().all(|c| base.contains(c)) && cs.last().is_none_or(|c| !base.is_zero(c))
            }
            _ => false,
        }
    }

    // ---- unimodularity ---------------------------------------------------

    /// Finds `b` with `sum a_i b_i = 1`, or `None` when the row is not unimodular.
    pub fn solve_unimodular(&self, row: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if row.is_empty() {
            return Err(Error::EmptyRow);
        }
        let found = match self.backend() {
            Backend::Integers => {
                let ints: Vec<BigInt> = row.iter().map(|a| a.as_int().clone()).collect();
                let (g, b) = zmod::bezout_int(&ints);
                g.is_one().then(|| b.into_iter().map(Elem::Int).collect())
            }
            Backend::Mod(n) => {
                let res: Vec<u64> = row.iter().map(Elem::as_res).collect();
                let (g, b) = zmod::bezout_mod(&res, *n);
                (g == 1).then(|| b.into_iter().map(Elem::Res).collect())
            }
            Backend::PolyQ(q) => {
                let polys: Vec<MPoly> = row.iter().map(|a| a.as_poly().clone()).collect();
                q.ctx.unit_combination(&polys, &q.gb).map(|b| b.into_iter().map(Elem::Poly).collect())
            }
            Backend::Product(fs) => {
                let mut parts = Vec::with_capacity(fs.len());
                for (k, f) in fs.iter().enumerate() {
                    let comp: Vec<Elem> = row.iter().map(|a| a.as_tuple()[k].clone()).collect();
                    match f.solve_unimodular(&comp)? {
                        Some(b) => parts.push(b),
                        None => return Ok(None),
                    }
                }
                Some((0..row.len()).map(|t| Elem::Tuple(parts.iter().map(|b| b[t].clone()).collect())).collect())
            }
            Backend::Quotient { base, strategy, .. } => match strategy {
                Quot::Residue(g) => {
                    let res: Vec<u64> = row.iter().map(|a| base_residue(base, a)).collect();
                    let (h, b) = zmod::bezout_mod(&res, *g);
                    (h == 1).then(|| b.into_iter().map(|x| base.elem_of_u64(x)).collect())
                }
                Quot::Identity => base.solve_unimodular(row)?,
                Quot::Poly(q) => {
                    let polys: Vec<MPoly> = row.iter().map(|a| a.as_poly().clone()).collect();
                    q.ctx.unit_combination(&polys, &q.gb).map(|b| b.into_iter().map(Elem::Poly).collect())
                }
                Quot::Finite(_) => self.closure_witness(row)?,
            },
            Backend::Excision { .. } => self.closure_witness(row)?,
            Backend::PolyExt { base, .. } => upoly::solve_unimodular(self, base, row)?,
        };
        if let Some(b) = &found {
            debug_assert!(self.is_one(&self.dot(row, b)));
        }
        Ok(found)
    }

    pub fn is_unimodular(&self, row: &[Elem]) -> Result<bool> {
        Ok(self.solve_unimodular(row)?.is_some())
    }

    /// Breadth-first closure of the ideal generated by `row`, recording for
    /// each member one coefficient vector; stops once 1 is reached.
    fn closure_witness(&self, row: &[Elem]) -> Result<Option<Vec<Elem>>> {
        let els = self.elements()?;
        let one = self.one();
        let zero = self.zero();
        if row.is_empty() {
            return Ok(None);
        }
        let mut steps: Vec<(Elem, usize, Elem)> = Vec::new();
        for (t, a) in row.iter().enumerate() {
            for r in els {
                let g = self.mul(r, a);
                if !self.is_zero(&g) && !steps.iter().any(|(h, _, _)| *h == g) {
                    steps.push((g, t, r.clone()));
                }
            }
        }
        let mut seen: HashMap<Elem, Vec<Elem>> = HashMap::new();
        seen.insert(zero.clone(), vec![zero.clone(); row.len()]);
        let mut queue = std::collections::VecDeque::from([zero]);
        if self.is_zero(&one) {
            return Ok(Some(vec![self.zero(); row.len()]));
        }
        while let Some(e) = queue.pop_front() {
            let w = seen[&e].clone();
            for (g, t, r) in &steps {
                let next = self.add(&e, g);
                if seen.contains_key(&next) {
                    continue;
                }
                let mut w2 = w.clone();
                w2[*t] = self.add(&w2[*t], r);
                if next == one {
                    return Ok(Some(w2));
                }
                seen.insert(next.clone(), w2);
                queue.push_back(next);
            }
        }
        Ok(None)
    }
}

fn base_residue(base: &Ring, x: &Elem) -> u64 {
    match x {
        Elem::Res(r) => *r,
        Elem::Int(v) => {
            debug_assert!(base.is_integers());
            v.to_u64().expect("residue payload out of range")
        }
        other => panic!("unexpected payload {other:?}"),
    }
}

fn quotient_strategy(base: &Ring, gens: &[Elem]) -> Result<Quot> {
    match base.backend() {
        Backend::Integers => {
            let g = gens.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x.as_int()));
            if g.is_zero() {
                Ok(Quot::Identity)
            } else if g.is_one() {
                Err(Error::InvalidRing("quotient by the unit ideal".into()))
            } else {
                Ok(Quot::Residue(g.to_u64().ok_or_else(|| Error::InvalidRing("modulus too large".into()))?))
            }
        }
        Backend::Mod(n) => {
            let g = gens.iter().fold(*n, |acc, x| zmod::gcd(acc, x.as_res()));
            if g == 1 {
                Err(Error::InvalidRing("quotient by the unit ideal".into()))
            } else {
                Ok(Quot::Residue(g))
            }
        }
        Backend::PolyQ(q) => {
            let extra: Vec<MPoly> = gens.iter().map(|g| g.as_poly().clone()).collect();
            let gb = q.extended_basis(&extra);
            Ok(Quot::Poly(PolyQuotient::new(q.ctx.p, q.vars.clone(), &gb)?))
        }
        _ if base.is_finite() => {
            let ideal = Ideal::new(base, gens.to_vec());
            let members = ideal.members()?;
            if members.contains(&base.one()) {
                return Err(Error::InvalidRing("quotient by the unit ideal".into()));
            }
            let mut map = HashMap::new();
            for x in base.elements()? {
                let rep = members.iter().map(|i| base.add(x, i)).min().unwrap();
                map.insert(x.clone(), rep);
            }
            Ok(Quot::Finite(map))
        }
        _ => Err(Error::UnsupportedBase(format!("quotients of {base}"))),
    }
}

fn eval_poly(q: &PolyQuotient, e: &Expr) -> Result<MPoly> {
    let ctx: PolyCtx = q.ctx;
    Ok(match e {
        Expr::Int(k) => ctx.constant(k.mod_floor(&BigInt::from(ctx.p)).to_u64().unwrap()),
        Expr::Var(name) => match q.vars.iter().position(|v| v == name) {
            Some(k) => ctx.var(k),
            None => return Err(Error::Parse(format!("unknown variable {name:?}"))),
        },
        Expr::Tuple(_) => return Err(Error::Parse("tuple literal in a polynomial ring".into())),
        Expr::Add(a, b) => ctx.add(&eval_poly(q, a)?, &eval_poly(q, b)?),
        Expr::Sub(a, b) => ctx.sub(&eval_poly(q, a)?, &eval_poly(q, b)?),
        Expr::Mul(a, b) => q.nf(&ctx.mul(&eval_poly(q, a)?, &eval_poly(q, b)?)),
        Expr::Neg(a) => ctx.neg(&eval_poly(q, a)?),
        Expr::Pow(a, k) => {
            let base = eval_poly(q, a)?;
            let mut acc = ctx.constant(1);
            for _ in 0..*k {
                acc = q.nf(&ctx.mul(&acc, &base));
            }
            acc
        }
    })
    .map(|f| q.nf(&f))
}

fn cartesian(lists: &[&[Elem]]) -> Vec<Vec<Elem>> {
    let mut out: Vec<Vec<Elem>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for x in list.iter() {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}
