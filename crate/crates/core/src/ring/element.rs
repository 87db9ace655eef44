use std::fmt;

use super::{Elem, Ring};
use crate::error::{Error, Result};

/// An element tagged with its ring. Binary operations check that both
/// operands live in the same ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub ring: Ring,
    pub value: Elem,
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}

impl RingElement {
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        Ok(RingElement { ring: ring.clone(), value: ring.parse(text)? })
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    fn wrap(&self, value: Elem) -> Self {
        RingElement { ring: self.ring.clone(), value }
    }

    pub fn add(&self, other: &RingElement) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.ring.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &RingElement) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.ring.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &RingElement) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.ring.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.ring.neg(&self.value))
    }

    pub fn inverse(&self) -> Option<Self> {
        self.ring.inverse(&self.value).map(|v| self.wrap(v))
    }
}

/// Ring operations exposed by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

/// Applies `op`; `Neg` and `Inv` ignore `b`. Returns `None` for the inverse of a non-unit.
pub fn ring_arith(op: ArithOp, a: &RingElement, b: Option<&RingElement>) -> Result<Option<RingElement>> {
    let need_b = || b.ok_or_else(|| Error::Parse("missing second operand".into()));
    Ok(match op {
        ArithOp::Add => Some(a.add(need_b()?)?),
        ArithOp::Sub => Some(a.sub(need_b()?)?),
        ArithOp::Mul => Some(a.mul(need_b()?)?),
        ArithOp::Neg => Some(a.neg()),
        ArithOp::Inv => a.inverse(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_rings_rejected() {
        let a = RingElement::parse(&Ring::zmod(6).unwrap(), "2").unwrap();
        let b = RingElement::parse(&Ring::zmod(4).unwrap(), "2").unwrap();
        assert_eq!(a.add(&b), Err(Error::MixedRings));
        assert_eq!(ring_arith(ArithOp::Mul, &a, Some(&a)).unwrap().unwrap().to_string(), "4");
        assert_eq!(ring_arith(ArithOp::Inv, &a, None).unwrap(), None);
    }
}
