//! Structure maps of the excision ring `R (+) I`.
//!
//! `omega(r, i) = r + i` and `pi(r, i) = r` are ring maps onto `R`, and
//! `gamma(x) = (x, 0)` is a section of `pi`.

use super::{Elem, Ring};
use crate::error::{Error, Result};

/// One of the three structure maps between `R (+) I` and `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExcisionMap {
    Omega,
    Pi,
    Gamma,
}

fn base_of(ex: &Ring) -> Result<&Ring> {
    if !ex.is_excision() {
        return Err(Error::InvalidRing(format!("{ex} is not an excision ring")));
    }
    Ok(ex.base().expect("excision rings have a base"))
}

impl ExcisionMap {
    /// Applies the map to one element. `Omega` and `Pi` take excision
    /// elements; `Gamma` takes a base element.
    pub fn apply(self, ex: &Ring, x: &Elem) -> Result<Elem> {
        let base = base_of(ex)?;
        Ok(match self {
            ExcisionMap::Omega => {
                let p = x.as_tuple();
                base.add(&p[0], &p[1])
            }
            ExcisionMap::Pi => x.as_tuple()[0].clone(),
            ExcisionMap::Gamma => Elem::Tuple(vec![x.clone(), base.zero()]),
        })
    }

    pub fn apply_all(self, ex: &Ring, xs: &[Elem]) -> Result<Vec<Elem>> {
        xs.iter().map(|x| self.apply(ex, x)).collect()
    }
}

/// Lifts a row `(1 + i_1, i_2, ..., i_n)` congruent to `e_1` modulo `I` to
/// `((1, i_1), (0, i_2), ..., (0, i_n))` over `R (+) I`.
pub fn lift_row(ex: &Ring, row: &[Elem]) -> Result<Vec<Elem>> {
    let base = base_of(ex)?;
    let ideal = ex.defining_ideal().expect("excision rings carry an ideal");
    let mut out = Vec::with_capacity(row.len());
    for (k, a) in row.iter().enumerate() {
        let r = if k == 0 { base.one() } else { base.zero() };
        let i = base.sub(a, &r);
        if !ideal.contains(&i)? {
            return Err(Error::NotRelUnimodular);
        }
        out.push(Elem::Tuple(vec![r, i]));
    }
    Ok(out)
}
