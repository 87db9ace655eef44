//! Unimodular rows and their witnesses.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::{Elem, Ideal, Ring};
use crate::word::ElementaryWord;

/// A row over a ring, optionally carrying `b` with `sum a_i b_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularRow {
    pub ring: Ring,
    pub entries: Vec<Elem>,
    pub witness: Option<Vec<Elem>>,
}

impl UnimodularRow {
    /// Solves for a witness; fails with `NotUnimodular` when none exists.
    pub fn certified(ring: &Ring, entries: Vec<Elem>) -> Result<UnimodularRow> {
        match ring.solve_unimodular(&entries)? {
            Some(w) => Ok(UnimodularRow { ring: ring.clone(), entries, witness: Some(w) }),
            None => Err(Error::NotUnimodular),
        }
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<UnimodularRow> {
        UnimodularRow::certified(ring, ring.parse_row(text)?)
    }

    pub fn e1(ring: &Ring, n: usize) -> UnimodularRow {
        let e = e1(ring, n);
        UnimodularRow { ring: ring.clone(), witness: Some(e.clone()), entries: e }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether the stored witness pairs to 1.
    pub fn witness_holds(&self) -> bool {
        self.witness.as_ref().is_some_and(|b| self.ring.is_one(&self.ring.dot(&self.entries, b)))
    }

    /// `self * replay(word)`, transporting the witness.
    pub fn act(&self, word: &ElementaryWord) -> Result<UnimodularRow> {
        if word.ring != self.ring {
            return Err(Error::MixedRings);
        }
        let (entries, witness) = match &self.witness {
            Some(b) => {
                let (v, b) = word.act_with_witness(&self.entries, b)?;
                (v, Some(b))
            }
            None => (word.act(&self.entries)?, None),
        };
        Ok(UnimodularRow { ring: self.ring.clone(), entries, witness })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.ring.format_row(&self.entries)
    }

    pub fn to_json(&self) -> Value {
        let row = |xs: &[Elem]| Value::Array(xs.iter().map(|x| self.ring.to_json(x)).collect());
        json!({"row": row(&self.entries), "witness": self.witness.as_deref().map(row)})
    }
}

pub fn e1(ring: &Ring, n: usize) -> Vec<Elem> {
    let mut v = vec![ring.zero(); n];
    if n > 0 {
        v[0] = ring.one();
    }
    v
}

/// Whether `v` is unimodular and congruent to `e_1` modulo `ideal`.
pub fn um_rel_member(ring: &Ring, v: &[Elem], ideal: &Ideal) -> Result<bool> {
    if ideal.ring() != ring {
        return Err(Error::MixedRings);
    }
    let target = e1(ring, v.len());
    for (a, e) in v.iter().zip(&target) {
        if !ideal.contains(&ring.sub(a, e))? {
            return Ok(false);
        }
    }
    ring.is_unimodular(v)
}

/// The lexicographically least `b` (in element order) with `sum a_i b_i = 1`.
///
/// Coordinates are fixed greedily: `b_k` is the least value that keeps the
/// remaining target inside the ideal of the later entries.
pub fn lex_least_witness(ring: &Ring, row: &[Elem]) -> Result<Option<Vec<Elem>>> {
    if row.is_empty() {
        return Err(Error::EmptyRow);
    }
    let els = ring.elements()?;
    let tails: Vec<Ideal> = (0..row.len()).map(|k| Ideal::of_row(ring, &row[k + 1..])).collect();
    let mut target = ring.one();
    let mut out = Vec::with_capacity(row.len());
    for (k, a) in row.iter().enumerate() {
        let mut chosen = None;
        for b in els {
            let rest = ring.sub(&target, &ring.mul(a, b));
            if tails[k].contains(&rest)? {
                chosen = Some((b.clone(), rest));
                break;
            }
        }
        match chosen {
            Some((b, rest)) => {
                out.push(b);
                target = rest;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// All rows of length `n` over a finite ring that are unimodular, in lexicographic element order.
pub fn enumerate_um(ring: &Ring, n: usize) -> Result<Vec<Vec<Elem>>> {
    let els = ring.elements()?;
    let size = els.len();
    let total = size.checked_pow(n as u32).ok_or(Error::BudgetExceeded(usize::MAX))?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    for _ in 0..total {
        let row: Vec<Elem> = idx.iter().map(|&k| els[k].clone()).collect();
        if ring.is_unimodular(&row)? {
            out.push(row);
        }
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < size {
                break;
            }
            *slot = 0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_membership() {
        let r = Ring::zmod(4).unwrap();
        let i = Ideal::new(&r, vec![r.from_i64(2)]);
        assert!(um_rel_member(&r, &r.parse_row("3,2,2").unwrap(), &i).unwrap());
        assert!(um_rel_member(&r, &e1(&r, 3), &i).unwrap());
        assert!(!um_rel_member(&r, &r.parse_row("3,1,0").unwrap(), &i).unwrap());
        let other = Ring::zmod(6).unwrap();
        assert_eq!(um_rel_member(&other, &e1(&other, 3), &i), Err(Error::MixedRings));
    }

    #[test]
    fn lex_least_witness_mod_six() {
        let r = Ring::zmod(6).unwrap();
        let w = lex_least_witness(&r, &r.parse_row("1,2,3").unwrap()).unwrap().unwrap();
        assert_eq!(r.format_row(&w), vec!["0", "2", "1"]);
        assert_eq!(lex_least_witness(&r, &r.parse_row("2,4").unwrap()).unwrap(), None);
    }

    #[test]
    fn lex_least_matches_brute_force() {
        let r = Ring::zmod(6).unwrap();
        let els = r.elements().unwrap();
        for row in enumerate_um(&r, 2).unwrap() {
            let mut brute = None;
            'outer: for a in els {
                for b in els {
                    if r.is_one(&r.add(&r.mul(&row[0], a), &r.mul(&row[1], b))) {
                        brute = Some(vec![a.clone(), b.clone()]);
                        break 'outer;
                    }
                }
            }
            assert_eq!(lex_least_witness(&r, &row).unwrap(), brute);
        }
    }

    #[test]
    fn um_counts() {
        assert_eq!(enumerate_um(&Ring::zmod(2).unwrap(), 2).unwrap().len(), 3);
        assert_eq!(enumerate_um(&Ring::zmod(2).unwrap(), 3).unwrap().len(), 7);
        assert_eq!(enumerate_um(&Ring::zmod(6).unwrap(), 3).unwrap().len(), 182);
    }
}
