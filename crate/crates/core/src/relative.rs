//! Relative transitivity through the excision ring.
//!
//! A row `v` congruent to `e_1` modulo `I` lifts to `v~` over `R (+) I` with
//! `pi(v~) = e_1` and `omega(v~) = v`. A word `eps_1` with `v~ eps_1 = e_1` is
//! found by BFS; writing each parameter as `(r, 0) + (0, x)` and cancelling the
//! `(r, 0)` parts against `gamma(pi(eps_1))^-1` leaves a product of conjugates
//! with cores in `0 (+) I`. Its image under `omega` carries `v` to `e_1` and
//! is congruent to the identity modulo `I`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::orbit::{same_orbit, Mode, OrbitConfig, SameOrbit};
use crate::ring::{lift_row, Elem, ExcisionMap, Ideal, Ring};
use crate::row::{e1, um_rel_member};
use crate::word::{ElementaryWord, Letter};

/// The word together with the intermediate objects of its construction.
#[derive(Clone, Debug)]
pub struct RelativeTransitivity {
    pub word: ElementaryWord,
    /// The excision ring `R (+) I`.
    pub excision: Ring,
    pub lifted: Vec<Elem>,
    /// `eps_1` over the excision ring.
    pub excision_word: ElementaryWord,
    /// `pi(eps_1)` over `R`; it fixes `e_1`.
    pub projected: ElementaryWord,
    /// `eps_1 gamma(pi(eps_1))^-1` as conjugates over the excision ring.
    pub corrected: ElementaryWord,
}

impl RelativeTransitivity {
    pub fn to_json(&self) -> Value {
        let ex = &self.excision;
        json!({
            "word": self.word.letters_json(),
            "path": {
                "excision_ring": ex.descriptor().to_json(),
                "lifted": ex.format_row(&self.lifted),
                "excision_word": self.excision_word.letters_json(),
                "projected": self.projected.letters_json(),
                "corrected": self.corrected.letters_json(),
            },
        })
    }
}

fn split(ex: &Ring, lambda: &Elem) -> (Elem, Elem) {
    let base = ex.base().expect("excision base");
    let p = lambda.as_tuple();
    (Elem::Tuple(vec![p[0].clone(), base.zero()]), Elem::Tuple(vec![base.zero(), p[1].clone()]))
}

/// A word in conjugates of `I`-letters with `v eps = e_1` and `eps = 1` modulo `I`.
pub fn relative_transitivity(ring: &Ring, v: &[Elem], ideal: &Ideal, cfg: &OrbitConfig) -> Result<RelativeTransitivity> {
    if ideal.ring() != ring {
        return Err(Error::MixedRings);
    }
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    if !um_rel_member(ring, v, ideal)? {
        return Err(Error::NotRelUnimodular);
    }
    let n = v.len();
    let ex = Ring::excision(ring, ideal.generators())?;
    let lifted = lift_row(&ex, v)?;

    let search = OrbitConfig { mode: Mode::E, ..cfg.clone() };
    let eps1 = match same_orbit(&ex, &lifted, &e1(&ex, n), &search)? {
        SameOrbit::Yes(w) => w,
        SameOrbit::No(why) | SameOrbit::Unknown(why) => {
            return Err(Error::BfsFailure(format!("no excision word to e1: {why}")))
        }
    };

    let mut projected = ElementaryWord::empty(ring, n);
    let mut corrected = ElementaryWord::empty(&ex, n);
    let mut prefix: Vec<Letter> = Vec::new();
    for letter in &eps1.letters {
        let Letter::Elem { i, j, lambda } = letter else {
            return Err(Error::BfsFailure("unexpected letter in excision word".into()));
        };
        let (r, x) = split(&ex, lambda);
        let r_base = ExcisionMap::Pi.apply(&ex, lambda)?;
        if !ring.is_zero(&r_base) {
            projected.push(Letter::elem(*i, *j, r_base));
            prefix.push(Letter::elem(*i, *j, r));
        }
        if !ex.is_zero(&x) {
            corrected.push(Letter::conj(prefix.clone(), Letter::elem(*i, *j, x)));
        }
    }

    let omega = |x: &Elem| ExcisionMap::Omega.apply(&ex, x).expect("excision element");
    let letters = corrected.letters.iter().map(|l| l.map_params(&omega)).collect();
    let word = ElementaryWord::new(ring, n, letters)?;

    if word.act(v)? != e1(ring, n) {
        return Err(Error::BfsFailure("pushed-down word does not reach e1".into()));
    }
    if !word.replay().congruent_to_identity(ideal)? || !word.is_relative_to(ideal)? {
        return Err(Error::BfsFailure("pushed-down word is not relative to the ideal".into()));
    }
    Ok(RelativeTransitivity { word, excision: ex, lifted, excision_word: eps1, projected, corrected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::row::enumerate_um;

    fn check(n_mod: u64, gen: i64, row: &str) -> RelativeTransitivity {
        let r = Ring::zmod(n_mod).unwrap();
        let i = Ideal::new(&r, vec![r.from_i64(gen)]);
        let v = r.parse_row(row).unwrap();
        let res = relative_transitivity(&r, &v, &i, &OrbitConfig::default()).unwrap();
        assert_eq!(res.word.act(&v).unwrap(), e1(&r, v.len()));
        assert!(res.word.replay().congruent_to_identity(&i).unwrap());
        assert_eq!(res.projected.act(&e1(&r, v.len())).unwrap(), e1(&r, v.len()));
        res
    }

    #[test]
    fn examples() {
        assert!(check(4, 2, "1,0,0").word.is_empty());
        assert!(!check(4, 2, "3,2,2").word.is_empty());
        check(6, 3, "4,3,0");
    }

    #[test]
    fn rejects_rows_outside_the_ideal() {
        let r = Ring::zmod(4).unwrap();
        let i = Ideal::new(&r, vec![r.from_i64(2)]);
        let v = r.parse_row("3,1,0").unwrap();
        assert!(matches!(relative_transitivity(&r, &v, &i, &OrbitConfig::default()), Err(Error::NotRelUnimodular)));
    }

    #[test]
    fn every_relative_row_over_z4() {
        let r = Ring::zmod(4).unwrap();
        let i = Ideal::new(&r, vec![r.from_i64(2)]);
        let mut count = 0;
        for v in enumerate_um(&r, 3).unwrap() {
            if um_rel_member(&r, &v, &i).unwrap() {
                let res = relative_transitivity(&r, &v, &i, &OrbitConfig::default()).unwrap();
                assert_eq!(res.word.act(&v).unwrap(), e1(&r, 3));
                count += 1;
            }
        }
        assert_eq!(count, 8);
    }
}
