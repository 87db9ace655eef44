//! Mennicke symbols and elementary-group membership of matrices.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::MatrixR;
use crate::orbit::{same_orbit, OrbitConfig, SameOrbit};
use crate::ring::{Elem, Ring};
use crate::row::{e1, lex_least_witness};
use crate::word::{ElementaryWord, Letter};

pub const DEFAULT_GROUP_CAP: usize = 10_000_000;

/// `ms(a, b)`: the class of `[[a, b, 0], [c, d, 0], [0, 0, 1]]` with `ad - bc = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MennickeClass {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
    pub matrix: MatrixR,
}

impl MennickeClass {
    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    pub fn to_json(&self) -> Value {
        let r = self.ring();
        json!({
            "a": r.to_json(&self.a),
            "b": r.to_json(&self.b),
            "c": r.to_json(&self.c),
            "d": r.to_json(&self.d),
            "matrix": self.matrix.to_strings(),
            "det": r.format(&self.matrix.det()),
        })
    }
}

/// Builds the completion from the lexicographically least witness `(x, y)` of
/// `(a, b)`: `d = x`, `c = -y`. Infinite rings use the solver's witness.
pub fn mennicke(ring: &Ring, a: &Elem, b: &Elem) -> Result<MennickeClass> {
    let row = [a.clone(), b.clone()];
    let witness = if ring.is_finite() { lex_least_witness(ring, &row)? } else { ring.solve_unimodular(&row)? };
    let [x, y]: [Elem; 2] = witness.ok_or(Error::NotUnimodular)?.try_into().expect("two coordinates");
    let c = ring.neg(&y);
    let d = x;
    let z = ring.zero();
    let matrix = MatrixR::from_rows(
        ring,
        vec![
            vec![a.clone(), b.clone(), z.clone()],
            vec![c.clone(), d.clone(), z.clone()],
            vec![z.clone(), z, ring.one()],
        ],
    )?;
    debug_assert!(ring.is_one(&matrix.det()));
    Ok(MennickeClass { a: a.clone(), b: b.clone(), c, d, matrix })
}

/// Outcome of an elementary-group membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// A word whose replay equals the matrix.
    Yes(ElementaryWord),
    No(String),
    Unknown(String),
}

impl Membership {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            Membership::Yes(w) => json!({"verdict": "yes", "certificate": w.letters_json()}),
            Membership::No(why) => json!({"verdict": "no", "reason": why}),
            Membership::Unknown(why) => json!({"verdict": "unknown", "reason": why}),
        }
    }
}

/// Decides `m in E_n(R)` for a finite ring.
///
/// Stage 1 moves the first row to `e_1` by an orbit search; failure there is a
/// proof of non-membership. The first column is then cleared by row
/// operations, leaving `1 (+) N`, and the procedure recurses on `N`. When the
/// recursion cannot certify `N`, membership of `1 (+) N` is settled by a
/// breadth-first enumeration of `E_n(R)` capped at `cap` matrices.
pub fn elementary_decomposition(m: &MatrixR, cap: usize) -> Result<Membership> {
    let ring = m.ring();
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    if !ring.is_one(&m.det()) {
        return Ok(Membership::No("determinant is not 1".into()));
    }
    let result = decompose(m, cap)?;
    if let Membership::Yes(w) = &result {
        if w.replay() != *m {
            return Err(Error::CertificateInvalid("replay mismatch in membership certificate".into()));
        }
    }
    Ok(result)
}

fn decompose(m: &MatrixR, cap: usize) -> Result<Membership> {
    let ring = m.ring();
    let n = m.size();
    if n == 1 {
        return Ok(if ring.is_one(m.get(0, 0)) {
            Membership::Yes(ElementaryWord::empty(ring, 1))
        } else {
            Membership::No("1x1 matrix other than 1".into())
        });
    }
    let first = m.row(0);
    let target = e1(ring, n);
    let cfg = OrbitConfig { node_cap: cap.min(crate::orbit::DEFAULT_NODE_CAP), ..Default::default() };
    let eps = match same_orbit(ring, &first, &target, &cfg)? {
        SameOrbit::Yes(w) => w,
        SameOrbit::No(why) => return Ok(Membership::No(format!("first row is not in the orbit of e1 ({why})"))),
        SameOrbit::Unknown(why) => return Ok(Membership::Unknown(why)),
    };
    let mut m1 = m.mul(&eps.replay())?;
    let mut clear = Vec::new();
    for r in 1..n {
        let c = m1.get(r, 0).clone();
        if !ring.is_zero(&c) {
            m1.row_op(r, 0, &ring.neg(&c));
            clear.push(Letter::elem(r + 1, 1, c));
        }
    }
    let sub = MatrixR::from_rows(ring, (1..n).map(|r| m1.row(r)[1..].to_vec()).collect())?;
    let tail = match decompose(&sub, cap)? {
        Membership::Yes(eta) => eta.letters.iter().map(|l| l.shift(1)).collect::<Vec<_>>(),
        _ => {
            return group_search(&m1, cap).map(|res| match res {
                Membership::Yes(w) => Membership::Yes(assemble(ring, n, clear, w.letters, &eps)),
                other => other,
            })
        }
    };
    Ok(Membership::Yes(assemble(ring, n, clear, tail, &eps)))
}

/// `m = L^-1 (1 (+) N) eps^-1` as a word.
fn assemble(ring: &Ring, n: usize, clear: Vec<Letter>, middle: Vec<Letter>, eps: &ElementaryWord) -> ElementaryWord {
    let mut letters = clear;
    letters.extend(middle);
    letters.extend(eps.inverse().letters);
    ElementaryWord { ring: ring.clone(), n, letters }
}

/// Breadth-first enumeration of `E_n(R)` from the identity until `target` appears.
fn group_search(target: &MatrixR, cap: usize) -> Result<Membership> {
    let ring = target.ring();
    let n = target.size();
    let els = ring.elements()?;
    let size = els.len();
    if size > u16::MAX as usize {
        return Ok(Membership::Unknown("ring too large for group enumeration".into()));
    }
    let code = |x: &Elem| ring.index_of(x).expect("canonical element") as u16;
    let add: Vec<u16> = (0..size * size).map(|k| code(&ring.add(&els[k / size], &els[k % size]))).collect();
    let mul: Vec<u16> = (0..size * size).map(|k| code(&ring.mul(&els[k / size], &els[k % size]))).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for l in 1..size {
                    gens.push((i, j, l));
                }
            }
        }
    }
    let encode = |m: &MatrixR| -> Vec<u16> { (0..n * n).map(|k| code(m.get(k / n, k % n))).collect() };
    let start = encode(&MatrixR::identity(ring, n));
    let goal = encode(target);
    let mut nodes = vec![start.clone()];
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
    let mut index: HashMap<Vec<u16>, u32> = HashMap::from([(start, 0)]);
    let mut found = (nodes[0] == goal).then_some(0usize);
    let mut head = 0;
    while found.is_none() && head < nodes.len() {
        let cur = nodes[head].clone();
        for (g, &(i, j, l)) in gens.iter().enumerate() {
            let mut next = cur.clone();
            for r in 0..n {
                let prod = mul[l * size + next[r * n + i] as usize];
                next[r * n + j] = add[next[r * n + j] as usize * size + prod as usize];
            }
            if index.contains_key(&next) {
                continue;
            }
            if nodes.len() >= cap {
                return Ok(Membership::Unknown(format!("group enumeration cap {cap} reached")));
            }
            index.insert(next.clone(), nodes.len() as u32);
            parent.push((head as u32, g as u32));
            if next == goal {
                found = Some(nodes.len());
            }
            nodes.push(next);
            if found.is_some() {
                break;
            }
        }
        head += 1;
    }
    let Some(mut k) = found else {
        return Ok(Membership::No(format!("exhaustive enumeration of {} group elements", nodes.len())));
    };
    let mut letters = Vec::new();
    while k != 0 {
        let (p, g) = parent[k];
        let (i, j, l) = gens[g as usize];
        letters.push(Letter::elem(i + 1, j + 1, els[l].clone()));
        k = p as usize;
    }
    letters.reverse();
    Ok(Membership::Yes(ElementaryWord { ring: ring.clone(), n, letters }))
}

/// Whether `m1 m2^-1` lies in `E_3(R)`; a `Yes` word replays to `m1 m2^-1`.
pub fn mennicke_equal(m1: &MennickeClass, m2: &MennickeClass, cap: usize) -> Result<Membership> {
    if m1.ring() != m2.ring() {
        return Err(Error::MixedRings);
    }
    if !m1.ring().is_finite() {
        return Err(Error::InfiniteRing);
    }
    if m1 == m2 {
        return Ok(Membership::Yes(ElementaryWord::empty(m1.ring(), 3)));
    }
    let inv = m2.matrix.inverse().expect("determinant one");
    elementary_decomposition(&m1.matrix.mul(&inv)?, cap)
}

/// Outcome of the first-row test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FirstRowTest {
    /// A word carrying `e_1 sigma` to `e_1`.
    Yes(ElementaryWord),
    Unknown(String),
}

/// Tests `[e_1 sigma] = [e_1]`. A supplied word must replay to `sigma (+) I_j`.
pub fn first_row_orbit_test(
    sigma: &MatrixR,
    stabilized: Option<&ElementaryWord>,
    cfg: &OrbitConfig,
) -> Result<FirstRowTest> {
    let ring = sigma.ring();
    if !ring.is_one(&sigma.det()) {
        return Err(Error::HypothesisFailed("determinant is not 1".into()));
    }
    if let Some(w) = stabilized {
        if w.n < sigma.size() || w.replay() != sigma.stabilize(w.n - sigma.size()) {
            return Err(Error::CertificateInvalid("replay mismatch: word does not stabilize sigma".into()));
        }
    }
    let first = sigma.row(0);
    match same_orbit(ring, &first, &e1(ring, sigma.size()), cfg) {
        Ok(SameOrbit::Yes(w)) => Ok(FirstRowTest::Yes(w)),
        Ok(SameOrbit::No(why)) | Ok(SameOrbit::Unknown(why)) => Ok(FirstRowTest::Unknown(why)),
        Err(Error::BudgetExceeded(c)) => Err(Error::BudgetExceeded(c)),
        Err(e) => Err(e),
    }
}
