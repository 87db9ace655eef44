//! Elementary words: replayable certificates built from elementary,
//! symplectic elementary and conjugated generators.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::matrix::{check_pair, MatrixR};
use crate::ring::{Elem, Ideal, Ring};

/// `sigma(2i) = 2i - 1`, `sigma(2i - 1) = 2i` on 1-based indices.
pub(crate) fn sigma1(k: usize) -> usize {
    if k.is_multiple_of(2) {
        k - 1
    } else {
        k + 1
    }
}

/// One generator. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `e_ij(lambda) = I + lambda E_ij`.
    Elem { i: usize, j: usize, lambda: Elem },
    /// The symplectic elementary matrix `se_ij(z)`.
    Symp { i: usize, j: usize, z: Elem },
    /// `G core G^-1`, where `G` is the replay of `g`.
    Conj { g: Vec<Letter>, core: Box<Letter> },
}

impl Letter {
    pub fn elem(i: usize, j: usize, lambda: Elem) -> Letter {
        Letter::Elem { i, j, lambda }
    }

    pub fn symp(i: usize, j: usize, z: Elem) -> Letter {
        Letter::Symp { i, j, z }
    }

    pub fn conj(g: Vec<Letter>, core: Letter) -> Letter {
        Letter::Conj { g, core: Box::new(core) }
    }

    pub fn inverse(&self, ring: &Ring) -> Letter {
        match self {
            Letter::Elem { i, j, lambda } => Letter::elem(*i, *j, ring.neg(lambda)),
            Letter::Symp { i, j, z } => Letter::symp(*i, *j, ring.neg(z)),
            Letter::Conj { g, core } => Letter::conj(g.clone(), core.inverse(ring)),
        }
    }

    /// Parameter of an elementary or symplectic letter, or of the core of a conjugate.
    pub fn parameter(&self) -> &Elem {
        match self {
            Letter::Elem { lambda, .. } => lambda,
            Letter::Symp { z, .. } => z,
            Letter::Conj { core, .. } => core.parameter(),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            Letter::Elem { i, j, .. } => check_pair(n, *i, *j),
            Letter::Symp { i, j, .. } => {
                if n % 2 == 1 {
                    return Err(Error::OddSize(n));
                }
                check_pair(n, *i, *j)
            }
            Letter::Conj { g, core } => {
                if matches!(**core, Letter::Conj { .. }) {
                    return Err(Error::Parse("nested conjugate core".into()));
                }
                g.iter().try_for_each(|l| l.validate(n))?;
                core.validate(n)
            }
        }
    }

    /// Appends the letter as right-multiplied elementary operations `(i, j, lambda)`, 0-based.
    pub(crate) fn push_ops(&self, ring: &Ring, out: &mut Vec<(usize, usize, Elem)>) {
        match self {
            Letter::Elem { i, j, lambda } => {
                if !ring.is_zero(lambda) {
                    out.push((i - 1, j - 1, lambda.clone()))
                }
            }
            Letter::Symp { i, j, z } => {
                if ring.is_zero(z) {
                    return;
                }
                out.push((i - 1, j - 1, z.clone()));
                if *i != sigma1(*j) {
                    // -(-1)^(i+j) z on E_{sigma j, sigma i}
                    let second = if (i + j) % 2 == 0 { ring.neg(z) } else { z.clone() };
                    out.push((sigma1(*j) - 1, sigma1(*i) - 1, second));
                }
            }
            Letter::Conj { g, core } => {
                let mut conj = Vec::new();
                for l in g {
                    l.push_ops(ring, &mut conj);
                }
                out.extend(conj.iter().cloned());
                core.push_ops(ring, out);
                out.extend(conj.into_iter().rev().map(|(i, j, l)| (i, j, ring.neg(&l))));
            }
        }
    }

    /// Applies `f` to every parameter, including conjugator letters.
    pub fn map_params(&self, f: &dyn Fn(&Elem) -> Elem) -> Letter {
        match self {
            Letter::Elem { i, j, lambda } => Letter::elem(*i, *j, f(lambda)),
            Letter::Symp { i, j, z } => Letter::symp(*i, *j, f(z)),
            Letter::Conj { g, core } => Letter::conj(g.iter().map(|l| l.map_params(f)).collect(), core.map_params(f)),
        }
    }

    /// Shifts all indices by `k` (embedding into a lower-right block).
    pub fn shift(&self, k: usize) -> Letter {
        match self {
            Letter::Elem { i, j, lambda } => Letter::elem(i + k, j + k, lambda.clone()),
            Letter::Symp { i, j, z } => Letter::symp(i + k, j + k, z.clone()),
            Letter::Conj { g, core } => Letter::conj(g.iter().map(|l| l.shift(k)).collect(), core.shift(k)),
        }
    }

    pub fn to_json(&self, ring: &Ring) -> Value {
        match self {
            Letter::Elem { i, j, lambda } => json!({"kind": "elem", "i": i, "j": j, "lambda": ring.to_json(lambda)}),
            Letter::Symp { i, j, z } => json!({"kind": "symp", "i": i, "j": j, "z": ring.to_json(z)}),
            Letter::Conj { g, core } => {
                let (i, j, x, kind) = match &**core {
                    Letter::Elem { i, j, lambda } => (i, j, lambda, None),
                    Letter::Symp { i, j, z } => (i, j, z, Some("symp")),
                    Letter::Conj { .. } => unreachable!("validated"),
                };
                let mut obj = Map::new();
                obj.insert("kind".into(), json!("conj"));
                obj.insert("g".into(), Value::Array(g.iter().map(|l| l.to_json(ring)).collect()));
                obj.insert("i".into(), json!(i));
                obj.insert("j".into(), json!(j));
                obj.insert("x".into(), ring.to_json(x));
                if let Some(k) = kind {
                    obj.insert("core".into(), json!(k));
                }
                Value::Object(obj)
            }
        }
    }

    pub fn from_json(ring: &Ring, v: &Value) -> Result<Letter> {
        let bad = |what: &str| Error::Parse(format!("letter {v}: {what}"));
        let index = |key: &str| -> Result<usize> {
            v.get(key).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad(&format!("missing {key}")))
        };
        let param = |key: &str| -> Result<Elem> { ring.from_json(v.get(key).ok_or_else(|| bad(&format!("missing {key}")))?) };
        match v.get("kind").and_then(Value::as_str) {
            Some("elem") => Ok(Letter::elem(index("i")?, index("j")?, param("lambda")?)),
            Some("symp") => Ok(Letter::symp(index("i")?, index("j")?, param("z")?)),
            Some("conj") => {
                let g = v
                    .get("g")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("missing g"))?
                    .iter()
                    .map(|l| Letter::from_json(ring, l))
                    .collect::<Result<Vec<_>>>()?;
                let (i, j, x) = (index("i")?, index("j")?, param("x")?);
                let core = match v.get("core").and_then(Value::as_str) {
                    None | Some("elem") => Letter::elem(i, j, x),
                    Some("symp") => Letter::symp(i, j, x),
                    Some(other) => return Err(bad(&format!("unknown core {other}"))),
                };
                Ok(Letter::conj(g, core))
            }
            _ => Err(bad("unknown kind")),
        }
    }
}

/// Applies one right-multiplied elementary operation to a row, and the
/// inverse-transpose operation to its witness.
#[inline]
pub(crate) fn apply_op(ring: &Ring, row: &mut [Elem], witness: Option<&mut [Elem]>, op: &(usize, usize, Elem)) {
    let (i, j, lambda) = op;
    row[*j] = ring.add(&row[*j], &ring.mul(lambda, &row[*i]));
    if let Some(b) = witness {
        b[*i] = ring.sub(&b[*i], &ring.mul(lambda, &b[*j]));
    }
}

/// A sequence of letters acting on rows of length `n` by right multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryWord {
    pub ring: Ring,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl ElementaryWord {
    pub fn empty(ring: &Ring, n: usize) -> ElementaryWord {
        ElementaryWord { ring: ring.clone(), n, letters: Vec::new() }
    }

    pub fn new(ring: &Ring, n: usize, letters: Vec<Letter>) -> Result<ElementaryWord> {
        let w = ElementaryWord { ring: ring.clone(), n, letters };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        self.letters.iter().try_for_each(|l| l.validate(self.n))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub(crate) fn ops(&self) -> Vec<(usize, usize, Elem)> {
        let mut out = Vec::new();
        for l in &self.letters {
            l.push_ops(&self.ring, &mut out);
        }
        out
    }

    fn check_row(&self, row: &[Elem]) -> Result<()> {
        if row.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: row.len() });
        }
        Ok(())
    }

    /// `row * replay(self)`.
    pub fn act(&self, row: &[Elem]) -> Result<Vec<Elem>> {
        self.check_row(row)?;
        let mut v = row.to_vec();
        for op in self.ops() {
            apply_op(&self.ring, &mut v, None, &op);
        }
        Ok(v)
    }

    /// Acts on a row and transports its witness so that `sum v_i b_i` is preserved.
    pub fn act_with_witness(&self, row: &[Elem], witness: &[Elem]) -> Result<(Vec<Elem>, Vec<Elem>)> {
        self.check_row(row)?;
        self.check_row(witness)?;
        let mut v = row.to_vec();
        let mut b = witness.to_vec();
        for op in self.ops() {
            apply_op(&self.ring, &mut v, Some(&mut b), &op);
        }
        Ok((v, b))
    }

    /// The product of the letters' matrices, left to right.
    pub fn replay(&self) -> MatrixR {
        let mut m = MatrixR::identity(&self.ring, self.n);
        for (i, j, lambda) in self.ops() {
            m.col_op(i, j, &lambda);
        }
        m
    }

    pub fn inverse(&self) -> ElementaryWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse(&self.ring)).collect();
        ElementaryWord { ring: self.ring.clone(), n: self.n, letters }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &ElementaryWord) -> Result<ElementaryWord> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(ElementaryWord { ring: self.ring.clone(), n: self.n, letters })
    }

    /// Whether every letter is a conjugate whose core parameter lies in `ideal`.
    pub fn is_relative_to(&self, ideal: &Ideal) -> Result<bool> {
        for l in &self.letters {
            match l {
                Letter::Conj { core, .. } => {
                    if !ideal.contains(core.parameter())? {
                        return Ok(false);
                    }
                }
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.descriptor().to_json(),
            "n": self.n,
            "letters": self.letters.iter().map(|l| l.to_json(&self.ring)).collect::<Vec<_>>(),
        })
    }

    pub fn letters_json(&self) -> Value {
        Value::Array(self.letters.iter().map(|l| l.to_json(&self.ring)).collect())
    }

    pub fn from_json(v: &Value) -> Result<ElementaryWord> {
        let ring = Ring::new(crate::ring::RingDescriptor::from_json(
            v.get("ring").ok_or_else(|| Error::Parse("certificate without ring".into()))?,
        )?)?;
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("certificate without n".into()))?
            as usize;
        let letters = v
            .get("letters")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("certificate without letters".into()))?
            .iter()
            .map(|l| Letter::from_json(&ring, l))
            .collect::<Result<Vec<_>>>()?;
        ElementaryWord::new(&ring, n, letters)
    }
}

/// A word together with the row it starts from and the row it claims to reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub word: ElementaryWord,
    pub source: Vec<Elem>,
    pub target: Vec<Elem>,
}

impl Certificate {
    pub fn new(word: ElementaryWord, source: Vec<Elem>, target: Vec<Elem>) -> Certificate {
        Certificate { word, source, target }
    }

    /// Replays the word on the source row and compares with the target.
    pub fn verify(&self) -> Result<()> {
        let reached = self.word.act(&self.source)?;
        if reached == self.target {
            Ok(())
        } else {
            Err(Error::CertificateInvalid(format!(
                "replay mismatch: reached {:?}, claimed {:?}",
                self.word.ring.format_row(&reached),
                self.word.ring.format_row(&self.target)
            )))
        }
    }

    pub fn to_json(&self) -> Value {
        let ring = &self.word.ring;
        let mut v = self.word.to_json();
        v["source"] = Value::Array(self.source.iter().map(|x| ring.to_json(x)).collect());
        v["target"] = Value::Array(self.target.iter().map(|x| ring.to_json(x)).collect());
        v
    }

    pub fn from_json(v: &Value) -> Result<Certificate> {
        let word = ElementaryWord::from_json(v)?;
        let row = |key: &str| -> Result<Vec<Elem>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("certificate without {key}")))?
                .iter()
                .map(|x| word.ring.from_json(x))
                .collect()
        };
        Ok(Certificate { source: row("source")?, target: row("target")?, word })
    }
}
