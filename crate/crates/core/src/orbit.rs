//! Orbits of rows under elementary, symplectic and relative groups.
//!
//! Breadth-first search records a parent pointer per discovered row, so every
//! member comes with a replayable word. Frontier expansion runs in parallel;
//! results are merged in frontier order and then letter order, which makes the
//! discovery order (and every certificate) independent of scheduling.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::MatrixR;
use crate::ring::{Elem, Ideal, Ring};
use crate::row::{e1, um_rel_member};
use crate::word::{apply_op, ElementaryWord, Letter};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;
pub const DEFAULT_CONJ_DEPTH: usize = 2;

/// Which group acts.
#[derive(Clone, Debug)]
pub enum Mode {
    /// `E_n(R)`.
    E,
    /// `E_n(R, I)`, generated by conjugates of `e_ij(x)`, `x` in `I`.
    ERel(Ideal),
    /// `ESp_2m(R)`.
    ESp,
    /// `ESp_2m(R, I)`.
    ESpRel(Ideal),
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::E => "E",
            Mode::ERel(_) => "E_rel",
            Mode::ESp => "ESp",
            Mode::ESpRel(_) => "ESp_rel",
        }
    }

    pub fn ideal(&self) -> Option<&Ideal> {
        match self {
            Mode::ERel(i) | Mode::ESpRel(i) => Some(i),
            _ => None,
        }
    }

    fn symplectic(&self) -> bool {
        matches!(self, Mode::ESp | Mode::ESpRel(_))
    }
}

/// Parameters allowed in generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generators {
    /// Every ring element.
    Full,
    /// Only the listed elements.
    Restricted(Vec<Elem>),
    /// No generators: every orbit is a point.
    Empty,
}

#[derive(Clone, Debug)]
pub struct OrbitConfig {
    pub mode: Mode,
    pub generators: Generators,
    /// Maximum number of rows discovered before giving up.
    pub node_cap: usize,
    /// Maximum length of conjugating words in relative modes.
    pub conj_depth: usize,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            mode: Mode::E,
            generators: Generators::Full,
            node_cap: DEFAULT_NODE_CAP,
            conj_depth: DEFAULT_CONJ_DEPTH,
        }
    }
}

impl OrbitConfig {
    pub fn with_mode(mode: Mode) -> Self {
        OrbitConfig { mode, ..Default::default() }
    }
}

fn parameters(ring: &Ring, gens: &Generators) -> Result<Vec<Elem>> {
    let mut out: Vec<Elem> = match gens {
        Generators::Full => ring.elements()?.to_vec(),
        Generators::Restricted(list) => list.clone(),
        Generators::Empty => Vec::new(),
    };
    out.retain(|x| !ring.is_zero(x));
    let mut seen = HashSet::new();
    out.retain(|x| seen.insert(x.clone()));
    Ok(out)
}

fn plain_letters(n: usize, params: &[Elem], symplectic: bool) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for x in params {
                out.push(if symplectic { Letter::symp(i, j, x.clone()) } else { Letter::elem(i, j, x.clone()) });
            }
        }
    }
    out
}

/// Generating letters for an orbit search, deduplicated by matrix in relative modes.
pub fn generator_letters(ring: &Ring, n: usize, cfg: &OrbitConfig) -> Result<Vec<Letter>> {
    if cfg.mode.symplectic() && n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    let params = parameters(ring, &cfg.generators)?;
    let symplectic = cfg.mode.symplectic();
    let Some(ideal) = cfg.mode.ideal() else {
        return Ok(plain_letters(n, &params, symplectic));
    };
    let mut core_params = Vec::new();
    for x in &params {
        if ideal.contains(x)? {
            core_params.push(x.clone());
        }
    }
    let cores = plain_letters(n, &core_params, symplectic);
    if cores.is_empty() {
        return Ok(Vec::new());
    }
    // conjugators: words of length <= depth over the full generating set
    let base = plain_letters(n, &params, symplectic);
    let mut conj_words: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut seen: HashSet<MatrixR> = HashSet::from([MatrixR::identity(ring, n)]);
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..cfg.conj_depth {
        let mut next = Vec::new();
        for w in &layer {
            for l in &base {
                let mut cand = w.clone();
                cand.push(l.clone());
                let m = ElementaryWord { ring: ring.clone(), n, letters: cand.clone() }.replay();
                if seen.insert(m) {
                    next.push(cand);
                }
            }
        }
        conj_words.extend(next.iter().cloned());
        layer = next;
    }
    let mut letters = Vec::new();
    let mut seen: HashSet<MatrixR> = HashSet::new();
    for g in &conj_words {
        for core in &cores {
            let l = Letter::conj(g.clone(), core.clone());
            let m = ElementaryWord { ring: ring.clone(), n, letters: vec![l.clone()] }.replay();
            if !m.is_identity() && seen.insert(m) {
                letters.push(l);
            }
        }
    }
    Ok(letters)
}

/// An explored orbit with parent pointers.
#[derive(Clone, Debug)]
pub struct OrbitResult {
    pub ring: Ring,
    pub n: usize,
    pub mode: &'static str,
    /// Relative orbits are generated by a finite subset of the relative group.
    pub subset_mode: bool,
    letters: Vec<Letter>,
    members: Vec<Vec<Elem>>,
    parent: Vec<(u32, u32)>,
    index: HashMap<Vec<Elem>, usize>,
}

impl OrbitResult {
    /// Members in discovery order; the start row comes first.
    pub fn members(&self) -> &[Vec<Elem>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn start(&self) -> &[Elem] {
        &self.members[0]
    }

    pub fn index_of(&self, row: &[Elem]) -> Option<usize> {
        self.index.get(row).copied()
    }

    pub fn contains(&self, row: &[Elem]) -> bool {
        self.index.contains_key(row)
    }

    /// Word carrying the start row to member `k`.
    pub fn certificate(&self, mut k: usize) -> ElementaryWord {
        let mut letters = Vec::new();
        while k != 0 {
            let (p, l) = self.parent[k];
            letters.push(self.letters[l as usize].clone());
            k = p as usize;
        }
        letters.reverse();
        ElementaryWord { ring: self.ring.clone(), n: self.n, letters }
    }

    pub fn certificate_for(&self, row: &[Elem]) -> Option<ElementaryWord> {
        self.index_of(row).map(|k| self.certificate(k))
    }

    /// Sorted copy of the member set.
    pub fn sorted_members(&self) -> Vec<Vec<Elem>> {
        let mut v = self.members.clone();
        v.sort();
        v
    }

    pub fn to_json(&self) -> Value {
        let members: Vec<Value> = self
            .members
            .iter()
            .enumerate()
            .map(|(k, row)| {
                json!({
                    "row": row.iter().map(|x| self.ring.to_json(x)).collect::<Vec<_>>(),
                    "certificate": self.certificate(k).letters_json(),
                })
            })
            .collect();
        json!({
            "ring": self.ring.descriptor().to_json(),
            "n": self.n,
            "mode": self.mode,
            "subset_mode": self.subset_mode,
            "size": self.members.len(),
            "members": members,
        })
    }
}

fn bfs(ring: &Ring, start: &[Elem], cfg: &OrbitConfig, target: Option<&[Elem]>) -> Result<(OrbitResult, Option<usize>)> {
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    if start.is_empty() {
        return Err(Error::EmptyRow);
    }
    let n = start.len();
    if let Some(ideal) = cfg.mode.ideal() {
        if ideal.ring() != ring {
            return Err(Error::MixedRings);
        }
        if !um_rel_member(ring, start, ideal)? {
            return Err(Error::NotRelUnimodular);
        }
    }
    let letters = generator_letters(ring, n, cfg)?;
    let ops: Vec<Vec<(usize, usize, Elem)>> = letters
        .iter()
        .map(|l| {
            let mut v = Vec::new();
            l.push_ops(ring, &mut v);
            v
        })
        .collect();
    let mut members = vec![start.to_vec()];
    let mut parent = vec![(0u32, 0u32)];
    let mut index = HashMap::from([(start.to_vec(), 0usize)]);
    let mut found = (target == Some(start)).then_some(0);
    let mut lo = 0;
    while found.is_none() && lo < members.len() {
        let hi = members.len();
        let fresh: Vec<Vec<(u32, Vec<Elem>)>> = members[lo..hi]
            .par_iter()
            .map(|row| {
                let mut out = Vec::new();
                for (l, op) in ops.iter().enumerate() {
                    let mut v = row.clone();
                    for o in op {
                        apply_op(ring, &mut v, None, o);
                    }
                    if !index.contains_key(&v) {
                        out.push((l as u32, v));
                    }
                }
                out
            })
            .collect();
        for (offset, batch) in fresh.into_iter().enumerate() {
            for (l, v) in batch {
                if index.contains_key(&v) {
                    continue;
                }
                if members.len() >= cfg.node_cap {
                    return Err(Error::BudgetExceeded(cfg.node_cap));
                }
                let k = members.len();
                index.insert(v.clone(), k);
                parent.push(((lo + offset) as u32, l));
                if target == Some(v.as_slice()) && found.is_none() {
                    found = Some(k);
                }
                members.push(v);
            }
        }
        lo = hi;
    }
    let result = OrbitResult {
        ring: ring.clone(),
        n,
        mode: cfg.mode.name(),
        subset_mode: cfg.mode.ideal().is_some(),
        letters,
        members,
        parent,
        index,
    };
    Ok((result, found))
}

/// The full orbit of `v` with a certificate for every member.
pub fn orbit_bfs(ring: &Ring, v: &[Elem], cfg: &OrbitConfig) -> Result<OrbitResult> {
    Ok(bfs(ring, v, cfg, None)?.0)
}

/// Outcome of an orbit comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SameOrbit {
    /// A verified word carrying the first row to the second.
    Yes(ElementaryWord),
    /// Exhaustive search, or a precondition that separates the rows.
    No(String),
    Unknown(String),
}

impl SameOrbit {
    pub fn is_yes(&self) -> bool {
        matches!(self, SameOrbit::Yes(_))
    }

    pub fn word(&self) -> Option<&ElementaryWord> {
        match self {
            SameOrbit::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            SameOrbit::Yes(_) => "yes",
            SameOrbit::No(_) => "no",
            SameOrbit::Unknown(_) => "unknown",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            SameOrbit::Yes(w) => json!({"verdict": "yes", "certificate": w.letters_json()}),
            SameOrbit::No(why) => json!({"verdict": "no", "reason": why}),
            SameOrbit::Unknown(why) => json!({"verdict": "unknown", "reason": why}),
        }
    }
}

fn verified(word: ElementaryWord, v: &[Elem], w: &[Elem]) -> Result<SameOrbit> {
    let reached = word.act(v)?;
    if reached != w {
        return Err(Error::CertificateInvalid("replay mismatch in orbit certificate".into()));
    }
    Ok(SameOrbit::Yes(word))
}

/// Decides whether `w` lies in the orbit of `v`.
pub fn same_orbit(ring: &Ring, v: &[Elem], w: &[Elem], cfg: &OrbitConfig) -> Result<SameOrbit> {
    if v.len() != w.len() {
        return Err(Error::SizeMismatch { expected: v.len(), found: w.len() });
    }
    if v.is_empty() {
        return Err(Error::EmptyRow);
    }
    let (uv, uw) = (ring.is_unimodular(v)?, ring.is_unimodular(w)?);
    match (uv, uw) {
        (false, false) => return Err(Error::NotUnimodular),
        (true, false) | (false, true) => {
            return Ok(SameOrbit::No("exactly one of the rows is unimodular".into()))
        }
        _ => {}
    }
    if let Some(ideal) = cfg.mode.ideal() {
        let (rv, rw) = (um_rel_member(ring, v, ideal)?, um_rel_member(ring, w, ideal)?);
        if !rv && !rw {
            return Err(Error::NotRelUnimodular);
        }
        if rv != rw {
            return Ok(SameOrbit::No("exactly one of the rows is congruent to e1 modulo the ideal".into()));
        }
    }
    if v == w {
        return Ok(SameOrbit::Yes(ElementaryWord::empty(ring, v.len())));
    }
    if ring.is_finite() {
        return match bfs(ring, v, cfg, Some(w)) {
            Ok((result, Some(k))) => verified(result.certificate(k), v, w),
            Ok((result, None)) => {
                let how = if result.subset_mode { "subset" } else { "exhaustive" };
                if result.subset_mode {
                    Ok(SameOrbit::Unknown(format!("not reached by the {how} search of {} rows", result.len())))
                } else {
                    Ok(SameOrbit::No(format!("{how} search of {} rows", result.len())))
                }
            }
            Err(Error::BudgetExceeded(cap)) => Ok(SameOrbit::Unknown(format!("node cap {cap} reached"))),
            Err(e) => Err(e),
        };
    }
    if matches!(cfg.mode, Mode::E) && cfg.generators == Generators::Full {
        if let (Some(a), Some(b)) = (reduce_to_e1(ring, v)?, reduce_to_e1(ring, w)?) {
            return verified(a.compose(&b.inverse())?, v, w);
        }
    }
    Ok(SameOrbit::Unknown("infinite ring: heuristic reduction did not apply".into()))
}

/// Clears a row containing a unit entry to `e_1`.
pub fn unit_clear(ring: &Ring, v: &[Elem]) -> Option<ElementaryWord> {
    let n = v.len();
    let mut word = ElementaryWord::empty(ring, n);
    let mut row = v.to_vec();
    let push = |row: &mut Vec<Elem>, word: &mut ElementaryWord, i: usize, j: usize, lambda: Elem| {
        if !ring.is_zero(&lambda) {
            apply_op(ring, row, None, &(i, j, lambda.clone()));
            word.push(Letter::elem(i + 1, j + 1, lambda));
        }
    };
    if !ring.is_one(&row[0]) {
        if let Some(k) = (1..n).find(|&k| ring.is_unit(&row[k])) {
            // v_1 += u^-1 (1 - v_1) v_k
            let u_inv = ring.inverse(&row[k]).unwrap();
            let lambda = ring.mul(&u_inv, &ring.sub(&ring.one(), &row[0]));
            push(&mut row, &mut word, k, 0, lambda);
        } else {
            let u_inv = ring.inverse(&row[0])?;
            if n < 2 {
                return None;
            }
            // make v_2 = 1, then v_1 = 1
            let lambda = ring.mul(&u_inv, &ring.sub(&ring.one(), &row[1]));
            push(&mut row, &mut word, 0, 1, lambda);
            let lambda = ring.sub(&ring.one(), &row[0]);
            push(&mut row, &mut word, 1, 0, lambda);
        }
    }
    for j in 1..n {
        let lambda = ring.neg(&row[j]);
        push(&mut row, &mut word, 0, j, lambda);
    }
    debug_assert_eq!(row, e1(ring, n));
    Some(word)
}

/// Euclidean reduction over `Z` and `k[X]`: divide every entry by one of
/// least size until a unit appears, then clear.
pub fn euclid_reduce(ring: &Ring, v: &[Elem]) -> Option<ElementaryWord> {
    let n = v.len();
    let mut row = v.to_vec();
    let mut word = ElementaryWord::empty(ring, n);
    for _ in 0..100_000 {
        if row.iter().any(|x| ring.is_unit(x)) {
            let tail = unit_clear(ring, &row)?;
            return word.compose(&tail).ok();
        }
        let mut best: Option<(usize, num_bigint::BigInt)> = None;
        for (k, x) in row.iter().enumerate() {
            if let Some(size) = ring.euclid_norm(x) {
                if best.as_ref().is_none_or(|(_, s)| size < *s) {
                    best = Some((k, size));
                }
            }
        }
        let (m, _) = best?;
        let mut progress = false;
        for j in 0..n {
            if j == m || ring.is_zero(&row[j]) {
                continue;
            }
            let (q, _) = ring.euclid_divrem(&row[j], &row[m])?;
            if ring.is_zero(&q) {
                continue;
            }
            let lambda = ring.neg(&q);
            apply_op(ring, &mut row, None, &(m, j, lambda.clone()));
            word.push(Letter::elem(m + 1, j + 1, lambda));
            progress = true;
        }
        if !progress {
            return None;
        }
    }
    None
}

/// Word carrying `v` to `e_1`: unit clearing, Euclidean reduction, or BFS over finite rings.
pub fn reduce_to_e1(ring: &Ring, v: &[Elem]) -> Result<Option<ElementaryWord>> {
    let target = e1(ring, v.len());
    if v == target.as_slice() {
        return Ok(Some(ElementaryWord::empty(ring, v.len())));
    }
    if let Some(w) = unit_clear(ring, v) {
        return Ok(Some(w));
    }
    if let Some(w) = euclid_reduce(ring, v) {
        return Ok(Some(w));
    }
    if ring.is_finite() {
        if let (result, Some(k)) = bfs(ring, v, &OrbitConfig::default(), Some(&target))? {
            return Ok(Some(result.certificate(k)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::zmod(n).unwrap()
    }

    #[test]
    fn orbit_of_e1_over_z2() {
        let r = z(2);
        let o = orbit_bfs(&r, &e1(&r, 2), &OrbitConfig::default()).unwrap();
        assert_eq!(o.len(), 3);
        for (k, row) in o.members().iter().enumerate() {
            assert_eq!(&o.certificate(k).act(&e1(&r, 2)).unwrap(), row);
        }
    }

    #[test]
    fn orbit_of_e1_over_z4_in_rank_four() {
        let r = z(4);
        assert_eq!(orbit_bfs(&r, &e1(&r, 4), &OrbitConfig::default()).unwrap().len(), 240);
    }

    #[test]
    fn empty_generators_give_a_point() {
        let r = z(6);
        let cfg = OrbitConfig { generators: Generators::Empty, ..Default::default() };
        let v = r.parse_row("5,2,3").unwrap();
        let o = orbit_bfs(&r, &v, &cfg).unwrap();
        assert_eq!(o.members(), &[v]);
    }

    #[test]
    fn same_orbit_examples() {
        let r = z(6);
        let cfg = OrbitConfig::default();
        let v = r.parse_row("1,0,0").unwrap();
        assert!(same_orbit(&r, &v, &v, &cfg).unwrap().word().unwrap().is_empty());
        let w = r.parse_row("0,0,1").unwrap();
        assert!(same_orbit(&r, &v, &w, &cfg).unwrap().is_yes());
        let a = r.parse_row("1,0").unwrap();
        let b = r.parse_row("0,2").unwrap();
        assert!(matches!(same_orbit(&r, &a, &b, &cfg).unwrap(), SameOrbit::No(_)));
    }

    #[test]
    fn budget_gives_unknown() {
        let r = z(4);
        let cfg = OrbitConfig { node_cap: 5, ..Default::default() };
        let v = e1(&r, 4);
        let w = r.parse_row("3,3,3,3").unwrap();
        assert!(matches!(same_orbit(&r, &v, &w, &cfg).unwrap(), SameOrbit::Unknown(_)));
    }

    #[test]
    fn restricted_generators_still_reach_everything_over_z4() {
        let r = z(4);
        let cfg = OrbitConfig { generators: Generators::Restricted(vec![r.one()]), ..Default::default() };
        assert_eq!(orbit_bfs(&r, &e1(&r, 3), &cfg).unwrap().len(), enumerate(&r, 3));
    }

    fn enumerate(r: &Ring, n: usize) -> usize {
        crate::row::enumerate_um(r, n).unwrap().len()
    }

    #[test]
    fn relative_orbit_stays_congruent() {
        let r = z(4);
        let ideal = Ideal::new(&r, vec![r.from_i64(2)]);
        let cfg = OrbitConfig::with_mode(Mode::ERel(ideal.clone()));
        let v = r.parse_row("3,2,2").unwrap();
        let o = orbit_bfs(&r, &v, &cfg).unwrap();
        assert!(o.subset_mode);
        assert!(o.contains(&e1(&r, 3)));
        for (k, row) in o.members().iter().enumerate() {
            assert!(um_rel_member(&r, row, &ideal).unwrap());
            let word = o.certificate(k);
            assert!(word.replay().congruent_to_identity(&ideal).unwrap());
            assert!(word.is_relative_to(&ideal).unwrap());
        }
    }

    #[test]
    fn euclid_over_f5x() {
        let r = Ring::parse_descriptor("F5[X]").unwrap();
        let v = r.parse_row("X^2+1, X^3+2X, X+4").unwrap();
        let w = reduce_to_e1(&r, &v).unwrap().unwrap();
        assert_eq!(w.act(&v).unwrap(), e1(&r, 3));
    }

    #[test]
    fn euclid_over_integers() {
        let r = Ring::integers();
        let v = r.parse_row("6,10,15").unwrap();
        let w = reduce_to_e1(&r, &v).unwrap().unwrap();
        assert_eq!(w.act(&v).unwrap(), e1(&r, 3));
        let u = r.parse_row("35,-21,15").unwrap();
        assert!(same_orbit(&r, &v, &u, &OrbitConfig::default()).unwrap().is_yes());
    }

    #[test]
    fn unit_clear_first_position() {
        let r = z(7);
        let v = r.parse_row("3,4,5").unwrap();
        assert_eq!(unit_clear(&r, &v).unwrap().act(&v).unwrap(), e1(&r, 3));
        let v = r.parse_row("3,0").unwrap();
        assert_eq!(unit_clear(&r, &v).unwrap().act(&v).unwrap(), e1(&r, 2));
    }
}
