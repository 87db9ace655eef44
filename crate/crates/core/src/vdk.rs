//! The van der Kallen product on `Um_n(R)/E_n(R)` and orbit group tables.
//!
//! For representatives with a common tail,
//! `[(x_1, v_2, .., v_n)] * [(v_1, v_2, .., v_n)] = [(v_1(x_1 + w_1) - 1, (x_1 + w_1) v_2, v_3, .., v_n)]`
//! where `v_1 w_1 = 1` modulo `(v_2, .., v_n)`. The structure is called nice
//! when the product is always `[(x_1 v_1, v_2, .., v_n)]`.

use std::collections::HashMap;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::orbit::{orbit_bfs, same_orbit, OrbitConfig, OrbitResult, SameOrbit};
use crate::ring::{Elem, Ideal, Ring, RingDescriptor};
use crate::row::{e1, enumerate_um, lex_least_witness};
use crate::word::{ElementaryWord, Letter};

// ---- stable range -----------------------------------------------------------

#[derive(Clone, Debug)]
pub struct StableRangeReport {
    pub n: usize,
    pub holds: bool,
    /// Rows of length `n + 1` admitting no shortening (at most ten are kept).
    pub failures: Vec<Vec<Elem>>,
}

/// Decides `sr_n(R)`: every unimodular `(a_1, .., a_{n+1})` admits `c_i` with
/// `(a_1 + c_1 a_{n+1}, .., a_n + c_n a_{n+1})` unimodular.
pub fn stable_range(ring: &Ring, n: usize) -> Result<StableRangeReport> {
    if n == 0 {
        return Err(Error::HypothesisFailed("stable range is defined for n >= 1".into()));
    }
    let els = ring.elements()?;
    let mut failures = Vec::new();
    let mut holds = true;
    for row in enumerate_um(ring, n + 1)? {
        if !shortens(ring, els, &row)? {
            holds = false;
            if failures.len() < 10 {
                failures.push(row);
            }
        }
    }
    Ok(StableRangeReport { n, holds, failures })
}

fn shortens(ring: &Ring, els: &[Elem], row: &[Elem]) -> Result<bool> {
    let n = row.len() - 1;
    let last = &row[n];
    let mut idx = vec![0usize; n];
    loop {
        let short: Vec<Elem> =
            (0..n).map(|k| ring.add(&row[k], &ring.mul(&els[idx[k]], last))).collect();
        if ring.is_unimodular(&short)? {
            return Ok(true);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(false);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < els.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The least `n` with `sr_n(R)`.
pub fn sr(ring: &Ring) -> Result<usize> {
    for n in 1..=6 {
        if stable_range(ring, n)?.holds {
            return Ok(n);
        }
    }
    Err(Error::HypothesisFailed("stable range exceeds 6".into()))
}

/// `sr(R) - 1`.
pub fn sdim(ring: &Ring) -> Result<usize> {
    Ok(sr(ring)? - 1)
}

// ---- common tails and the product ---------------------------------------------

/// Representatives of `[v]` and `[w]` sharing coordinates `2..n`, with words
/// carrying `v` (resp. `w`) to them.
#[derive(Clone, Debug)]
pub struct CommonTail {
    pub v_rep: Vec<Elem>,
    pub w_rep: Vec<Elem>,
    pub v_cert: ElementaryWord,
    pub w_cert: ElementaryWord,
}

/// Scans the orbit of `w` in discovery order and pairs the first member whose
/// tail occurs in the orbit of `v` with the earliest such member of that orbit.
pub fn common_tail_from_orbits(ov: &OrbitResult, ow: &OrbitResult) -> Result<CommonTail> {
    let mut first_by_tail: HashMap<&[Elem], usize> = HashMap::new();
    for (k, row) in ov.members().iter().enumerate() {
        first_by_tail.entry(&row[1..]).or_insert(k);
    }
    for (kw, row) in ow.members().iter().enumerate() {
        if let Some(&kv) = first_by_tail.get(&row[1..]) {
            return Ok(CommonTail {
                v_rep: ov.members()[kv].clone(),
                w_rep: row.clone(),
                v_cert: ov.certificate(kv),
                w_cert: ow.certificate(kw),
            });
        }
    }
    Err(Error::BfsFailure("the orbits share no tail".into()))
}

pub fn common_tail_reps(ring: &Ring, v: &[Elem], w: &[Elem], cfg: &OrbitConfig) -> Result<CommonTail> {
    if v.len() != w.len() {
        return Err(Error::SizeMismatch { expected: v.len(), found: w.len() });
    }
    if v == w {
        let empty = ElementaryWord::empty(ring, v.len());
        return Ok(CommonTail { v_rep: v.to_vec(), w_rep: w.to_vec(), v_cert: empty.clone(), w_cert: empty });
    }
    for row in [v, w] {
        if !ring.is_unimodular(row)? {
            return Err(Error::NotUnimodular);
        }
    }
    let ov = orbit_bfs(ring, v, cfg)?;
    let ow = orbit_bfs(ring, w, cfg)?;
    common_tail_from_orbits(&ov, &ow)
}

/// The `w_1` used by the product: first coordinate of the lexicographically
/// least witness of `w_rep` (of the solver's witness over infinite rings).
pub fn choose_w1(ring: &Ring, w_rep: &[Elem]) -> Result<Elem> {
    let witness = if ring.is_finite() { lex_least_witness(ring, w_rep)? } else { ring.solve_unimodular(w_rep)? };
    witness.map(|b| b[0].clone()).ok_or(Error::NoModularInverse)
}

/// Every `w_1` with `v_1 w_1 = 1` modulo the tail, in element order.
pub fn all_w1_choices(ring: &Ring, w_rep: &[Elem]) -> Result<Vec<Elem>> {
    let tail = Ideal::of_row(ring, &w_rep[1..]);
    all_w1_in(ring, &w_rep[0], &tail)
}

fn all_w1_in(ring: &Ring, v1: &Elem, tail: &Ideal) -> Result<Vec<Elem>> {
    let mut out = Vec::new();
    for x in ring.elements()? {
        if tail.contains(&ring.sub(&ring.one(), &ring.mul(v1, x)))? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRow {
    pub row: Vec<Elem>,
    pub witness: Vec<Elem>,
    pub w1: Elem,
}

fn check_tails(v_rep: &[Elem], w_rep: &[Elem]) -> Result<()> {
    if v_rep.len() != w_rep.len() {
        return Err(Error::SizeMismatch { expected: v_rep.len(), found: w_rep.len() });
    }
    if v_rep.len() < 2 {
        return Err(Error::SizeMismatch { expected: 2, found: v_rep.len() });
    }
    if v_rep[1..] != w_rep[1..] {
        return Err(Error::TailMismatch);
    }
    Ok(())
}

/// The product row for a given `w_1`, without validating the choice.
pub(crate) fn product_formula(ring: &Ring, v_rep: &[Elem], w_rep: &[Elem], w1: &Elem) -> Vec<Elem> {
    let s = ring.add(&v_rep[0], w1);
    let mut row = w_rep.to_vec();
    row[0] = ring.sub(&ring.mul(&w_rep[0], &s), &ring.one());
    row[1] = ring.mul(&s, &w_rep[1]);
    row
}

/// `[v_rep] * [w_rep]` with the canonical choice of `w_1`.
pub fn vdk_product(ring: &Ring, v_rep: &[Elem], w_rep: &[Elem]) -> Result<ProductRow> {
    check_tails(v_rep, w_rep)?;
    let w1 = choose_w1(ring, w_rep)?;
    vdk_product_with(ring, v_rep, w_rep, &w1)
}

/// The product for an explicit `w_1`, which must satisfy `v_1 w_1 = 1` modulo the tail.
pub fn vdk_product_with(ring: &Ring, v_rep: &[Elem], w_rep: &[Elem], w1: &Elem) -> Result<ProductRow> {
    check_tails(v_rep, w_rep)?;
    let rest = ring.sub(&ring.one(), &ring.mul(&w_rep[0], w1));
    if !Ideal::of_row(ring, &w_rep[1..]).contains(&rest)? {
        return Err(Error::NoModularInverse);
    }
    let row = product_formula(ring, v_rep, w_rep, w1);
    let witness = ring.solve_unimodular(&row)?.ok_or(Error::NotUnimodular)?;
    Ok(ProductRow { row, witness, w1: w1.clone() })
}

/// `(x_1 v_1, v_2, .., v_n)`.
pub fn nice_target(ring: &Ring, v_rep: &[Elem], w_rep: &[Elem]) -> Vec<Elem> {
    let mut t = w_rep.to_vec();
    t[0] = ring.mul(&v_rep[0], &w_rep[0]);
    t
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceVerdict {
    /// A word carrying the product row to `(x_1 v_1, v_2, ..)`.
    Nice(ElementaryWord),
    NotNice(String),
    Unknown(String),
}

impl NiceVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            NiceVerdict::Nice(_) => "nice",
            NiceVerdict::NotNice(_) => "not_nice",
            NiceVerdict::Unknown(_) => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NiceResult {
    pub reps: CommonTail,
    pub product: ProductRow,
    pub target: Vec<Elem>,
    pub verdict: NiceVerdict,
}

impl NiceResult {
    pub fn to_json(&self, ring: &Ring) -> Value {
        let row = |r: &[Elem]| ring.format_row(r);
        let mut v = json!({
            "verdict": self.verdict.name(),
            "v_rep": row(&self.reps.v_rep),
            "w_rep": row(&self.reps.w_rep),
            "v_certificate": self.reps.v_cert.letters_json(),
            "w_certificate": self.reps.w_cert.letters_json(),
            "w1": ring.format(&self.product.w1),
            "product": row(&self.product.row),
            "target": row(&self.target),
        });
        match &self.verdict {
            NiceVerdict::Nice(w) => v["certificate"] = w.letters_json(),
            NiceVerdict::NotNice(why) | NiceVerdict::Unknown(why) => v["reason"] = json!(why),
        }
        v
    }
}

/// Compares `[v_rep * w_rep]` with `[(x_1 v_1, v_2, ..)]`. Rows already sharing
/// a tail are used as they are; otherwise representatives come from
/// [`common_tail_reps`].
pub fn nice_check(ring: &Ring, v: &[Elem], w: &[Elem], cfg: &OrbitConfig) -> Result<NiceResult> {
    let reps = if v.len() == w.len() && v.len() >= 2 && v[1..] == w[1..] {
        let empty = ElementaryWord::empty(ring, v.len());
        CommonTail { v_rep: v.to_vec(), w_rep: w.to_vec(), v_cert: empty.clone(), w_cert: empty }
    } else {
        if !ring.is_finite() {
            return Err(Error::InfiniteRing);
        }
        common_tail_reps(ring, v, w, cfg)?
    };
    let product = vdk_product(ring, &reps.v_rep, &reps.w_rep)?;
    let target = nice_target(ring, &reps.v_rep, &reps.w_rep);
    let verdict = match same_orbit(ring, &product.row, &target, cfg)? {
        SameOrbit::Yes(w) => NiceVerdict::Nice(w),
        SameOrbit::No(why) => NiceVerdict::NotNice(why),
        SameOrbit::Unknown(why) => NiceVerdict::Unknown(why),
    };
    Ok(NiceResult { reps, product, target, verdict })
}

// ---- group tables ------------------------------------------------------------

/// `Um_n(R)/E_n(R)` for a finite ring with the product table.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    pub ring: Ring,
    pub n: usize,
    /// Class representatives; class 0 is `[e_1]`.
    pub reps: Vec<Vec<Elem>>,
    /// Every unimodular row in sorted order with its class and a word from the class representative.
    pub members: Vec<(Vec<Elem>, usize, ElementaryWord)>,
    pub table: Vec<Vec<usize>>,
    pub sr: usize,
    pub sdim: usize,
    class_of: HashMap<Vec<Elem>, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub commutative: bool,
    pub associative: bool,
    pub identity: bool,
    pub inverses: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.commutative && self.associative && self.identity && self.inverses
    }
}

impl OrbitTable {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    /// Class of a unimodular row.
    pub fn class_of(&self, row: &[Elem]) -> Option<usize> {
        self.class_of.get(row).copied()
    }

    /// Word carrying the class representative to `row`.
    pub fn certificate(&self, row: &[Elem]) -> Option<&ElementaryWord> {
        let k = self.members.binary_search_by(|(r, _, _)| r.as_slice().cmp(row)).ok()?;
        Some(&self.members[k].2)
    }

    /// Word carrying `a` to `b` when they lie in one class.
    pub fn path(&self, a: &[Elem], b: &[Elem]) -> Option<ElementaryWord> {
        if self.class_of(a)? != self.class_of(b)? {
            return None;
        }
        self.certificate(a)?.inverse().compose(self.certificate(b)?).ok()
    }

    /// Whether `sdim(R) <= 2n - 4`.
    pub fn hypothesis_holds(&self) -> bool {
        2 * self.n >= 4 + self.sdim
    }

    pub fn group_name(&self) -> String {
        match self.reps.len() {
            1 => "trivial".into(),
            k if self.check_axioms().all() => format!("abelian of order {k}"),
            _ => "not a group".into(),
        }
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let k = self.reps.len();
        let t = &self.table;
        let commutative = (0..k).all(|a| (0..k).all(|b| t[a][b] == t[b][a]));
        let associative = (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        let identity = (0..k).all(|a| t[0][a] == a && t[a][0] == a);
        let inverses = (0..k).all(|a| (0..k).any(|b| t[a][b] == 0));
        AxiomReport { commutative, associative, identity, inverses }
    }

    pub fn to_json(&self) -> Value {
        let ring = &self.ring;
        let axioms = self.check_axioms();
        let mut sizes = vec![0usize; self.reps.len()];
        for (_, c, _) in &self.members {
            sizes[*c] += 1;
        }
        json!({
            "ring": ring.descriptor().to_json(),
            "n": self.n,
            "sr": self.sr,
            "sdim": self.sdim,
            "hypothesis": {"sdim_bound": 2 * self.n - 4, "satisfied": self.hypothesis_holds()},
            "class_count": self.reps.len(),
            "group": self.group_name(),
            "axioms": {
                "commutative": axioms.commutative,
                "associative": axioms.associative,
                "identity": axioms.identity,
                "inverses": axioms.inverses,
            },
            "classes": self.reps.iter().zip(&sizes).map(|(r, s)| json!({"representative": ring.format_row(r), "size": s})).collect::<Vec<_>>(),
            "table": self.table,
            "members": self.members.iter().map(|(row, c, w)| json!({
                "row": ring.format_row(row),
                "class": c,
                "certificate": w.letters_json(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Reads a table written by [`OrbitTable::to_json`], replaying every certificate.
    pub fn from_json(v: &Value) -> Result<OrbitTable> {
        let bad = |what: &str| Error::Parse(format!("orbit table: {what}"));
        let ring = Ring::new(RingDescriptor::from_json(v.get("ring").ok_or_else(|| bad("ring"))?)?)?;
        let num = |key: &str| v.get(key).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad(key));
        let n = num("n")?;
        let row = |x: &Value| -> Result<Vec<Elem>> {
            x.as_array().ok_or_else(|| bad("row"))?.iter().map(|e| ring.from_json(e)).collect()
        };
        let reps = v
            .get("classes")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("classes"))?
            .iter()
            .map(|c| row(c.get("representative").ok_or_else(|| bad("representative"))?))
            .collect::<Result<Vec<_>>>()?;
        let table: Vec<Vec<usize>> = serde_json::from_value(v.get("table").cloned().ok_or_else(|| bad("table"))?)
            .map_err(|e| bad(&e.to_string()))?;
        let mut members = Vec::new();
        let mut class_of = HashMap::new();
        for m in v.get("members").and_then(Value::as_array).ok_or_else(|| bad("members"))? {
            let r = row(m.get("row").ok_or_else(|| bad("row"))?)?;
            let c = m.get("class").and_then(Value::as_u64).ok_or_else(|| bad("class"))? as usize;
            let letters = m
                .get("certificate")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("certificate"))?
                .iter()
                .map(|l| Letter::from_json(&ring, l))
                .collect::<Result<Vec<_>>>()?;
            let w = ElementaryWord::new(&ring, n, letters)?;
            let rep = reps.get(c).ok_or_else(|| bad("class index"))?;
            if w.act(rep)? != r {
                return Err(Error::CertificateInvalid("replay mismatch in cached table".into()));
            }
            class_of.insert(r.clone(), c);
            members.push((r, c, w));
        }
        Ok(OrbitTable { ring, n, reps, members, table, sr: num("sr")?, sdim: num("sdim")?, class_of })
    }
}

/// Enumerates `Um_n(R)`, splits it into orbits and fills the product table
/// from common-tail representatives of each pair of classes.
pub fn build_group_table(ring: &Ring, n: usize, cfg: &OrbitConfig) -> Result<OrbitTable> {
    if n < 3 {
        return Err(Error::HypothesisFailed(format!("group tables need n >= 3, got {n}")));
    }
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    let sr_value = sr(ring)?;
    let rows = enumerate_um(ring, n)?;
    let mut class_of: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut orbits: Vec<OrbitResult> = Vec::new();
    let mut start = e1(ring, n);
    loop {
        let orbit = orbit_bfs(ring, &start, cfg)?;
        for row in orbit.members() {
            class_of.insert(row.clone(), orbits.len());
        }
        orbits.push(orbit);
        match rows.iter().find(|r| !class_of.contains_key(*r)) {
            Some(r) => start = r.clone(),
            None => break,
        }
    }
    let k = orbits.len();
    let mut table = vec![vec![0usize; k]; k];
    for a in 0..k {
        for b in 0..k {
            let ct = common_tail_from_orbits(&orbits[a], &orbits[b])?;
            let p = vdk_product(ring, &ct.v_rep, &ct.w_rep)?;
            table[a][b] = *class_of.get(&p.row).ok_or_else(|| Error::BfsFailure("product row not classified".into()))?;
        }
    }
    let members = rows
        .into_iter()
        .map(|row| {
            let c = class_of[&row];
            let w = orbits[c].certificate_for(&row).expect("row in its orbit");
            (row, c, w)
        })
        .collect();
    let reps = orbits.iter().map(|o| o.start().to_vec()).collect();
    Ok(OrbitTable { ring: ring.clone(), n, reps, members, table, sr: sr_value, sdim: sr_value - 1, class_of })
}

// ---- checks over a table -----------------------------------------------------

/// How many compatible pairs a sweep visits.
#[derive(Clone, Copy, Debug)]
pub enum Sampling {
    Exhaustive,
    Sample { pairs: usize, seed: u64 },
}

impl Sampling {
    /// Exhaustive up to `limit` rows, otherwise `pairs` random pairs.
    pub fn for_size(um_size: usize, limit: usize, pairs: usize, seed: u64) -> Sampling {
        if um_size <= limit {
            Sampling::Exhaustive
        } else {
            Sampling::Sample { pairs, seed }
        }
    }
}

/// Compatible pairs `(v_rep, w_rep)` sharing a tail.
fn compatible_pairs(table: &OrbitTable, sampling: Sampling) -> Vec<(usize, usize)> {
    let mut by_tail: HashMap<&[Elem], Vec<usize>> = HashMap::new();
    for (k, (row, _, _)) in table.members.iter().enumerate() {
        by_tail.entry(&row[1..]).or_default().push(k);
    }
    match sampling {
        Sampling::Exhaustive => {
            let mut out = Vec::new();
            for (k, (row, _, _)) in table.members.iter().enumerate() {
                for &j in &by_tail[&row[1..]] {
                    out.push((k, j));
                }
            }
            out
        }
        Sampling::Sample { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..pairs)
                .map(|_| {
                    let k = rng.gen_range(0..table.members.len());
                    let group = &by_tail[&table.members[k].0[1..]];
                    (k, group[rng.gen_range(0..group.len())])
                })
                .collect()
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct WellDefinedReport {
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub variants_checked: usize,
    pub failures: Vec<String>,
}

/// For each compatible pair and every valid `w_1`, the product row must be
/// unimodular and land in the class the table assigns to the pair of classes.
pub fn well_definedness(table: &OrbitTable, sampling: Sampling) -> Result<WellDefinedReport> {
    let ring = &table.ring;
    let pairs = compatible_pairs(table, sampling);
    let mut tail_ideals: HashMap<Vec<Elem>, Ideal> = HashMap::new();
    let mut report =
        WellDefinedReport { exhaustive: matches!(sampling, Sampling::Exhaustive), ..Default::default() };
    for (a, b) in pairs {
        let v_rep = &table.members[a].0;
        let w_rep = &table.members[b].0;
        let tail = tail_ideals.entry(w_rep[1..].to_vec()).or_insert_with(|| Ideal::of_row(ring, &w_rep[1..]));
        let expected = table.table[table.members[a].1][table.members[b].1];
        report.pairs_checked += 1;
        for w1 in all_w1_in(ring, &w_rep[0], tail)? {
            report.variants_checked += 1;
            let row = product_formula(ring, v_rep, w_rep, &w1);
            let fmt = || format!("{:?} * {:?} with w1 = {}", ring.format_row(v_rep), ring.format_row(w_rep), ring.format(&w1));
            if !ring.is_unimodular(&row)? {
                report.failures.push(format!("{} is not unimodular", fmt()));
            } else if table.class_of(&row) != Some(expected) {
                report.failures.push(format!("{} leaves the expected class", fmt()));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default)]
pub struct NicenessReport {
    pub exhaustive: bool,
    pub nice: usize,
    pub not_nice: Vec<String>,
    pub unknown: usize,
}

/// Niceness over compatible pairs, decided by class lookup; each `Nice`
/// verdict carries a replay-checked word from the product to the target.
pub fn niceness_sweep(table: &OrbitTable, sampling: Sampling) -> Result<NicenessReport> {
    let ring = &table.ring;
    let mut report = NicenessReport { exhaustive: matches!(sampling, Sampling::Exhaustive), ..Default::default() };
    for (a, b) in compatible_pairs(table, sampling) {
        let v_rep = &table.members[a].0;
        let w_rep = &table.members[b].0;
        let p = vdk_product(ring, v_rep, w_rep)?;
        let target = nice_target(ring, v_rep, w_rep);
        match table.path(&p.row, &target) {
            Some(w) if w.act(&p.row)? == target => report.nice += 1,
            Some(_) => return Err(Error::CertificateInvalid("replay mismatch in niceness sweep".into())),
            None if table.class_of(&target).is_some() => report
                .not_nice
                .push(format!("{:?} * {:?}", ring.format_row(v_rep), ring.format_row(w_rep))),
            None => report.unknown += 1,
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct MsReport {
    pub holds: bool,
    /// Class of `(a a', b, tail)`.
    pub lhs_class: usize,
    /// Table product of the classes of `(a, b, tail)` and `(a', b, tail)`.
    pub rhs_class: usize,
    /// The product row computed directly from the two rows.
    pub direct_product: Vec<Elem>,
    /// Word carrying the direct product to `(a a', b, tail)`.
    pub certificate: Option<ElementaryWord>,
}

/// Checks `[(a a', b, tail)] = [(a, b, tail)] * [(a', b, tail)]` in the table.
pub fn verify_ms_multiplicativity(table: &OrbitTable, a: &Elem, a2: &Elem, b: &Elem, tail: &[Elem]) -> Result<MsReport> {
    let ring = &table.ring;
    if tail.len() + 2 != table.n {
        return Err(Error::SizeMismatch { expected: table.n, found: tail.len() + 2 });
    }
    let build = |x: &Elem| -> Vec<Elem> {
        let mut r = vec![x.clone(), b.clone()];
        r.extend(tail.iter().cloned());
        r
    };
    let r1 = build(a);
    let r2 = build(a2);
    let r3 = build(&ring.mul(a, a2));
    let class = |r: &[Elem]| table.class_of(r).ok_or(Error::NotUnimodular);
    let (c1, c2, c3) = (class(&r1)?, class(&r2)?, class(&r3)?);
    let rhs = table.table[c1][c2];
    let direct = vdk_product(ring, &r1, &r2)?;
    let certificate = table.path(&direct.row, &r3);
    Ok(MsReport {
        holds: rhs == c3 && certificate.is_some(),
        lhs_class: c3,
        rhs_class: rhs,
        direct_product: direct.row,
        certificate,
    })
}
