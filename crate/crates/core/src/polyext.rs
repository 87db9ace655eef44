//! Rows over `R[X]`: evaluation at zero, witnesses of bounded degree, the
//! product over `R[X]`, and reduction modulo the Jacobson radical.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linsolve::solve_mod;
use crate::orbit::{same_orbit, unit_clear, OrbitConfig, SameOrbit};
use crate::ring::{Elem, Ideal, Ring};
use crate::row::{e1, UnimodularRow};
use crate::vdk::{product_formula, vdk_product, ProductRow};
use crate::word::{ElementaryWord, Letter};

/// Additive-closure budget for witness search over bases without a linear solver.
pub const CLOSURE_CAP: usize = 1 << 20;

/// A row over a polynomial extension `R[X]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRow {
    pub ring: Ring,
    pub entries: Vec<Elem>,
}

impl PolyRow {
    pub fn new(ring: &Ring, entries: Vec<Elem>) -> Result<PolyRow> {
        if !ring.is_poly_ext() {
            return Err(Error::InvalidRing(format!("{ring} is not a polynomial extension")));
        }
        Ok(PolyRow { ring: ring.clone(), entries })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<PolyRow> {
        PolyRow::new(ring, ring.parse_row(text)?)
    }

    pub fn base(&self) -> &Ring {
        self.ring.base().expect("polynomial rings have a base")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest entry degree, with the zero polynomial counted as degree 0.
    pub fn max_degree(&self) -> usize {
        self.entries.iter().filter_map(|a| self.ring.degree(a)).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.max_degree() == 0
    }

    /// `2 * max_degree + 1`.
    pub fn default_bound(&self) -> usize {
        2 * self.max_degree() + 1
    }

    /// Constant terms, as a row over the base ring.
    pub fn constants(&self) -> Vec<Elem> {
        self.entries.iter().map(|a| self.ring.eval0(a).expect("polynomial entry")).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.ring.format_row(&self.entries)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(|a| self.ring.to_json(a)).collect())
    }
}

/// `v(0)`, with a witness attached when it is unimodular over the base.
pub fn poly_eval0(v: &PolyRow) -> Result<UnimodularRow> {
    let entries = v.constants();
    let witness = v.base().solve_unimodular(&entries)?;
    Ok(UnimodularRow { ring: v.base().clone(), entries, witness })
}

/// Constant terms of every parameter of a word over `R[X]`.
pub fn eval0_word(word: &ElementaryWord) -> Result<ElementaryWord> {
    let ring = &word.ring;
    let base = ring.base().ok_or_else(|| Error::InvalidRing(format!("{ring} is not a polynomial extension")))?;
    let f = |x: &Elem| ring.eval0(x).expect("polynomial parameter");
    Ok(ElementaryWord { ring: base.clone(), n: word.n, letters: word.letters.iter().map(|l| l.map_params(&f)).collect() })
}

/// Reads a word over `R` as a word over `R[X]` with constant parameters.
pub fn constant_word(poly: &Ring, word: &ElementaryWord) -> Result<ElementaryWord> {
    let f = |x: &Elem| poly.from_coefficients(vec![x.clone()]).expect("polynomial ring");
    ElementaryWord::new(poly, word.n, word.letters.iter().map(|l| l.map_params(&f)).collect())
}

/// Witness polynomials of degree at most `bound`, or `None` when there are none
/// of that degree. Over `Z/n` the coefficient system is solved exactly; over
/// other finite bases the submodule spanned by `r X^k a_i` is enumerated.
pub fn bounded_unimodular_solve(v: &PolyRow, bound: usize) -> Result<Option<Vec<Elem>>> {
    if v.is_empty() {
        return Err(Error::EmptyRow);
    }
    let ring = &v.ring;
    let base = v.base();
    let coeffs: Vec<Vec<Elem>> = v.entries.iter().map(|a| ring.coefficients(a)).collect::<Result<_>>()?;
    let width = v.max_degree() + bound + 1;
    let unknowns = v.len() * (bound + 1);
    let coeff = |i: usize, m: usize, k: usize| -> Elem {
        m.checked_sub(k).and_then(|d| coeffs[i].get(d).cloned()).unwrap_or_else(|| base.zero())
    };

    let solution: Option<Vec<Elem>> = if let Some(n) = base.modulus() {
        let matrix = (0..width)
            .map(|m| {
                (0..unknowns).map(|u| coeff(u / (bound + 1), m, u % (bound + 1)).as_res()).collect()
            })
            .collect();
        let mut rhs = vec![0u64; width];
        rhs[0] = 1 % n;
        solve_mod(n, matrix, rhs).map(|x| x.into_iter().map(|c| base.elem_of_u64(c)).collect())
    } else if base.is_finite() {
        closure_solve(base, width, unknowns, &|u, m| coeff(u / (bound + 1), m, u % (bound + 1)))?
    } else {
        return Err(Error::UnsupportedBase(base.to_string()));
    };

    let Some(x) = solution else { return Ok(None) };
    let witness: Vec<Elem> = x
        .chunks(bound + 1)
        .map(|c| ring.from_coefficients(c.to_vec()))
        .collect::<Result<_>>()?;
    if !ring.is_one(&ring.dot(&v.entries, &witness)) {
        return Err(Error::CertificateInvalid("witness does not expand to 1".into()));
    }
    Ok(Some(witness))
}

/// Breadth-first additive closure of `{r * column_u}` until `e_0` appears.
fn closure_solve(
    base: &Ring,
    width: usize,
    unknowns: usize,
    column: &dyn Fn(usize, usize) -> Elem,
) -> Result<Option<Vec<Elem>>> {
    let els = base.elements()?;
    let mut gens: Vec<(usize, Elem, Vec<Elem>)> = Vec::new();
    for u in 0..unknowns {
        for r in els.iter().filter(|r| !base.is_zero(r)) {
            let vec: Vec<Elem> = (0..width).map(|m| base.mul(r, &column(u, m))).collect();
            if vec.iter().any(|x| !base.is_zero(x)) {
                gens.push((u, r.clone(), vec));
            }
        }
    }
    let mut target = vec![base.zero(); width];
    target[0] = base.one();
    let start = vec![base.zero(); width];
    let mut seen: HashMap<Vec<Elem>, usize> = HashMap::from([(start.clone(), 0)]);
    // each node keeps its parent and the generator that reached it
    let mut nodes: Vec<Node> = vec![(start, None)];
    let mut head = 0;
    let mut found = seen.get(&target).copied();
    while found.is_none() && head < nodes.len() {
        for (g, (_, _, vec)) in gens.iter().enumerate() {
            let next: Vec<Elem> = nodes[head].0.iter().zip(vec).map(|(a, b)| base.add(a, b)).collect();
            if seen.contains_key(&next) {
                continue;
            }
            if nodes.len() >= CLOSURE_CAP {
                return Err(Error::BudgetExceeded(CLOSURE_CAP));
            }
            seen.insert(next.clone(), nodes.len());
            let hit = next == target;
            nodes.push((next, Some((head, g))));
            if hit {
                found = Some(nodes.len() - 1);
                break;
            }
        }
        head += 1;
    }
    let Some(mut k) = found else { return Ok(None) };
    let mut x = vec![base.zero(); unknowns];
    while let Some((parent, g)) = nodes[k].1 {
        let (u, r, _) = &gens[g];
        x[*u] = base.add(&x[*u], r);
        k = parent;
    }
    Ok(Some(x))
}

/// The product over `R[X]`: `w_1` is the first witness coordinate of `w_rep`
/// within degree `bound`, and the product row is re-solved within
/// `max(bound, 2 deg + 1)`.
pub fn vdk_product_poly(v_rep: &PolyRow, w_rep: &PolyRow, bound: usize) -> Result<ProductRow> {
    if v_rep.ring != w_rep.ring {
        return Err(Error::MixedRings);
    }
    if v_rep.len() != w_rep.len() || v_rep.len() < 2 {
        return Err(Error::SizeMismatch { expected: v_rep.len().max(2), found: w_rep.len() });
    }
    if v_rep.entries[1..] != w_rep.entries[1..] {
        return Err(Error::TailMismatch);
    }
    bounded_unimodular_solve(v_rep, bound)?.ok_or(Error::NoWitnessWithinBound(bound))?;
    let w_witness = bounded_unimodular_solve(w_rep, bound)?.ok_or(Error::NoWitnessWithinBound(bound))?;
    let w1 = w_witness[0].clone();
    let row = product_formula(&v_rep.ring, &v_rep.entries, &w_rep.entries, &w1);
    let product = PolyRow::new(&v_rep.ring, row)?;
    let enlarged = bound.max(product.default_bound());
    let witness = bounded_unimodular_solve(&product, enlarged)?.ok_or(Error::NoWitnessWithinBound(enlarged))?;
    Ok(ProductRow { row: product.entries, witness, w1 })
}

/// Outcome of comparing product-then-evaluate with evaluate-then-product.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub poly_product: ProductRow,
    /// `product(v, w)(0)`.
    pub evaluated: Vec<Elem>,
    /// `product(v(0), w(0))` over the base.
    pub base_product: ProductRow,
    pub verdict: SameOrbit,
}

pub fn specialization_check(v_rep: &PolyRow, w_rep: &PolyRow, bound: usize, cfg: &OrbitConfig) -> Result<Specialization> {
    let poly_product = vdk_product_poly(v_rep, w_rep, bound)?;
    let base = v_rep.base();
    let evaluated = PolyRow::new(&v_rep.ring, poly_product.row.clone())?.constants();
    let base_product = vdk_product(base, &v_rep.constants(), &w_rep.constants())?;
    let verdict = same_orbit(base, &evaluated, &base_product.row, cfg)?;
    Ok(Specialization { poly_product, evaluated, base_product, verdict })
}

type Node = (Vec<Elem>, Option<(usize, usize)>);

// ---- Jacobson radical --------------------------------------------------------

/// `J(R) = {x : 1 + xy is a unit for every y}`, generated greedily in element order.
pub fn jacobson_radical(ring: &Ring) -> Result<Ideal> {
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    let els = ring.elements()?;
    let mut gens: Vec<Elem> = Vec::new();
    for x in els {
        if ring.is_zero(x) || !els.iter().all(|y| ring.is_unit(&ring.add(&ring.one(), &ring.mul(x, y)))) {
            continue;
        }
        if !Ideal::new(ring, gens.clone()).contains(x)? {
            gens.push(x.clone());
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// The stages of a reduction to `e_1` through `R/J(R)`.
#[derive(Clone, Debug)]
pub struct JacobsonReduction {
    pub radical: Ideal,
    /// A word over `R/J` carrying the image of `v` to `e_1`, read over `R`.
    pub lifted: ElementaryWord,
    /// `v * lifted`, congruent to `e_1` modulo `J`.
    pub intermediate: Vec<Elem>,
    /// Clears the intermediate row using its unit first entry.
    pub clear: ElementaryWord,
    pub word: ElementaryWord,
}

impl JacobsonReduction {
    pub fn to_json(&self) -> Value {
        let ring = &self.word.ring;
        json!({
            "radical": self.radical.generators().iter().map(|g| ring.format(g)).collect::<Vec<_>>(),
            "lifted": self.lifted.letters_json(),
            "intermediate": ring.format_row(&self.intermediate),
            "clear": self.clear.letters_json(),
            "word": self.word.letters_json(),
        })
    }
}

/// Reduces `v` modulo `J(R)`, moves the image to `e_1` by BFS over `R/J(R)`,
/// lifts the word, and clears the remaining row with the unit `1 + a_0`.
pub fn jacobson_reduce(ring: &Ring, v: &[Elem], cfg: &OrbitConfig) -> Result<JacobsonReduction> {
    if !ring.is_unimodular(v)? {
        return Err(Error::NotUnimodular);
    }
    let radical = jacobson_radical(ring)?;
    let n = v.len();
    let lifted = if radical.generators().is_empty() {
        search_e1(ring, v, cfg)?
    } else {
        let quotient = Ring::quotient(ring, radical.generators())?;
        let image: Vec<Elem> = v.iter().map(|x| quotient.project(x)).collect();
        let w = search_e1(&quotient, &image, cfg)?;
        let f = |x: &Elem| quotient.lift(x);
        ElementaryWord::new(ring, n, w.letters.iter().map(|l| l.map_params(&f)).collect())?
    };
    let intermediate = lifted.act(v)?;
    let clear = unit_clear(ring, &intermediate)
        .ok_or_else(|| Error::BfsFailure("first entry after the lifted stage is not a unit".into()))?;
    let word = lifted.compose(&clear)?;
    if word.act(v)? != e1(ring, n) {
        return Err(Error::CertificateInvalid("reduction does not reach e1".into()));
    }
    Ok(JacobsonReduction { radical, lifted, intermediate, clear, word })
}

fn search_e1(ring: &Ring, v: &[Elem], cfg: &OrbitConfig) -> Result<ElementaryWord> {
    match same_orbit(ring, v, &e1(ring, v.len()), cfg)? {
        SameOrbit::Yes(w) => Ok(w),
        SameOrbit::No(why) | SameOrbit::Unknown(why) => Err(Error::BfsFailure(why)),
    }
}

// ---- completion ----------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum CompletionVerdict {
    /// A word over `R[X]` carrying `v` to `e_1`.
    Completable { reason: String, evidence: ElementaryWord },
    Unknown(String),
}

#[derive(Clone, Debug)]
pub struct Completion {
    pub verdict: CompletionVerdict,
    /// Reduction of `v(0)` over the base.
    pub base_stage: JacobsonReduction,
}

impl Completion {
    pub fn to_json(&self) -> Value {
        let mut out = json!({ "base_stage": self.base_stage.to_json() });
        match &self.verdict {
            CompletionVerdict::Completable { reason, evidence } => {
                out["verdict"] = json!("completable");
                out["reason"] = json!(reason);
                out["evidence"] = evidence.letters_json();
            }
            CompletionVerdict::Unknown(reason) => {
                out["verdict"] = json!("unknown");
                out["reason"] = json!(reason);
            }
        }
        out
    }
}

/// Without a certificate only `v(0)` is reduced, and non-constant rows stay
/// `Unknown`. A certificate must carry `v` to a constant row; that row is then
/// reduced over the base and the composed word is replayed over `R[X]`.
pub fn completion_check(v: &PolyRow, cert: Option<&ElementaryWord>, cfg: &OrbitConfig) -> Result<Completion> {
    let base = v.base();
    if !base.is_finite() {
        return Err(Error::InfiniteRing);
    }
    let base_stage = jacobson_reduce(base, &v.constants(), cfg)?;
    let (path, constant) = match cert {
        Some(w) => {
            if w.ring != v.ring || w.n != v.len() {
                return Err(Error::CertificateInvalid("certificate is over a different ring or size".into()));
            }
            let end = PolyRow::new(&v.ring, w.act(&v.entries)?)?;
            if !end.is_constant() {
                return Err(Error::CertificateInvalid("certificate does not end at a constant row".into()));
            }
            (w.clone(), end.constants())
        }
        None if v.is_constant() => (ElementaryWord::empty(&v.ring, v.len()), v.constants()),
        None => {
            let verdict = CompletionVerdict::Unknown("no certificate for the path from v(X) to a constant row".into());
            return Ok(Completion { verdict, base_stage });
        }
    };
    let tail = if constant == v.constants() { base_stage.word.clone() } else { jacobson_reduce(base, &constant, cfg)?.word };
    let evidence = path.compose(&constant_word(&v.ring, &tail)?)?;
    if evidence.act(&v.entries)? != e1(&v.ring, v.len()) {
        return Err(Error::CertificateInvalid("composed word does not reach e1".into()));
    }
    let reason = if cert.is_some() {
        "certified path to a constant row, then reduction over the base"
    } else {
        "constant row reduced over the base"
    };
    Ok(Completion { verdict: CompletionVerdict::Completable { reason: reason.into(), evidence }, base_stage })
}

/// Letters `e_ij(lambda)` with parameters parsed in `ring`.
pub fn parse_letters(ring: &Ring, n: usize, triples: &[(usize, usize, &str)]) -> Result<ElementaryWord> {
    let letters = triples.iter().map(|&(i, j, p)| Ok(Letter::elem(i, j, ring.parse(p)?))).collect::<Result<_>>()?;
    ElementaryWord::new(ring, n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(base: &str) -> Ring {
        Ring::parse_descriptor(&format!("{base}[X]")).unwrap()
    }

    #[test]
    fn evaluation_at_zero() {
        let r = poly("F5");
        let v = PolyRow::parse(&r, "X, X+1, 0").unwrap();
        let e = poly_eval0(&v).unwrap();
        assert_eq!(e.to_strings(), vec!["0", "1", "0"]);
        assert!(e.witness_holds());
        let r = poly("Z/4");
        let v = PolyRow::parse(&r, "1+2*X, 2*X, 2").unwrap();
        assert_eq!(poly_eval0(&v).unwrap().to_strings(), vec!["1", "0", "2"]);
    }

    #[test]
    fn bounded_solve_examples() {
        let r = poly("F5");
        let v = PolyRow::parse(&r, "X, X+1, 0").unwrap();
        let w = bounded_unimodular_solve(&v, 0).unwrap().unwrap();
        assert_eq!(r.format_row(&w), vec!["4", "1", "0"]);

        let r = poly("Z/4");
        let v = PolyRow::parse(&r, "X, 2").unwrap();
        assert_eq!(bounded_unimodular_solve(&v, 1).unwrap(), None);
        let v = PolyRow::parse(&r, "1+2*X, 2*X, 3").unwrap();
        let w = bounded_unimodular_solve(&v, 1).unwrap().unwrap();
        assert!(r.is_one(&r.dot(&v.entries, &w)));
        let v = PolyRow::parse(&r, "1+2*X, 0").unwrap();
        assert!(bounded_unimodular_solve(&v, 0).unwrap().is_none());
        assert!(bounded_unimodular_solve(&v, 1).unwrap().is_some());
    }

    #[test]
    fn closure_solver_over_a_local_ring() {
        let base = Ring::parse_descriptor(r#"{"kind":"PolyQuotient","p":2,"vars":["t"],"relations":["t^2"]}"#).unwrap();
        let r = Ring::poly_ext(&base, "X").unwrap();
        let v = PolyRow::parse(&r, "1+t*X, t").unwrap();
        let w = bounded_unimodular_solve(&v, 1).unwrap().unwrap();
        assert!(r.is_one(&r.dot(&v.entries, &w)));
        let v = PolyRow::parse(&r, "X, t").unwrap();
        assert!(bounded_unimodular_solve(&v, 2).unwrap().is_none());
    }

    #[test]
    fn unsupported_base() {
        let r = poly("Z");
        let v = PolyRow::parse(&r, "X, 1").unwrap();
        assert!(matches!(bounded_unimodular_solve(&v, 1), Err(Error::UnsupportedBase(_))));
    }

    #[test]
    fn product_over_z4x() {
        let r = poly("Z/4");
        let v = PolyRow::parse(&r, "1+2*X, 2*X, 3").unwrap();
        let w = PolyRow::parse(&r, "1, 2*X, 3").unwrap();
        let p = vdk_product_poly(&v, &w, 2).unwrap();
        assert!(r.is_one(&r.dot(&p.row, &p.witness)));
        let check = specialization_check(&v, &w, 2, &OrbitConfig::default()).unwrap();
        assert!(check.verdict.is_yes());
        let bad = PolyRow::parse(&r, "1, 2, 3").unwrap();
        assert!(matches!(vdk_product_poly(&v, &bad, 2), Err(Error::TailMismatch)));
    }

    #[test]
    fn radicals() {
        let z4 = Ring::zmod(4).unwrap();
        assert_eq!(jacobson_radical(&z4).unwrap().to_string(), "(2)");
        assert_eq!(jacobson_radical(&Ring::zmod(6).unwrap()).unwrap().to_string(), "(0)");
        assert_eq!(jacobson_radical(&Ring::prime_field(5).unwrap()).unwrap().to_string(), "(0)");
        assert_eq!(jacobson_radical(&Ring::zmod(12).unwrap()).unwrap().to_string(), "(6)");
        let q = Ring::parse_descriptor(r#"{"kind":"PolyQuotient","p":2,"vars":["t"],"relations":["t^2"]}"#).unwrap();
        assert_eq!(jacobson_radical(&q).unwrap().to_string(), "(t)");
    }

    #[test]
    fn reduction_example() {
        let r = Ring::zmod(4).unwrap();
        let v = r.parse_row("3,2,2").unwrap();
        let red = jacobson_reduce(&r, &v, &OrbitConfig::default()).unwrap();
        assert_eq!(red.word.act(&v).unwrap(), e1(&r, 3));
        let two = Ideal::new(&r, vec![r.from_i64(2)]);
        for (a, b) in red.intermediate.iter().zip(e1(&r, 3)) {
            assert!(two.contains(&r.sub(a, &b)).unwrap());
        }
    }

    #[test]
    fn completion() {
        let r = poly("F5");
        let cfg = OrbitConfig::default();
        let v = PolyRow::parse(&r, "X, X+1, 0").unwrap();
        let cert = parse_letters(&r, 3, &[(1, 2, "-1"), (2, 1, "1-X"), (1, 2, "-1")]).unwrap();
        assert!(matches!(completion_check(&v, Some(&cert), &cfg).unwrap().verdict, CompletionVerdict::Completable { .. }));
        assert!(matches!(completion_check(&v, None, &cfg).unwrap().verdict, CompletionVerdict::Unknown(_)));
        let c = PolyRow::parse(&r, "2, 3, 0").unwrap();
        let CompletionVerdict::Completable { evidence, .. } = completion_check(&c, None, &cfg).unwrap().verdict else {
            panic!("constant rows complete")
        };
        assert_eq!(evidence.act(&c.entries).unwrap(), e1(&r, 3));
        let wrong = parse_letters(&r, 3, &[(1, 2, "1")]).unwrap();
        assert!(matches!(completion_check(&v, Some(&wrong), &cfg), Err(Error::CertificateInvalid(_))));
    }

    #[test]
    fn evaluation_commutes_with_words() {
        let r = poly("Z/6");
        let v = PolyRow::parse(&r, "1+X, 2*X, 3").unwrap();
        let w = parse_letters(&r, 3, &[(1, 2, "X+2"), (3, 1, "5*X^2+1"), (2, 3, "4")]).unwrap();
        let moved = PolyRow::new(&r, w.act(&v.entries).unwrap()).unwrap();
        assert_eq!(moved.constants(), eval0_word(&w).unwrap().act(&v.constants()).unwrap());
    }
}
