//! The standard alternating form and elementary symplectic matrices.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::MatrixR;
use crate::orbit::{orbit_bfs, Generators, Mode, OrbitConfig, OrbitResult};
use crate::ring::{Elem, Ideal, Ring};
use crate::word::{sigma1, ElementaryWord, Letter};

/// The involution swapping `2i - 1` and `2i` on `1..=2m`.
pub fn sigma(m: usize, k: usize) -> Result<usize> {
    if k == 0 || k > 2 * m {
        return Err(Error::IndexOutOfRange { index: k, bound: 2 * m });
    }
    Ok(sigma1(k))
}

/// `psi_m`: block diagonal with `m` copies of `[[0, 1], [-1, 0]]`.
pub fn psi(ring: &Ring, m: usize) -> MatrixR {
    let mut p = MatrixR::identity(ring, 2 * m);
    for k in 0..2 * m {
        p.set(k, k, ring.zero());
    }
    for b in 0..m {
        p.set(2 * b, 2 * b + 1, ring.one());
        p.set(2 * b + 1, 2 * b, ring.neg(&ring.one()));
    }
    p
}

/// `se_ij(z)` of size `2m` (indices 1-based).
pub fn se_gen(ring: &Ring, m: usize, i: usize, j: usize, z: &Elem) -> Result<MatrixR> {
    ElementaryWord::new(ring, 2 * m, vec![Letter::symp(i, j, z.clone())]).map(|w| w.replay())
}

/// Whether `a^T psi a = psi`.
pub fn is_symplectic(a: &MatrixR) -> Result<bool> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    let p = psi(a.ring(), n / 2);
    Ok(a.transpose().mul(&p)?.mul(a)? == p)
}

/// Result of comparing the `E_2m` and `ESp_2m` orbits of a row.
#[derive(Clone, Debug)]
pub struct EspComparison {
    pub equal: bool,
    pub e_size: usize,
    pub esp_size: usize,
    /// Least row lying in exactly one of the orbits.
    pub witness: Option<Vec<Elem>>,
    pub e_orbit: OrbitResult,
    pub esp_orbit: OrbitResult,
}

impl EspComparison {
    pub fn to_json(&self) -> Value {
        let ring = &self.e_orbit.ring;
        json!({
            "verdict": if self.equal { "equal" } else { "differ" },
            "e_orbit_size": self.e_size,
            "esp_orbit_size": self.esp_size,
            "witness": self.witness.as_ref().map(|w| ring.format_row(w)),
        })
    }
}

/// Computes both orbits of `v` (length `2m`) by BFS and compares them as sets.
pub fn compare_e_esp_orbits(ring: &Ring, m: usize, v: &[Elem], generators: &Generators) -> Result<EspComparison> {
    if v.len() != 2 * m {
        return Err(Error::SizeMismatch { expected: 2 * m, found: v.len() });
    }
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    if !ring.is_unimodular(v)? {
        return Err(Error::NotUnimodular);
    }
    let cfg = |mode| OrbitConfig { mode, generators: generators.clone(), ..Default::default() };
    let e_orbit = orbit_bfs(ring, v, &cfg(Mode::E))?;
    let esp_orbit = orbit_bfs(ring, v, &cfg(Mode::ESp))?;
    let a = e_orbit.sorted_members();
    let b = esp_orbit.sorted_members();
    let witness = a
        .iter()
        .filter(|x| !esp_orbit.contains(x))
        .chain(b.iter().filter(|x| !e_orbit.contains(x)))
        .min()
        .cloned();
    Ok(EspComparison { equal: a == b, e_size: a.len(), esp_size: b.len(), witness, e_orbit, esp_orbit })
}

/// The orbit of `v` under conjugates of symplectic generators with parameters in `ideal`.
pub fn rel_esp_orbit(ring: &Ring, v: &[Elem], ideal: &Ideal, node_cap: usize, conj_depth: usize) -> Result<OrbitResult> {
    if v.len() < 4 {
        return Err(Error::SizeMismatch { expected: 4, found: v.len() });
    }
    let cfg = OrbitConfig { mode: Mode::ESpRel(ideal.clone()), node_cap, conj_depth, ..Default::default() };
    orbit_bfs(ring, v, &cfg)
}
