//! Square matrices over a [`Ring`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ideal, Ring};

/// An `n x n` matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixR {
    ring: Ring,
    n: usize,
    entries: Vec<Elem>,
}

impl fmt::Debug for MatrixR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_strings())
    }
}

impl MatrixR {
    pub fn identity(ring: &Ring, n: usize) -> MatrixR {
        let mut entries = vec![ring.zero(); n * n];
        for k in 0..n {
            entries[k * n + k] = ring.one();
        }
        MatrixR { ring: ring.clone(), n, entries }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<MatrixR> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch { expected: n, found: bad.len() });
        }
        Ok(MatrixR { ring: ring.clone(), n, entries: rows.into_iter().flatten().collect() })
    }

    /// Parses rows of comma separated literals.
    pub fn parse(ring: &Ring, rows: &[&str]) -> Result<MatrixR> {
        MatrixR::from_rows(ring, rows.iter().map(|r| ring.parse_row(r)).collect::<Result<_>>()?)
    }

    /// The elementary matrix `I + lambda E_ij` (indices 1-based).
    pub fn elementary(ring: &Ring, n: usize, i: usize, j: usize, lambda: &Elem) -> Result<MatrixR> {
        check_pair(n, i, j)?;
        let mut m = MatrixR::identity(ring, n);
        m.entries[(i - 1) * n + (j - 1)] = lambda.clone();
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 0-based position.
    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.entries[r * self.n + c] = x;
    }

    pub fn row(&self, r: usize) -> Vec<Elem> {
        self.entries[r * self.n..(r + 1) * self.n].to_vec()
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.n).map(|r| self.row(r)).collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows().iter().map(|r| self.ring.format_row(r)).collect()
    }

    pub fn mul(&self, other: &MatrixR) -> Result<MatrixR> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        let n = self.n;
        let r = &self.ring;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    acc = r.add(&acc, &r.mul(self.get(i, k), other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(MatrixR { ring: r.clone(), n, entries })
    }

    pub fn transpose(&self) -> MatrixR {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        MatrixR { ring: self.ring.clone(), n, entries }
    }

    pub fn neg(&self) -> MatrixR {
        let entries = self.entries.iter().map(|x| self.ring.neg(x)).collect();
        MatrixR { ring: self.ring.clone(), n: self.n, entries }
    }

    /// Right multiplication by `e_ij(lambda)`: column `j += lambda * column i` (0-based).
    pub fn col_op(&mut self, i: usize, j: usize, lambda: &Elem) {
        let r = self.ring.clone();
        for row in 0..self.n {
            let v = r.add(self.get(row, j), &r.mul(lambda, self.get(row, i)));
            self.set(row, j, v);
        }
    }

    /// Left multiplication by `e_ij(lambda)`: row `i += lambda * row j` (0-based).
    pub fn row_op(&mut self, i: usize, j: usize, lambda: &Elem) {
        let r = self.ring.clone();
        for col in 0..self.n {
            let v = r.add(self.get(i, col), &r.mul(lambda, self.get(j, col)));
            self.set(i, col, v);
        }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Elem {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor_det(&idx, &idx)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Elem {
        let r = &self.ring;
        match rows.len() {
            0 => r.one(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => r.sub(
                &r.mul(self.get(rows[0], cols[0]), self.get(rows[1], cols[1])),
                &r.mul(self.get(rows[0], cols[1]), self.get(rows[1], cols[0])),
            ),
            _ => {
                let mut acc = r.zero();
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if r.is_zero(a) {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = r.mul(a, &self.minor_det(&rows[1..], &sub_cols));
                    acc = if k % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
                }
                acc
            }
        }
    }

    pub fn adjugate(&self) -> MatrixR {
        let n = self.n;
        let r = &self.ring;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = (-1)^(i+j) det(minor with row j and column i removed)
                let rows: Vec<usize> = (0..n).filter(|&x| x != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&x| x != i).collect();
                let d = self.minor_det(&rows, &cols);
                entries.push(if (i + j) % 2 == 0 { d } else { r.neg(&d) });
            }
        }
        MatrixR { ring: r.clone(), n, entries }
    }

    /// Inverse when the determinant is a unit.
    pub fn inverse(&self) -> Option<MatrixR> {
        let d_inv = self.ring.inverse(&self.det())?;
        let adj = self.adjugate();
        let entries = adj.entries.iter().map(|x| self.ring.mul(x, &d_inv)).collect();
        Some(MatrixR { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn is_identity(&self) -> bool {
        *self == MatrixR::identity(&self.ring, self.n)
    }

    /// Whether every entry of `self - I` lies in `ideal`.
    pub fn congruent_to_identity(&self, ideal: &Ideal) -> Result<bool> {
        let id = MatrixR::identity(&self.ring, self.n);
        for (a, b) in self.entries.iter().zip(&id.entries) {
            if !ideal.contains(&self.ring.sub(a, b))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Block sum `self (+) I_k`.
    pub fn stabilize(&self, k: usize) -> MatrixR {
        let n = self.n + k;
        let mut m = MatrixR::identity(&self.ring, n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: v.len() });
        }
        let r = &self.ring;
        Ok((0..self.n)
            .map(|j| (0..self.n).fold(r.zero(), |acc, i| r.add(&acc, &r.mul(&v[i], self.get(i, j)))))
            .collect())
    }
}

pub(crate) fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    for k in [i, j] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
    }
    if i == j {
        return Err(Error::DiagonalIndex(i));
    }
    Ok(())
}
