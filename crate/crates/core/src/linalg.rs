//! Exact linear algebra over Q: small dense matrices and sparse spans.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{format_rational, Rational};

/// Dense row-major matrix. Column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        Matrix::identity(n).scale(c)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn pow(&self, n: u32) -> Matrix {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in 0..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{v : Av = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] / &pivot;
                    for j in c..n {
                        let v = &m[(c, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
        }
        det
    }

    /// Coefficients `[a_0, ..., a_n]` of `det(xI - A)` (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Vec<Rational> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let prev = coeffs[n - k + 1].clone();
            m = self.mul(&m).add(&Matrix::scalar(n, &prev));
            let am = self.mul(&m);
            let trace: Rational = (0..n).map(|i| am[(i, i)].clone()).sum();
            coeffs[n - k] = -trace / Rational::from_integer(BigInt::from(k as i64));
        }
        coeffs
    }

    /// Rational eigenvalues, each once.
    pub fn rational_eigenvalues(&self) -> Vec<Rational> {
        rational_roots(&self.char_poly())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&format_rational(&self[(i, j)]))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Rational roots of `sum a_i x^i`, each once, in ascending order.
///
/// Uses the rational root theorem; gives up (returning only the root 0 if
/// present) when the cleared coefficients are too large to factor by trial
/// division.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    let low = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Rational::zero());
    }
    let c = &c[low..];
    if c.len() <= 1 {
        return roots;
    }
    // clear denominators
    let lcm = c
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints.last().unwrap().abs().to_u64()) else {
        return roots;
    };
    const LIMIT: u64 = 1 << 40;
    if a0 > LIMIT || an > LIMIT {
        return roots;
    }
    let eval = |x: &Rational| -> Rational {
        c.iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    };
    let mut found = Vec::new();
    for p in divisors(a0) {
        for qd in divisors(an) {
            for sign in [1i64, -1] {
                let x = Rational::new(BigInt::from(p) * sign, BigInt::from(qd));
                if eval(&x).is_zero() && !found.contains(&x) {
                    found.push(x);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Sparse vector over an ordered key set.
pub type SparseVec<K> = BTreeMap<K, Rational>;

pub(crate) fn sparse_add<K: Ord + Clone>(acc: &mut SparseVec<K>, k: &K, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(k) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                acc.remove(k);
            }
        }
        None => {
            acc.insert(k.clone(), c.clone());
        }
    }
}

/// Incrementally maintained echelon basis of a subspace of sparse vectors.
///
/// Each stored vector is normalized to have coefficient 1 at its pivot (its
/// largest key), and no other stored vector has a nonzero entry there.
#[derive(Clone, Debug)]
pub struct EchelonSpan<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for EchelonSpan<K> {
    fn default() -> Self {
        EchelonSpan { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> EchelonSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        // pivots are eliminated from the largest key downwards
        loop {
            let next = v
                .iter()
                .rev()
                .find(|(k, _)| self.rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else { break };
            for (kk, cc) in &self.rows[&k] {
                sparse_add(&mut v, kk, &(-(cc * &c)));
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns the reduced, normalized new row if `v` was not
    /// already in the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Option<SparseVec<K>> {
        let r = self.reduce(v);
        let (pivot, lead) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))?;
        let inv = lead.recip();
        let row: SparseVec<K> = r.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        // keep the basis fully reduced at pivots
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(&pivot).cloned() {
                for (k, x) in &row {
                    sparse_add(other, k, &(-(x * &c)));
                }
            }
        }
        self.rows.insert(pivot, row.clone());
        Some(row)
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn kernel_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(a.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_and_char_poly() {
        let a = m(&[&[2, 1], &[0, 3]]);
        assert_eq!(a.determinant(), int(6));
        assert_eq!(a.char_poly(), vec![int(6), int(-5), int(1)]);
        assert_eq!(a.rational_eigenvalues(), vec![int(2), int(3)]);
        let rot = m(&[&[0, -1], &[1, 0]]);
        assert!(rot.rational_eigenvalues().is_empty());
    }

    #[test]
    fn roots_with_fractions() {
        // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
        let roots = rational_roots(&[int(0), int(-3), int(5), int(2)]);
        assert_eq!(roots, vec![int(-3), int(0), q(1, 2)]);
    }

    #[test]
    fn echelon_span() {
        let mut s: EchelonSpan<u32> = EchelonSpan::new();
        let v1: SparseVec<u32> = [(0, int(1)), (1, int(1))].into_iter().collect();
        let v2: SparseVec<u32> = [(1, int(2))].into_iter().collect();
        assert!(s.insert(&v1).is_some());
        assert!(s.insert(&v1).is_none());
        assert!(s.insert(&v2).is_some());
        let e0: SparseVec<u32> = [(0, int(5))].into_iter().collect();
        assert!(s.contains(&e0));
        assert_eq!(s.dim(), 2);
    }
}
