//! Exact dense matrices and sparse spans over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use crate::freealg::{NcPoly, Word};
use crate::scalars::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }
    pub fn scalar(n: usize, c: F) -> Self {
        Self::identity(n).scale(&c)
    }
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }
    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>], rows: usize) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
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
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }
    pub fn add_at(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] += v;
    }
    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }
    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| if x.is_zero() { F::zero() } else { x.clone() * c.clone() })
    }
    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| match (a.is_zero(), b.is_zero()) {
                    (_, true) => a.clone(),
                    (true, false) => b.clone(),
                    _ => a.clone() + b.clone(),
                })
                .collect(),
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols).clone() * o.get(i % o.rows, j % o.cols).clone()
        })
    }
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(r, j).clone();
                    if !v.is_zero() {
                        let x = m.get(i, j).clone() - f.clone() * v;
                        m.set(i, j, x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }
    /// One solution of `A x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
    pub fn det(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= piv.clone();
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone() * inv.clone();
                for j in c..n {
                    let x = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, x);
                }
            }
        }
        det
    }
    /// Restriction to an invariant subspace spanned by the columns of `basis`
    /// (full column rank): the matrix `X` with `A B = B X`.
    pub fn restrict(&self, basis: &[Vec<F>]) -> Option<Self> {
        let b = Self::from_cols(basis, self.rows);
        let ab = self.mul(&b);
        let k = basis.len();
        let aug = Self::from_fn(self.rows, 2 * k, |i, j| if j < k { b.get(i, j).clone() } else { ab.get(i, j - k).clone() });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= k) {
            return None;
        }
        let mut out = Self::zeros(k, k);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                out.set(p, j, r.get(row, k + j).clone());
            }
        }
        Some(out)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Basis of the span of a list of vectors (reduced row echelon rows).
pub fn span_basis<F: Field>(vectors: &[Vec<F>], dim: usize) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_fn(vectors.len(), dim, |i, j| vectors[i][j].clone());
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

/// An incrementally built linear span of polynomials, kept fully reduced.
///
/// Each stored element has a distinct leading word (its pivot) that occurs in
/// no other stored element, so reduction modulo the span is a normal form.
#[derive(Clone, Debug)]
pub struct Span<F> {
    pivots: BTreeMap<Word, NcPoly<F>>,
}

impl<F: Field> Default for Span<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Span<F> {
    pub fn new() -> Self {
        Span { pivots: BTreeMap::new() }
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    /// Remainder of `p` modulo the span.
    pub fn reduce(&self, p: &NcPoly<F>) -> NcPoly<F> {
        let mut r = p.clone();
        for (w, row) in self.pivots.iter().rev() {
            let c = r.coeff(w);
            if !c.is_zero() {
                r.add_scaled(row, &-c);
            }
        }
        r
    }
    pub fn contains(&self, p: &NcPoly<F>) -> bool {
        self.reduce(p).is_zero()
    }
    /// Insert `p`; returns `false` if it already lay in the span.
    pub fn insert(&mut self, p: &NcPoly<F>) -> bool {
        let r = self.reduce(p);
        let Some((w, _)) = r.leading() else {
            return false;
        };
        let w = w.clone();
        let r = r.monic();
        for row in self.pivots.values_mut() {
            let c = row.coeff(&w);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.pivots.insert(w, r);
        true
    }
    /// Stored elements in increasing order of leading word.
    pub fn elements(&self) -> impl Iterator<Item = &NcPoly<F>> {
        self.pivots.values()
    }
    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.pivots.keys()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gauss;
    use num_traits::Zero;

    type M = Matrix<Gauss>;

    #[test]
    fn inverse_and_det() {
        let a = M::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det(), Gauss::from_i64(1));
        assert_eq!(a.mul(&a.inverse().unwrap()), M::identity(2));
        assert!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn nullspace_and_solve() {
        let a = M::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert!(a.solve(&[Gauss::from_i64(1), Gauss::from_i64(3)]).is_none());
        let x = a.solve(&[Gauss::from_i64(1), Gauss::from_i64(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![Gauss::from_i64(1), Gauss::from_i64(2)]);
    }

    #[test]
    fn restrict_to_invariant_subspace() {
        let a = M::from_i64(&[&[1, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let g = |v: &[i64]| v.iter().map(|&x| Gauss::from_i64(x)).collect::<Vec<_>>();
        let r = a.restrict(&[g(&[1, 1, 0]), g(&[0, 0, 2])]).unwrap();
        assert_eq!(r, M::from_i64(&[&[2, 0], &[0, 3]]));
        assert!(a.restrict(&[g(&[0, 1, 0])]).is_none());
    }
}
