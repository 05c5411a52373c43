//! Exact dense linear algebra over any [`Scalar`] field.
//!
//! [`Matrix`] is a row-major grid with reduced row echelon form, kernels and
//! linear solves. [`Subspace`] keeps a canonical RREF basis, so equality of
//! subspaces is structural equality and coordinates of a member are read off
//! at the pivot columns.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds a matrix from its columns; all columns must have length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    /// Overwrites entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect())
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Matrix::<S>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Gauss–Jordan elimination: each pivot row is normalized to a leading 1
    /// and cleared from every other row.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut rows = self.to_rows();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].try_inv().expect("pivot is nonzero");
            for v in rows[rank].iter_mut().skip(col) {
                *v = v.mul_ref(&inv);
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    x.sub_mul_assign(&f, y);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let m = Matrix::from_rows(self.cols, rows).expect("row lengths preserved");
        (m, pivots)
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : M v = 0}` as a subspace of `S^cols`.
    pub fn kernel(&self) -> Subspace<S> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).neg_ref();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// One solution of `M x = b`, with free variables set to zero, or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Result<Option<Vec<S>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let aug = Matrix::from_rows(self.cols + 1, rows)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![S::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A linear subspace of `S^n`, stored as its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<S> {
    ambient: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    /// The zero subspace of `S^n`.
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The whole space `S^n`.
    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            s.insert(&unit(ambient, i)).expect("unit vector has ambient length");
        }
        s
    }

    /// The span of `vectors`.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: AsRef<[S]>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref())?;
        }
        Ok(s)
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// True for the zero subspace.
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The canonical basis rows.
    pub fn basis(&self) -> &[Vec<S>] {
        &self.rows
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: len });
        }
        Ok(())
    }

    /// The remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[S]) -> Result<Vec<S>> {
        self.check(v.len())?;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul_assign(&f, y);
                }
            }
        }
        Ok(r)
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[S]) -> Result<bool> {
        let mut r = self.reduce(v)?;
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].try_inv().expect("nonzero entry");
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    x.sub_mul_assign(&f, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        Ok(true)
    }

    /// Membership test.
    pub fn contains(&self, v: &[S]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    pub fn coords(&self, v: &[S]) -> Result<Option<Vec<S>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// The vector with coordinates `c` in the canonical basis.
    pub fn combine(&self, c: &[S]) -> Result<Vec<S>> {
        if c.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: c.len() });
        }
        let mut out = vec![S::zero(); self.ambient];
        for (row, a) in self.rows.iter().zip(c) {
            if a.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                x.add_mul_assign(a, y);
            }
        }
        Ok(out)
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace<S>) -> Result<bool> {
        other.check(self.ambient)?;
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as subspaces (ambient dimensions must agree).
    pub fn equals(&self, other: &Subspace<S>) -> Result<bool> {
        other.check(self.ambient)?;
        Ok(self == other)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.check(other.ambient)?;
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r)?;
        }
        Ok(s)
    }

    /// `self ∩ other`, via the kernel of `[basis(self) | basis(other)]`.
    pub fn intersect(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.check(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let cols: Vec<Vec<S>> = self.rows.iter().chain(&other.rows).cloned().collect();
        let m = Matrix::from_columns(self.ambient, &cols)?;
        let k = m.kernel();
        let a = self.dim();
        let mut out = Subspace::zero(self.ambient);
        for v in k.basis() {
            out.insert(&self.combine(&v[..a])?)?;
        }
        Ok(out)
    }
}

impl<S> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.rows.len(), self.ambient)
    }
}

/// The `i`-th standard basis vector of `S^n`.
pub fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// `a + b`.
pub fn vadd<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect()
}

/// `a - b`.
pub fn vsub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.sub_ref(y)).collect()
}

/// `c · a`.
pub fn vscale<S: Scalar>(c: &S, a: &[S]) -> Vec<S> {
    a.iter().map(|x| c.mul_ref(x)).collect()
}

/// True when every entry is zero.
pub fn is_zero_vec<S: Scalar>(a: &[S]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Coordinates with respect to an arbitrary (not necessarily RREF) basis.
///
/// Keeps the RREF of the basis together with the transform expressing each
/// RREF row in terms of the original vectors.
#[derive(Clone)]
pub struct Coordinates<S> {
    span: Subspace<S>,
    transform: Vec<Vec<S>>,
    len: usize,
}

impl<S: Scalar> Coordinates<S> {
    /// Prepares coordinate extraction for the given linearly independent vectors.
    pub fn new(ambient: usize, basis: &[Vec<S>]) -> Result<Self> {
        let k = basis.len();
        let rows: Vec<Vec<S>> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                if b.len() != ambient {
                    return Err(Error::DimensionMismatch { expected: ambient, found: b.len() });
                }
                let mut r = b.clone();
                r.extend(unit::<S>(k, i));
                Ok(r)
            })
            .collect::<Result<_>>()?;
        let (m, pivots) = Matrix::from_rows(ambient + k, rows)?.rref();
        let rank = pivots.iter().filter(|&&p| p < ambient).count();
        if rank != k {
            return Err(Error::Construction(format!("basis of {k} vectors has rank {rank}")));
        }
        let span = Subspace::span(ambient, (0..k).map(|i| m.row(i)[..ambient].to_vec()))?;
        let transform = (0..k).map(|i| m.row(i)[ambient..].to_vec()).collect();
        Ok(Coordinates { span, transform, len: k })
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[S]) -> Result<Option<Vec<S>>> {
        let Some(c) = self.span.coords(v)? else {
            return Ok(None);
        };
        let mut out = vec![S::zero(); self.len];
        for (ci, t) in c.iter().zip(&self.transform) {
            if ci.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(t) {
                o.add_mul_assign(ci, x);
            }
        }
        Ok(Some(out))
    }

    /// The span of the basis.
    pub fn span(&self) -> &Subspace<S> {
        &self.span
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(v: i64) -> Rational {
        Rational::integer(v)
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(Matrix::<Rational>::identity(3).kernel().is_zero());
        assert_eq!(Matrix::<Rational>::zeros(2, 5).kernel().dim(), 5);
    }

    #[test]
    fn solve_and_inconsistent() {
        let m = Matrix::from_rows(2, vec![vec![q(1), q(1)], vec![q(2), q(2)]]).unwrap();
        let x = m.solve(&[q(3), q(6)]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![q(3), q(6)]);
        assert!(m.solve(&[q(3), q(5)]).unwrap().is_none());
    }

    #[test]
    fn coordinates_in_arbitrary_basis() {
        let b = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let c = Coordinates::new(3, &b).unwrap();
        assert_eq!(c.coords(&[q(2), q(5), q(3)]).unwrap(), Some(vec![q(2), q(3)]));
        assert_eq!(c.coords(&[q(1), q(0), q(0)]).unwrap(), None);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Subspace::<Rational>::full(2);
        let b = Subspace::<Rational>::full(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.contains(&[q(1)]).is_err());
    }
}
