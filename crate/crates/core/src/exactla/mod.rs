//! Exact scalars over the rationals and prime fields, and the dense matrix
//! kernel used by everything else. Nothing here touches floating point.

mod dense;
mod field;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use dense::{Dense, FieldOps, PrimeOps, RationalOps};
pub use field::{FieldSpec, Prime, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("entries from different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),
    #[error("{0} is not a prime in [2, 65536)")]
    NotPrime(u32),
    #[error("unknown field {0:?}")]
    InvalidField(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Inner {
    Q(Dense<RationalOps>),
    Fp(Dense<PrimeOps>),
}

macro_rules! map_inner {
    ($inner:expr, $m:ident => $body:expr) => {
        match $inner {
            Inner::Q($m) => Inner::Q($body),
            Inner::Fp($m) => Inner::Fp($body),
        }
    };
}

macro_rules! with_inner {
    ($inner:expr, $m:ident => $body:expr) => {
        match $inner {
            Inner::Q($m) => $body,
            Inner::Fp($m) => $body,
        }
    };
}

macro_rules! zip_inner {
    ($a:expr, $b:expr, $x:ident, $y:ident => $body:expr) => {
        match ($a, $b) {
            (Inner::Q($x), Inner::Q($y)) => Ok(Inner::Q($body)),
            (Inner::Fp($x), Inner::Fp($y)) if $x.ops == $y.ops => Ok(Inner::Fp($body)),
            _ => Err(LinalgError::FieldMismatch),
        }
    };
}

/// A dense matrix whose entries all live in one exact field.
///
/// Mixed-field entries are rejected at construction, so every value of this
/// type satisfies the single-field invariant.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix {
    inner: Inner,
}

/// Output of [`ExactMatrix::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    pub reduced: ExactMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let inner = match field {
            FieldSpec::Rationals => Inner::Q(Dense::zeros(RationalOps, rows, cols)),
            FieldSpec::PrimeField(p) => Inner::Fp(Dense::zeros(PrimeOps { p: p.get() }, rows, cols)),
        };
        ExactMatrix { inner }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let inner = match field {
            FieldSpec::Rationals => Inner::Q(Dense::identity(RationalOps, n)),
            FieldSpec::PrimeField(p) => Inner::Fp(Dense::identity(PrimeOps { p: p.get() }, n)),
        };
        ExactMatrix { inner }
    }

    /// Builds a matrix from integer entries (row-major), reducing into the field.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        let mut m = Self::zeros(field, rows, cols);
        for (k, &v) in entries.iter().enumerate() {
            m.set_unchecked(k / cols.max(1), k % cols.max(1), field.from_int(v));
        }
        m
    }

    /// Builds a matrix from rows of scalars. `cols` is needed for matrices
    /// without rows.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::ShapeError(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, s) in row.iter().enumerate() {
                field.check(s)?;
                m.set_unchecked(i, j, s.clone());
            }
        }
        Ok(m)
    }

    /// A single column vector.
    pub fn column_vector(field: FieldSpec, entries: &[Scalar]) -> Result<Self, LinalgError> {
        let rows: Vec<Vec<Scalar>> = entries.iter().map(|s| vec![s.clone()]).collect();
        Self::from_rows(field, 1, &rows)
    }

    pub fn field(&self) -> FieldSpec {
        match &self.inner {
            Inner::Q(_) => FieldSpec::Rationals,
            Inner::Fp(m) => FieldSpec::prime(m.ops.p).expect("stored prime is valid"),
        }
    }

    pub fn rows(&self) -> usize {
        with_inner!(&self.inner, m => m.rows)
    }

    pub fn cols(&self) -> usize {
        with_inner!(&self.inner, m => m.cols)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match &self.inner {
            Inner::Q(m) => Scalar::Rational(m.at(r, c).clone()),
            Inner::Fp(m) => Scalar::Prime(*m.at(r, c)),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) -> Result<(), LinalgError> {
        self.field().check(&value)?;
        self.set_unchecked(r, c, value);
        Ok(())
    }

    fn set_unchecked(&mut self, r: usize, c: usize, value: Scalar) {
        match (&mut self.inner, value) {
            (Inner::Q(m), Scalar::Rational(q)) => m.set(r, c, q),
            (Inner::Fp(m), Scalar::Prime(v)) => m.set(r, c, v),
            _ => unreachable!("scalar kind checked by caller"),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        with_inner!(&self.inner, m => m.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows() == self.cols() && *self == Self::identity(self.field(), self.rows())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols() != other.rows() {
            return Err(LinalgError::ShapeError(format!(
                "cannot multiply {:?} by {:?}",
                self.shape(),
                other.shape()
            )));
        }
        zip_inner!(&self.inner, &other.inner, a, b => a.mul(b)).map(|inner| ExactMatrix { inner })
    }

    fn checked_zip(&self, other: &Self, add: bool) -> Result<Self, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeError(format!(
                "cannot combine {:?} with {:?}",
                self.shape(),
                other.shape()
            )));
        }
        zip_inner!(&self.inner, &other.inner, a, b => {
            if add { a.zip_with(b, |o, x, y| o.add(x, y)) } else { a.zip_with(b, |o, x, y| o.sub(x, y)) }
        })
        .map(|inner| ExactMatrix { inner })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.checked_zip(other, true)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.checked_zip(other, false)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let inner = match (&self.inner, s) {
            (Inner::Q(m), Scalar::Rational(q)) => Inner::Q(m.scale(q)),
            (Inner::Fp(m), Scalar::Prime(v)) => Inner::Fp(m.scale(&(v % m.ops.p))),
            _ => panic!("scalar from a different field"),
        };
        ExactMatrix { inner }
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix { inner: map_inner!(&self.inner, m => m.transpose()) }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows(), other.rows(), "hstack row mismatch");
        ExactMatrix {
            inner: zip_inner!(&self.inner, &other.inner, a, b => a.hstack(b)).expect("hstack field mismatch"),
        }
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.cols(), "vstack column mismatch");
        ExactMatrix {
            inner: zip_inner!(&self.inner, &other.inner, a, b => a.vstack(b)).expect("vstack field mismatch"),
        }
    }

    /// Concatenates many matrices side by side; `rows` is used when empty.
    pub fn hconcat(field: FieldSpec, rows: usize, parts: &[ExactMatrix]) -> Self {
        parts
            .iter()
            .fold(Self::zeros(field, rows, 0), |acc, p| acc.hstack(p))
    }

    /// Stacks many matrices vertically; `cols` is used when empty.
    pub fn vconcat(field: FieldSpec, cols: usize, parts: &[ExactMatrix]) -> Self {
        parts
            .iter()
            .fold(Self::zeros(field, 0, cols), |acc, p| acc.vstack(p))
    }

    /// The submatrix on the given rows and columns (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        ExactMatrix { inner: map_inner!(&self.inner, m => m.select(rows, cols)) }
    }

    pub fn column(&self, j: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows()).collect();
        self.select(&rows, &[j])
    }

    pub fn columns(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows()).collect();
        self.select(&rows, cols)
    }

    pub fn row_range(&self, start: usize, len: usize) -> Self {
        let rows: Vec<usize> = (start..start + len).collect();
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.select(&rows, &cols)
    }

    /// Overwrites the block starting at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        match (&mut self.inner, &block.inner) {
            (Inner::Q(a), Inner::Q(b)) => a.set_block(r0, c0, b),
            (Inner::Fp(a), Inner::Fp(b)) if a.ops == b.ops => a.set_block(r0, c0, b),
            _ => panic!("set_block field mismatch"),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        ExactMatrix {
            inner: zip_inner!(&self.inner, &other.inner, a, b => a.kron(b)).expect("kron field mismatch"),
        }
    }

    /// Reduced row echelon form with leftmost-column pivoting.
    pub fn rref(&self) -> Rref {
        let (inner, pivots) = match &self.inner {
            Inner::Q(m) => {
                let (r, p) = m.rref();
                (Inner::Q(r), p)
            }
            Inner::Fp(m) => {
                let (r, p) = m.rref();
                (Inner::Fp(r), p)
            }
        };
        Rref { reduced: ExactMatrix { inner }, rank: pivots.len(), pivot_cols: pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the null space, in canonical free-variable order.
    pub fn kernel_basis(&self) -> Self {
        ExactMatrix { inner: map_inner!(&self.inner, m => m.kernel_basis()) }
    }

    /// A particular solution of `self · x = b` (free variables zero), or
    /// `None` when some column of `b` is not in the column space.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>, LinalgError> {
        if self.rows() != b.rows() {
            return Err(LinalgError::ShapeError(format!(
                "solve: lhs has {} rows, rhs has {}",
                self.rows(),
                b.rows()
            )));
        }
        let x = match (&self.inner, &b.inner) {
            (Inner::Q(a), Inner::Q(b)) => a.solve(b).map(Inner::Q),
            (Inner::Fp(a), Inner::Fp(b)) if a.ops == b.ops => a.solve(b).map(Inner::Fp),
            _ => return Err(LinalgError::FieldMismatch),
        };
        Ok(x.map(|inner| ExactMatrix { inner }))
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("matrix product: {e}"))
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("matrix sum: {e}"))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("matrix difference: {e}"))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { inner: map_inner!(&self.inner, m => m.scale(&m.ops.neg(&m.ops.one()))) }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix<{}>{:?}", self.field(), self.shape())?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// A subspace of `k^n`, stored as the nonzero rows of a reduced row echelon
/// basis. Two spans are equal iff their `Subspace` values are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient: usize,
    rref_rows: ExactMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, rref_rows: ExactMatrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Self::from_columns(&ExactMatrix::identity(field, ambient))
    }

    /// The span of the columns of `m`.
    pub fn from_columns(m: &ExactMatrix) -> Self {
        let r = m.transpose().rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        let cols: Vec<usize> = (0..m.rows()).collect();
        Subspace { ambient: m.rows(), rref_rows: r.reduced.select(&keep, &cols), pivots: r.pivot_cols }
    }

    pub fn field(&self) -> FieldSpec {
        self.rref_rows.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Canonical basis as columns (`n × dim`).
    pub fn basis(&self) -> ExactMatrix {
        self.rref_rows.transpose()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not hit by a pivot; the standard vectors there span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `(n - dim) × n` matrix of the projection `k^n -> k^n / U` in the
    /// coordinates of [`Self::complement_indices`].
    pub fn quotient_map(&self) -> ExactMatrix {
        let field = self.field();
        let free = self.complement_indices();
        let mut q = ExactMatrix::zeros(field, free.len(), self.ambient);
        let one = field.one();
        for (row, &j) in free.iter().enumerate() {
            q.set_unchecked(row, j, one.clone());
            for (i, &pc) in self.pivots.iter().enumerate() {
                let r = self.rref_rows.get(i, j);
                if !r.is_zero() {
                    q.set_unchecked(row, pc, neg_scalar(&r, field));
                }
            }
        }
        q
    }

    /// `n × (n - dim)` matrix whose columns are the complement standard vectors.
    pub fn lift_map(&self) -> ExactMatrix {
        let free = self.complement_indices();
        let id = ExactMatrix::identity(self.field(), self.ambient);
        id.columns(&free)
    }

    /// Whether every column of `m` lies in the subspace.
    pub fn contains(&self, m: &ExactMatrix) -> bool {
        (&self.quotient_map() * m).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        other.contains(&self.basis())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_columns(&self.basis().hstack(&other.basis()))
    }
}

fn neg_scalar(s: &Scalar, field: FieldSpec) -> Scalar {
    match (s, field) {
        (Scalar::Rational(q), _) => Scalar::Rational(-q),
        (Scalar::Prime(v), FieldSpec::PrimeField(p)) => Scalar::Prime((p.get() - v) % p.get()),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rref_duplicate_rows_f2() {
        let m = ExactMatrix::from_i64(f2(), 2, 2, &[1, 1, 1, 1]);
        let r = m.rref();
        assert_eq!(r.reduced, ExactMatrix::from_i64(f2(), 2, 2, &[1, 1, 0, 0]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn rref_identity_q() {
        let id = ExactMatrix::identity(q(), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_proportional_rows_q() {
        let m = ExactMatrix::from_i64(q(), 2, 2, &[2, 1, 4, 2]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced.get(0, 1), q().parse_scalar("1/2").unwrap());
        assert_eq!(r.reduced.to_rows()[1], vec![q().zero(), q().zero()]);
    }

    #[test]
    fn kernel_examples() {
        let k = ExactMatrix::from_i64(f2(), 2, 2, &[1, 1, 1, 1]).kernel_basis();
        assert_eq!(k, ExactMatrix::from_i64(f2(), 2, 1, &[1, 1]));
        let k = ExactMatrix::from_i64(q(), 2, 2, &[1, 2, 3, 4]).kernel_basis();
        assert_eq!(k.shape(), (2, 0));
        let k = ExactMatrix::zeros(q(), 2, 3).kernel_basis();
        assert_eq!(k, ExactMatrix::identity(q(), 3));
    }

    #[test]
    fn solve_examples() {
        let b = ExactMatrix::from_i64(q(), 2, 2, &[3, -1, 7, 5]);
        let x = ExactMatrix::identity(q(), 2).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);

        let a = ExactMatrix::from_i64(f2(), 1, 2, &[1, 1]);
        let x = a.solve(&ExactMatrix::from_i64(f2(), 1, 1, &[1])).unwrap().unwrap();
        assert_eq!(x, ExactMatrix::from_i64(f2(), 2, 1, &[1, 0]));

        let a = ExactMatrix::from_i64(q(), 2, 1, &[1, 1]);
        assert_eq!(a.solve(&ExactMatrix::from_i64(q(), 2, 1, &[1, 0])).unwrap(), None);

        let err = a.solve(&ExactMatrix::zeros(q(), 3, 1)).unwrap_err();
        assert!(matches!(err, LinalgError::ShapeError(_)));
    }

    #[test]
    fn mixed_fields_rejected() {
        let bad = ExactMatrix::from_rows(q(), 2, &[vec![q().one(), f2().one()]]);
        assert_eq!(bad.unwrap_err(), LinalgError::FieldMismatch);
        let a = ExactMatrix::identity(q(), 2);
        let b = ExactMatrix::identity(f2(), 2);
        assert_eq!(a.solve(&b).unwrap_err(), LinalgError::FieldMismatch);
        assert_eq!(a.checked_mul(&b).unwrap_err(), LinalgError::FieldMismatch);
        let f3 = ExactMatrix::identity(FieldSpec::prime(3).unwrap(), 2);
        assert_eq!(f3.checked_add(&b).unwrap_err(), LinalgError::FieldMismatch);
    }

    #[test]
    fn subspace_quotient_and_lift() {
        // U = span{(1,1,0)} in F_2^3
        let u = Subspace::from_columns(&ExactMatrix::from_i64(f2(), 3, 1, &[1, 1, 0]));
        assert_eq!(u.dim(), 1);
        assert_eq!(u.complement_indices(), vec![1, 2]);
        let qm = u.quotient_map();
        assert!((&qm * &u.basis()).is_zero());
        assert!((&qm * &u.lift_map()).is_identity());
        assert!(u.contains(&ExactMatrix::from_i64(f2(), 3, 1, &[1, 1, 0])));
        assert!(!u.contains(&ExactMatrix::from_i64(f2(), 3, 1, &[1, 0, 0])));
    }
}
