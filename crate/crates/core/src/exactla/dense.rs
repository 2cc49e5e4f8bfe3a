//! Field-generic dense matrices. `ExactMatrix` wraps one of the two
//! instantiations and dispatches.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) trait FieldOps: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RationalOps;

impl FieldOps for RationalOps {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PrimeOps {
    pub p: u32,
}

impl FieldOps for PrimeOps {
    type Elem = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "inverse of zero in F_p");
        t0.rem_euclid(self.p as i64) as u32
    }
}

/// Row-major dense matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense<F: FieldOps> {
    pub ops: F,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: FieldOps> Dense<F> {
    pub fn zeros(ops: F, rows: usize, cols: usize) -> Self {
        let data = vec![ops.zero(); rows * cols];
        Dense { ops, rows, cols, data }
    }

    pub fn identity(ops: F, n: usize) -> Self {
        let mut m = Self::zeros(ops, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.ops.one();
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.ops.is_zero(a))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let ops = &self.ops;
        let mut out = Self::zeros(ops.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if ops.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if ops.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = ops.add(&out.data[idx], &ops.mul(a, b));
                }
            }
        }
        out
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(&self.ops, a, b))
            .collect();
        Dense { ops: self.ops.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.ops.mul(a, s)).collect();
        Dense { ops: self.ops.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ops.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
            data.extend_from_slice(&other.data[i * other.cols..(i + 1) * other.cols]);
        }
        Dense { ops: self.ops.clone(), rows: self.rows, cols, data }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Dense { ops: self.ops.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.at(r, c).clone());
            }
        }
        Dense { ops: self.ops.clone(), rows: rows.len(), cols: cols.len(), data }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.at(i, j).clone());
            }
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.ops.clone(), self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if self.ops.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, self.ops.mul(a, other.at(k, l)));
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place Gauss-Jordan elimination. Pivots are only taken in columns
    /// `< pivot_limit`; the remaining columns are carried along. Returns the
    /// pivot columns.
    pub fn rref_in_place(&mut self, pivot_limit: usize) -> Vec<usize> {
        let ops = self.ops.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_limit.min(self.cols) {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !ops.is_zero(self.at(r, col))) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = ops.inv(self.at(row, col));
            for j in col..self.cols {
                let idx = row * self.cols + j;
                self.data[idx] = ops.mul(&self.data[idx], &inv);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.at(r, col).clone();
                if ops.is_zero(&factor) {
                    continue;
                }
                for j in col..self.cols {
                    let pv = &self.data[row * self.cols + j];
                    if ops.is_zero(pv) {
                        continue;
                    }
                    let delta = ops.mul(&factor, pv);
                    let idx = r * self.cols + j;
                    self.data[idx] = ops.sub(&self.data[idx], &delta);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(m.cols);
        (m, pivots)
    }

    /// Null-space basis as columns, one per free column in increasing order.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.ops.clone(), self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, self.ops.one());
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, self.ops.neg(r.at(i, f)));
            }
        }
        out
    }

    /// One solution of `self * x = b` with free variables set to zero.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place(self.cols);
        let rank = pivots.len();
        for i in rank..aug.rows {
            for j in self.cols..aug.cols {
                if !self.ops.is_zero(aug.at(i, j)) {
                    return None;
                }
            }
        }
        let mut x = Self::zeros(self.ops.clone(), self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.at(i, self.cols + j).clone());
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_inverse_roundtrip() {
        let ops = PrimeOps { p: 65521 };
        for a in [1u32, 2, 3, 1000, 65520] {
            assert_eq!(ops.mul(&a, &ops.inv(&a)), 1);
        }
    }

    #[test]
    fn kron_shape() {
        let ops = PrimeOps { p: 5 };
        let a = Dense::identity(ops, 2);
        let b = Dense { ops, rows: 1, cols: 2, data: vec![1, 2] };
        let k = a.kron(&b);
        assert_eq!((k.rows, k.cols), (2, 4));
        assert_eq!(k.data, vec![1, 2, 0, 0, 0, 0, 1, 2]);
    }
}
