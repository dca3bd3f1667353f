//! Minimal dense matrices over the scalar types used in this crate.
//!
//! Nothing here is tuned: the largest matrices are `(k+1)×(k+1)` Toeplitz
//! blocks, `k+3` MPO grids, and desk-scale Kronecker products capped at
//! 4096×4096 doubles.

use alloc::vec;
use alloc::vec::Vec;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::real::Real;

/// Ring operations needed by the matrix routines.
pub trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl Scalar for IBig {
    fn zero() -> Self {
        IBig::ZERO
    }
    fn one() -> Self {
        IBig::ONE
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for RBig {
    fn zero() -> Self {
        RBig::ZERO
    }
    fn one() -> Self {
        RBig::ONE
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for Real {
    fn zero() -> Self {
        Real::ZERO
    }
    fn one() -> Self {
        Real::ONE
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                for j in 0..rhs.cols {
                    let t = a.mul(rhs.get(l, j));
                    let cur = out.get(i, j).add(&t);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        let data = self.data.iter().map(|a| a.mul(factor)).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `n`-th power by repeated multiplication.
    pub fn pow(&self, n: usize) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut out = Self::identity(self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        out.set(i * rhs.rows + p, j * rhs.cols + q, a.mul(rhs.get(p, q)));
                    }
                }
            }
        }
        out
    }

    /// Sum of all entries.
    pub fn element_sum(&self) -> T {
        let mut acc = T::zero();
        for v in &self.data {
            acc = acc.add(v);
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl Matrix<f64> {
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for v in &self.data {
            let a = if *v < 0.0 { -*v } else { *v };
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut m = 0.0f64;
        for (a, b) in self.data.iter().zip(&rhs.data) {
            let d = a - b;
            let d = if d < 0.0 { -d } else { d };
            if d > m {
                m = d;
            }
        }
        m
    }
}

impl Matrix<Real> {
    /// Round every entry to `bits` bits.
    pub fn with_precision(&self, bits: usize) -> Self {
        self.map(|v| v.clone().with_precision(bits).value())
    }

    pub fn max_abs_real(&self) -> Real {
        use dashu_base::Abs;
        let mut m = Real::ZERO;
        for v in &self.data {
            let a = v.clone().abs();
            if a > m {
                m = a;
            }
        }
        m
    }
}
