//! Polynomial interaction specifications and the binomial-coefficient basis.
//!
//! A degree-`k` polynomial with no constant term expands uniquely over the
//! basis `{C(q+x, k)}`, `q = 0..k−1`; the change of basis is the closed-form
//! inverse of a Hankel matrix of binomial coefficients.  For `P(x) = x^k` the
//! weights are the Eulerian numbers, which doubles as a cross-module check.

use alloc::string::ToString;
use alloc::vec::Vec;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A polynomial interaction profile `P_k(x) = α_1 x + … + α_k x^k` together
/// with the exponential decay factor `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialSpec {
    alphas: Vec<RBig>,
    beta: RBig,
}

impl PolynomialSpec {
    /// Build from the coefficients `α_1..α_k` (no constant term by
    /// construction).  Requires `α_k ≠ 0` (true degree) and `β ≥ 0`.
    pub fn new(alphas: Vec<RBig>, beta: RBig) -> Result<Self> {
        let k = alphas.len();
        if k == 0 || alphas[k - 1] == RBig::ZERO {
            return Err(Error::NotTrueDegree(k));
        }
        if beta < RBig::ZERO {
            return Err(Error::NegativeBeta(beta.to_string()));
        }
        Ok(PolynomialSpec { alphas, beta })
    }

    /// The pure power `P(x) = x^k` with `β = 1`.
    pub fn power(k: usize) -> Self {
        assert!(k >= 1, "degree must be at least 1");
        let mut alphas = alloc::vec![RBig::ZERO; k];
        alphas[k - 1] = RBig::ONE;
        PolynomialSpec {
            alphas,
            beta: RBig::ONE,
        }
    }

    /// Replace the decay factor.
    pub fn with_beta(mut self, beta: RBig) -> Result<Self> {
        if beta < RBig::ZERO {
            return Err(Error::NegativeBeta(beta.to_string()));
        }
        self.beta = beta;
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.alphas.len()
    }

    /// Coefficients `α_1..α_k`.
    pub fn alphas(&self) -> &[RBig] {
        &self.alphas
    }

    pub fn beta(&self) -> &RBig {
        &self.beta
    }

    /// Exact evaluation at a non-negative integer.
    pub fn eval(&self, x: u64) -> RBig {
        let mut acc = RBig::ZERO;
        let mut power = IBig::ONE;
        for alpha in &self.alphas {
            power *= IBig::from(x);
            acc += alpha * RBig::from(power.clone());
        }
        acc
    }

    /// `P(1) = Σ α_i`, the coupling amplitude at unit separation.
    pub fn value_at_one(&self) -> RBig {
        self.alphas.iter().fold(RBig::ZERO, |acc, a| acc + a)
    }

    /// True when this is exactly the pure power `x^k`.
    pub fn is_pure_power(&self) -> bool {
        let k = self.alphas.len();
        self.alphas[k - 1] == RBig::ONE
            && self.alphas[..k - 1].iter().all(|a| *a == RBig::ZERO)
    }
}

/// Weights of a polynomial over the binomial-coefficient basis:
/// `P_k(x) = Σ_q C(q+x, k) W_{kq}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisWeights {
    pub k: usize,
    pub weights: Vec<RBig>,
}

/// The `k×k` Hankel matrix `H_{ij} = C(i+j−1, k)` (indices from 1).
pub fn hankel_matrix(k: usize) -> Matrix<IBig> {
    assert!(k >= 1);
    let mut h = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            h.set(i, j, binomial((i + j + 1) as u64, k as i64));
        }
    }
    h
}

/// Closed-form inverse `[H^{-1}]_{ij} = (−1)^{k+1−(i+j)} C(k+1, k+1−(i+j))`
/// (indices from 1).  The product `H · H^{-1}` is checked against the
/// identity at construction; a mismatch is a transcription fault and panics.
pub fn hankel_inverse(k: usize) -> Matrix<IBig> {
    assert!(k >= 1);
    let mut inv = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let t = k as i64 + 1 - (i + j + 2) as i64;
            let b = binomial((k + 1) as u64, t);
            if b == IBig::ZERO {
                continue;
            }
            let entry = if t % 2 == 0 { b } else { -b };
            inv.set(i, j, entry);
        }
    }
    let product = hankel_matrix(k).mul(&inv);
    assert_eq!(
        product,
        Matrix::identity(k),
        "closed-form Hankel inverse failed the identity check for k={k}"
    );
    inv
}

/// Expand `poly` over the binomial-coefficient basis by applying the exact
/// Hankel inverse to the vector `(P(1), …, P(k))`.
pub fn basis_weights(poly: &PolynomialSpec) -> BasisWeights {
    let k = poly.degree();
    let inv = hankel_inverse(k);
    let mut weights = Vec::with_capacity(k);
    for i in 0..k {
        let mut acc = RBig::ZERO;
        for j in 0..k {
            acc += RBig::from(inv.get(i, j).clone()) * poly.eval((j + 1) as u64);
        }
        weights.push(acc);
    }
    BasisWeights { k, weights }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::eulerian;
    use alloc::vec;

    fn rb(n: i64) -> RBig {
        RBig::from(n)
    }

    #[test]
    fn hankel_small_cases() {
        let h1 = hankel_matrix(1);
        assert_eq!(*h1.get(0, 0), IBig::ONE);
        let h2 = hankel_matrix(2);
        let want = Matrix::from_rows(vec![
            vec![IBig::ZERO, IBig::ONE],
            vec![IBig::ONE, IBig::from(3)],
        ]);
        assert_eq!(h2, want);
        // entry (2,3) of H^(3) is C(4,3) = 4
        assert_eq!(*hankel_matrix(3).get(1, 2), IBig::from(4));
    }

    #[test]
    fn hankel_inverse_small_cases() {
        assert_eq!(*hankel_inverse(1).get(0, 0), IBig::ONE);
        let want = Matrix::from_rows(vec![
            vec![IBig::from(-3), IBig::ONE],
            vec![IBig::ONE, IBig::ZERO],
        ]);
        assert_eq!(hankel_inverse(2), want);
    }

    #[test]
    fn hankel_inverse_identity_through_k12() {
        for k in 1..=12 {
            let product = hankel_matrix(k).mul(&hankel_inverse(k));
            assert_eq!(product, Matrix::identity(k), "k={k}");
        }
    }

    #[test]
    fn eulerian_weights_for_pure_powers() {
        for k in 1..=10usize {
            let w = basis_weights(&PolynomialSpec::power(k));
            for q in 0..k {
                assert_eq!(
                    w.weights[q],
                    RBig::from(eulerian(k as u64, q as u64)),
                    "k={k}, q={q}"
                );
            }
        }
    }

    #[test]
    fn weights_small_cases() {
        let w1 = basis_weights(&PolynomialSpec::power(1));
        assert_eq!(w1.weights, vec![rb(1)]);
        let w2 = basis_weights(&PolynomialSpec::power(2));
        assert_eq!(w2.weights, vec![rb(1), rb(1)]);
    }

    #[test]
    fn reconstruction_identity() {
        // Σ_q C(q+x, k) W_kq = P(x) exactly at integer x in [1, 2k]
        let polys = [
            PolynomialSpec::power(4),
            PolynomialSpec::new(vec![rb(1), rb(0), rb(1)], RBig::ONE).unwrap(),
            PolynomialSpec::new(vec![rb(0), rb(2), rb(0), rb(1)], RBig::ONE).unwrap(),
            PolynomialSpec::new(
                vec![RBig::from_parts(IBig::from(1), 3u8.into()), rb(-2), rb(5)],
                RBig::ONE,
            )
            .unwrap(),
        ];
        for poly in &polys {
            let k = poly.degree();
            let w = basis_weights(poly);
            for x in 1..=(2 * k as u64) {
                let mut acc = RBig::ZERO;
                for q in 0..k {
                    acc += RBig::from(binomial(q as u64 + x, k as i64)) * &w.weights[q];
                }
                assert_eq!(acc, poly.eval(x), "x={x}");
            }
        }
    }

    /// Independent oracle: fraction-free Gaussian elimination on the defining
    /// linear system, kept out of the production path.
    fn solve_dense_rational(h: &Matrix<IBig>, rhs: &[RBig]) -> Vec<RBig> {
        let n = rhs.len();
        let mut a: Vec<Vec<RBig>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| RBig::from(h.get(i, j).clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut b = rhs.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r][col] != RBig::ZERO)
                .expect("singular system");
            a.swap(col, pivot);
            b.swap(col, pivot);
            let p = a[col][col].clone();
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let sub = &factor * &a[col][c];
                    a[r][c] -= sub;
                }
                let sub = factor * &b[col];
                b[r] -= sub;
            }
        }
        (0..n).map(|i| &b[i] / &a[i][i]).collect()
    }

    #[test]
    fn closed_form_matches_generic_solve() {
        let polys = [
            PolynomialSpec::power(5),
            PolynomialSpec::new(vec![rb(3), rb(0), rb(-1), rb(2)], RBig::ONE).unwrap(),
        ];
        for poly in &polys {
            let k = poly.degree();
            let rhs: Vec<RBig> = (1..=k as u64).map(|x| poly.eval(x)).collect();
            let generic = solve_dense_rational(&hankel_matrix(k), &rhs);
            assert_eq!(basis_weights(poly).weights, generic);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            PolynomialSpec::new(vec![rb(1), rb(0)], RBig::ONE),
            Err(Error::NotTrueDegree(2))
        ));
        assert!(matches!(
            PolynomialSpec::new(vec![], RBig::ONE),
            Err(Error::NotTrueDegree(0))
        ));
        assert!(PolynomialSpec::new(vec![rb(1)], rb(-1)).is_err());
        let p = PolynomialSpec::new(vec![rb(1), rb(1)], RBig::ONE).unwrap();
        assert_eq!(p.eval(3), rb(12));
        assert_eq!(p.value_at_one(), rb(2));
        assert!(!p.is_pure_power());
        assert!(PolynomialSpec::power(3).is_pure_power());
    }
}
