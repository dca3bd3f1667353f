//! The constraint system on the Toeplitz coefficient vector.
//!
//! The coefficient vector must satisfy elementwise power-sum conditions on
//! the Toeplitz matrix.  A binomial transform turns those conditions into a
//! triangular system of equations: the equation of order `m` is a degree-`m`
//! form whose left-hand side is a weighted sum of monomials generated from
//! integer partitions, and whose right-hand side is an exact alternating sum
//! with a Stirling-number closed form.
//!
//! Left-hand sides are symbolic ([`PartitionMonomial`]); right-hand sides are
//! exact integers (rationals for general polynomial profiles) all the way to
//! the solver boundary.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::combinatorics::{binomial, factorial, multiplicity_factor, partitions, stirling2};
use crate::error::{Error, Result};
use crate::polybasis::PolynomialSpec;
use crate::real::{real_from_ibig, real_from_usize, Real, GUARD_BITS};

/// One weighted monomial `weight · Π_p a_p^{e_p}` of a constraint left-hand
/// side.  Indices are stored in the ascending math convention `a_1..a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMonomial {
    /// Positive integer weight.
    pub weight: IBig,
    /// Map from coefficient index `p` (1-based) to its exponent.
    pub powers: BTreeMap<usize, u32>,
}

impl PartitionMonomial {
    /// Total degree `Σ e_p`.
    pub fn total_degree(&self) -> u32 {
        self.powers.values().sum()
    }

    /// Largest coefficient index appearing in the monomial.
    pub fn max_index(&self) -> usize {
        self.powers.keys().next_back().copied().unwrap_or(0)
    }

    /// Evaluate at the coefficient values `a_1..a_k` (slice index `p − 1`).
    pub fn eval(&self, a: &[Real]) -> Real {
        let mut acc = Real::from(self.weight.clone());
        for (&idx, &exp) in &self.powers {
            acc = acc * a[idx - 1].powi(IBig::from(exp));
        }
        acc
    }
}

/// One equation of the triangular system: symbolic left-hand side and exact
/// right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaEquation {
    /// Order of the equation (the degree of every monomial on the left).
    pub m: usize,
    /// Degree of the interaction polynomial.
    pub k: usize,
    pub lhs: Vec<PartitionMonomial>,
    pub rhs: RBig,
}

/// Power-sum target `ξ_{nk} = (k+1)[(n+1)^k − 1]`.
pub fn xi_target(n: u64, k: u64) -> IBig {
    assert!(k >= 1);
    let pow = IBig::from(n + 1).pow(k as usize);
    IBig::from(k + 1) * (pow - IBig::ONE)
}

/// Exact right-hand side of the order-`m` equation for the pure power `x^k`:
/// the alternating sum `(k+1) Σ_j (−1)^{j+m} C(m,j)[(j+1)^k − 1]`.
///
/// The Stirling closed form `(k+1)·m!·S(k+1, m+1)` is computed alongside;
/// disagreement would be an internal transcription fault and panics.
pub fn eta_rhs_power(m: u64, k: u64) -> IBig {
    assert!(m >= 1 && m <= k, "need 1 <= m <= k");
    let mut alternating = IBig::ZERO;
    for j in 1..=m {
        let sign = if (j + m) % 2 == 0 { IBig::ONE } else { -IBig::ONE };
        let pow = IBig::from(j + 1).pow(k as usize) - IBig::ONE;
        alternating += sign * binomial(m, j as i64) * pow;
    }
    alternating *= IBig::from(k + 1);
    let closed =
        IBig::from(k + 1) * IBig::from(factorial(m)) * stirling2(k + 1, m + 1);
    assert_eq!(
        alternating, closed,
        "alternating sum disagrees with the Stirling closed form at m={m}, k={k}"
    );
    alternating
}

/// Exact right-hand side of the order-`m` equation for a general polynomial
/// profile: `(k+1) Σ_j (−1)^{j+m} C(m,j)[P(j+1) − P(1)]`.
///
/// Anchoring the bracket at `P(1)` (rather than the literal constant 1)
/// keeps the unit-separation coupling consistent: the solver divides these
/// values by `P(1)` and the MPO carries `P(1)` as an overall scale on the
/// opening operator, so extracted pair couplings equal `β^r P(r)` at every
/// separation `r ≥ 1`.  For `P(x) = x^k` this reduces exactly to
/// [`eta_rhs_power`].
pub fn eta_rhs_general(m: u64, poly: &PolynomialSpec) -> RBig {
    let k = poly.degree() as u64;
    assert!(m >= 1 && m <= k, "need 1 <= m <= k");
    let at_one = poly.value_at_one();
    let mut acc = RBig::ZERO;
    for j in 1..=m {
        let sign = if (j + m) % 2 == 0 { RBig::ONE } else { -RBig::ONE };
        let bracket = poly.eval(j + 1) - &at_one;
        acc += sign * RBig::from(binomial(m, j as i64)) * bracket;
    }
    acc * RBig::from(IBig::from(k + 1))
}

/// Symbolic left-hand side of the order-`m` equation: the leading monomial
/// `(k+1−m)·a_1^m` plus, for each excess `q = 1..k−m`, monomials weighted by
/// `(k+1−m−q)` times the arrangement count of each partition of `q` into at
/// most `m` pieces, padded with 1-parts to total length `m`.
pub fn build_eta_lhs(m: usize, k: usize) -> Vec<PartitionMonomial> {
    assert!(m >= 1 && m <= k, "need 1 <= m <= k");
    let mut out = vec![PartitionMonomial {
        weight: IBig::from(k + 1 - m),
        powers: BTreeMap::from([(1usize, m as u32)]),
    }];
    for q in 1..=(k - m) {
        for p in partitions(q as u32, m as u32) {
            let mut powers: BTreeMap<usize, u32> = p
                .iter()
                .map(|(value, mult)| (value as usize + 1, mult))
                .collect();
            let padding = m as u32 - p.piece_count();
            if padding > 0 {
                powers.insert(1, padding);
            }
            let weight =
                IBig::from(k + 1 - m - q) * IBig::from(multiplicity_factor(m as u32, &p));
            out.push(PartitionMonomial { weight, powers });
        }
    }
    out
}

/// The full triangular system for the pure power `x^k`, orders `m = 1..k`.
pub fn eta_system_power(k: usize) -> Vec<EtaEquation> {
    (1..=k)
        .map(|m| EtaEquation {
            m,
            k,
            lhs: build_eta_lhs(m, k),
            rhs: RBig::from(eta_rhs_power(m as u64, k as u64)),
        })
        .collect()
}

/// The full triangular system for a general polynomial profile, normalized
/// by `P(1)` so that the solved vector satisfies the power-sum conditions of
/// `Q(x) = P(x)/P(1)`.
///
/// Fails with [`Error::ZeroAtUnitSeparation`] when `P(1) = 0`.
pub fn eta_system_polynomial(poly: &PolynomialSpec) -> Result<Vec<EtaEquation>> {
    let k = poly.degree();
    let at_one = poly.value_at_one();
    if at_one == RBig::ZERO {
        return Err(Error::ZeroAtUnitSeparation);
    }
    Ok((1..=k)
        .map(|m| EtaEquation {
            m,
            k,
            lhs: build_eta_lhs(m, k),
            rhs: eta_rhs_general(m as u64, poly) / &at_one,
        })
        .collect())
}

fn working_precision(a: &[Real]) -> usize {
    let p = a.iter().map(|v| v.precision()).max().unwrap_or(0);
    assert!(p > 0, "coefficient values must carry a finite precision");
    p
}

/// Coefficients of the shift-matrix expansion of the `n`-th Toeplitz power,
/// by the single-`n` recursion
/// `c_0 = 1, c_m = (1/m) Σ_j [j(n+1) − m] a_j c_{m−j}`.
///
/// Returns `(c_0, …, c_k)` at the precision carried by `a`.
pub fn c_coeffs(n: u64, a: &[Real]) -> Vec<Real> {
    let k = a.len();
    let p = working_precision(a);
    let pw = p + GUARD_BITS;
    let aw: Vec<Real> = a
        .iter()
        .map(|v| v.clone().with_precision(pw).value())
        .collect();
    let mut c: Vec<Real> = Vec::with_capacity(k + 1);
    c.push(real_from_usize(1, pw));
    for m in 1..=k {
        let mut acc = Real::ZERO;
        for j in 1..=m {
            let factor = IBig::from(j as u64 * (n + 1)) - IBig::from(m);
            acc = acc + real_from_ibig(&factor, pw) * &aw[j - 1] * &c[m - j];
        }
        c.push(acc / real_from_usize(m, pw));
    }
    c.into_iter()
        .map(|v| v.with_precision(p).value())
        .collect()
}

/// The same coefficients by the cross-`n` convolution recursion
/// `c_j^{(n)} = c_j^{(n−1)} + Σ_p a_p c_{j−p}^{(n−1)}`, starting from
/// `c_j^{(0)} = δ_{j0}`.
pub fn c_coeffs_convolution(n: u64, a: &[Real]) -> Vec<Real> {
    let k = a.len();
    let p = working_precision(a);
    let pw = p + GUARD_BITS;
    let aw: Vec<Real> = a
        .iter()
        .map(|v| v.clone().with_precision(pw).value())
        .collect();
    let mut row: Vec<Real> = vec![Real::ZERO; k + 1];
    row[0] = real_from_usize(1, pw);
    for _ in 0..n {
        let mut next = row.clone();
        for j in 1..=k {
            let mut acc = row[j].clone();
            for q in 1..=j {
                acc = acc + &aw[q - 1] * &row[j - q];
            }
            next[j] = acc;
        }
        row = next;
    }
    row.into_iter()
        .map(|v| v.with_precision(p).value())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{real_from_usize, rel_err_f64};

    #[test]
    fn xi_values() {
        assert_eq!(xi_target(1, 1), IBig::from(2));
        for k in 1..=8 {
            assert_eq!(xi_target(0, k), IBig::ZERO);
        }
        assert_eq!(xi_target(2, 4), IBig::from(400));
    }

    #[test]
    fn eta_rhs_power_k4_system() {
        assert_eq!(eta_rhs_power(4, 4), IBig::from(120));
        assert_eq!(eta_rhs_power(3, 4), IBig::from(300));
        assert_eq!(eta_rhs_power(2, 4), IBig::from(250));
        assert_eq!(eta_rhs_power(1, 4), IBig::from(75));
    }

    #[test]
    fn eta_rhs_power_factorial_diagonal() {
        for k in 1..=8u64 {
            assert_eq!(
                eta_rhs_power(k, k),
                IBig::from(factorial(k + 1)),
                "eta_kk for k={k}"
            );
        }
        assert_eq!(eta_rhs_power(1, 1), IBig::from(2));
    }

    #[test]
    fn eta_closed_form_agreement_through_k15() {
        // eta_rhs_power asserts internally; exercising it over the grid is
        // the cross-check.
        for k in 1..=15u64 {
            for m in 1..=k {
                let _ = eta_rhs_power(m, k);
            }
        }
    }

    #[test]
    fn binomial_transform_round_trip() {
        for k in 1..=10u64 {
            for m in 1..=k {
                let mut acc = IBig::ZERO;
                for j in 1..=m {
                    acc += binomial(m, j as i64) * eta_rhs_power(j, k);
                }
                assert_eq!(acc, xi_target(m, k), "m={m}, k={k}");
            }
        }
    }

    /// Direct evaluation of the alternating sum, written independently of
    /// `eta_rhs_general`.
    fn eta_general_oracle(m: u64, poly: &PolynomialSpec) -> RBig {
        let k = poly.degree() as u64;
        let mut acc = RBig::ZERO;
        for j in 0..=m {
            let mut term = RBig::from(binomial(m, j as i64))
                * (poly.eval(j + 1) - poly.value_at_one());
            if (j + m) % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        acc * RBig::from(IBig::from(k + 1))
    }

    #[test]
    fn eta_general_reduces_to_power() {
        for k in 1..=6 {
            let poly = PolynomialSpec::power(k);
            for m in 1..=k as u64 {
                assert_eq!(
                    eta_rhs_general(m, &poly),
                    RBig::from(eta_rhs_power(m, k as u64)),
                    "m={m}, k={k}"
                );
            }
        }
    }

    #[test]
    fn eta_general_pinned_values() {
        // P(x) = 2x: doubled linear coupling
        let doubled = PolynomialSpec::new(vec![RBig::from(2)], RBig::ONE).unwrap();
        assert_eq!(eta_rhs_general(1, &doubled), RBig::from(4));
        assert_eq!(eta_general_oracle(1, &doubled), RBig::from(4));
        // P(x) = x + x^2
        let quad =
            PolynomialSpec::new(vec![RBig::ONE, RBig::ONE], RBig::ONE).unwrap();
        assert_eq!(eta_rhs_general(2, &quad), eta_general_oracle(2, &quad));
        assert_eq!(eta_rhs_general(2, &quad), RBig::from(6));
        assert_eq!(eta_rhs_general(1, &quad), RBig::from(12));
    }

    fn monomial(weight: i64, powers: &[(usize, u32)]) -> PartitionMonomial {
        PartitionMonomial {
            weight: IBig::from(weight),
            powers: powers.iter().copied().collect(),
        }
    }

    #[test]
    fn eta_lhs_k4_cases() {
        assert_eq!(build_eta_lhs(4, 4), vec![monomial(1, &[(1, 4)])]);
        let got = build_eta_lhs(3, 4);
        assert_eq!(got.len(), 2);
        assert!(got.contains(&monomial(2, &[(1, 3)])));
        assert!(got.contains(&monomial(3, &[(1, 2), (2, 1)])));
        let got = build_eta_lhs(2, 4);
        assert_eq!(got.len(), 4);
        assert!(got.contains(&monomial(3, &[(1, 2)])));
        assert!(got.contains(&monomial(4, &[(1, 1), (2, 1)])));
        assert!(got.contains(&monomial(2, &[(1, 1), (3, 1)])));
        assert!(got.contains(&monomial(1, &[(2, 2)])));
        let got = build_eta_lhs(1, 4);
        assert_eq!(
            got,
            vec![
                monomial(4, &[(1, 1)]),
                monomial(3, &[(2, 1)]),
                monomial(2, &[(3, 1)]),
                monomial(1, &[(4, 1)]),
            ]
        );
    }

    #[test]
    fn eta_lhs_structural_invariants() {
        for k in 1..=12usize {
            for m in 1..=k {
                for mono in build_eta_lhs(m, k) {
                    assert_eq!(mono.total_degree(), m as u32, "degree at m={m}, k={k}");
                    assert!(
                        mono.max_index() <= k - m + 1,
                        "index bound violated at m={m}, k={k}: {mono:?}"
                    );
                    assert!(mono.weight > IBig::ZERO);
                }
            }
        }
    }

    #[test]
    fn c_coeffs_base_cases() {
        let p = 192;
        let a: Vec<Real> = [2usize, 3, 5]
            .iter()
            .map(|&v| real_from_usize(v, p))
            .collect();
        let c1 = c_coeffs(1, &a);
        assert_eq!(c1[0], real_from_usize(1, p));
        for (got, want) in c1[1..].iter().zip(&a) {
            assert_eq!(got, want);
        }
        let c0 = c_coeffs(0, &a);
        assert_eq!(c0[0], real_from_usize(1, p));
        for v in &c0[1..] {
            assert!(v.repr().is_zero());
        }
    }

    #[test]
    fn c_coeffs_square_of_k1() {
        let a = vec![real_from_usize(2, 128)];
        let c = c_coeffs(2, &a);
        assert_eq!(c[0], real_from_usize(1, 128));
        assert_eq!(c[1], real_from_usize(4, 128));
    }

    #[test]
    fn miller_matches_convolution() {
        let p = 256;
        for k in 1..=6usize {
            let a: Vec<Real> = (1..=k)
                .map(|i| real_from_usize(2 * i + 1, p) / real_from_usize(2, p))
                .collect();
            for n in 0..=8u64 {
                let miller = c_coeffs(n, &a);
                let conv = c_coeffs_convolution(n, &a);
                for (x, y) in miller.iter().zip(&conv) {
                    assert!(
                        rel_err_f64(x, y) < 1e-70,
                        "k={k}, n={n}: {x:?} vs {y:?}"
                    );
                }
            }
        }
    }
}
