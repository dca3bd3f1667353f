//! Exact integer combinatorics: binomials, Stirling and Eulerian numbers,
//! integer partitions, and arrangement counts.
//!
//! All integer-valued quantities are computed in arbitrary-width arithmetic;
//! constraint right-hand sides grow factorially and would silently corrupt in
//! doubles well before `k = 12`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use dashu_int::{IBig, UBig};

/// Exact binomial coefficient `C(n, r)`, with the usual convention that
/// out-of-range `r` (negative or greater than `n`) gives 0.
pub fn binomial(n: u64, r: i64) -> IBig {
    if r < 0 || r as u64 > n {
        return IBig::ZERO;
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = IBig::ONE;
    for i in 1..=r {
        acc = acc * IBig::from(n - r + i) / IBig::from(i);
    }
    acc
}

/// Exact factorial `n!`.
pub fn factorial(n: u64) -> UBig {
    let mut acc = UBig::ONE;
    for i in 2..=n {
        acc *= UBig::from(i);
    }
    acc
}

/// Stirling number of the second kind `S(p, k)` by the alternating binomial
/// sum `S(p,k) = (1/k!) Σ_j (−1)^{k−j} C(k,j) j^p`.
pub fn stirling2(p: u64, k: u64) -> IBig {
    if k == 0 {
        return if p == 0 { IBig::ONE } else { IBig::ZERO };
    }
    let mut acc = IBig::ZERO;
    for j in 1..=k {
        let sign = if (k - j) % 2 == 0 { IBig::ONE } else { -IBig::ONE };
        acc += sign * binomial(k, j as i64) * IBig::from(j).pow(p as usize);
    }
    acc / IBig::from(factorial(k))
}

/// `S(p, k)` by the triangle recurrence `S(n,k) = k·S(n−1,k) + S(n−1,k−1)`;
/// kept as an independent route for the cross-check against [`stirling2`].
pub fn stirling2_by_recurrence(p: u64, k: u64) -> IBig {
    if k > p {
        return IBig::ZERO;
    }
    let mut row = vec![IBig::ZERO; k as usize + 1];
    row[0] = IBig::ONE;
    for _ in 1..=p {
        let mut next = vec![IBig::ZERO; k as usize + 1];
        for j in 1..=(k as usize) {
            next[j] = IBig::from(j) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Unsigned Stirling number of the first kind `[n, p]` via the triangle
/// `[n+1, p] = n·[n, p] + [n, p−1]`.
pub fn stirling1_unsigned(n: u64, p: u64) -> IBig {
    if p > n {
        return IBig::ZERO;
    }
    let mut row = vec![IBig::ZERO; n as usize + 1];
    row[0] = IBig::ONE;
    for i in 1..=n {
        let mut next = vec![IBig::ZERO; n as usize + 1];
        for j in 1..=(i as usize) {
            next[j] = IBig::from(i - 1) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[p as usize].clone()
}

/// Eulerian number `⟨n, m⟩` by the explicit alternating sum
/// `Σ_j (−1)^j C(n+1, j) (m+1−j)^n`.
///
/// Panics when `n < 1` or `m` lies outside `[0, n−1]`.
pub fn eulerian(n: u64, m: u64) -> IBig {
    assert!(n >= 1, "eulerian requires n >= 1");
    assert!(m < n, "eulerian requires 0 <= m <= n-1, got m={m}, n={n}");
    let mut acc = IBig::ZERO;
    for j in 0..=m {
        let sign = if j % 2 == 0 { IBig::ONE } else { -IBig::ONE };
        acc += sign * binomial(n + 1, j as i64) * IBig::from(m + 1 - j).pow(n as usize);
    }
    acc
}

/// Falling factorial `(x)_n = x (x−1) ⋯ (x−n+1)`; the empty product is 1.
pub fn falling_factorial(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..n {
        acc *= x - i as f64;
    }
    acc
}

fn falling_factorial_exact(m: u64, terms: u64) -> UBig {
    debug_assert!(terms <= m);
    let mut acc = UBig::ONE;
    for i in 0..terms {
        acc *= UBig::from(m - i);
    }
    acc
}

/// Integer partition stored as a map from part value to multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: BTreeMap<u32, u32>,
}

impl Partition {
    /// Empty partition (of 0).
    pub fn empty() -> Self {
        Partition {
            parts: BTreeMap::new(),
        }
    }

    /// Build from `(value, multiplicity)` pairs; values and multiplicities
    /// must be positive and values distinct.
    pub fn from_parts<I: IntoIterator<Item = (u32, u32)>>(parts: I) -> Self {
        let mut map = BTreeMap::new();
        for (value, mult) in parts {
            assert!(value >= 1 && mult >= 1, "parts must be positive");
            let prev = map.insert(value, mult);
            assert!(prev.is_none(), "duplicate part value {value}");
        }
        Partition { parts: map }
    }

    /// Sum of `value · multiplicity`: the integer being partitioned.
    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|(v, m)| v * m).sum()
    }

    /// Total number of pieces `Σ multiplicity`.
    pub fn piece_count(&self) -> u32 {
        self.parts.values().sum()
    }

    /// Number of distinct part values.
    pub fn distinct_count(&self) -> usize {
        self.parts.len()
    }

    /// Iterate `(value, multiplicity)` in ascending part value.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().map(|(v, m)| (*v, *m))
    }
}

/// All partitions of `n` into at most `max_pieces` positive parts, each
/// yielded exactly once in unspecified order.  `n = 0` yields the single
/// empty partition.
pub fn partitions(n: u32, max_pieces: u32) -> impl Iterator<Item = Partition> {
    assert!(max_pieces >= 1, "need at least one piece");
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_partitions(n, n, max_pieces, &mut current, &mut out);
    out.into_iter()
}

fn collect_partitions(
    remaining: u32,
    max_part: u32,
    pieces_left: u32,
    current: &mut Vec<(u32, u32)>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.iter().copied().collect(),
        });
        return;
    }
    if pieces_left == 0 || max_part == 0 {
        return;
    }
    for value in (1..=max_part.min(remaining)).rev() {
        let max_count = (remaining / value).min(pieces_left);
        for count in 1..=max_count {
            current.push((value, count));
            collect_partitions(
                remaining - value * count,
                value - 1,
                pieces_left - count,
                current,
                out,
            );
            current.pop();
        }
    }
}

/// Number of distinct ordered arrangements of the degree-`m` monomial derived
/// from the partition `p` of the excess, after padding with 1-parts to total
/// length `m`: `(m)_{ℓ'} / Π_i m_i!` with `ℓ'` the piece count of `p`.
///
/// This follows the arrangement-count reading (the multinomial
/// `m! / (Π_i m_i! · (m−ℓ')!)`), which the exhaustive composition oracle
/// confirms.  Panics when `p` has more than `m` pieces.
pub fn multiplicity_factor(m: u32, p: &Partition) -> UBig {
    let pieces = p.piece_count();
    assert!(
        pieces <= m,
        "partition has {pieces} pieces, more than the monomial degree {m}"
    );
    let numer = falling_factorial_exact(m as u64, pieces as u64);
    let mut denom = UBig::ONE;
    for (_, mult) in p.iter() {
        denom *= factorial(mult as u64);
    }
    debug_assert!((numer.clone() % &denom).is_zero());
    numer / denom
}
