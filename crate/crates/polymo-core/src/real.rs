//! Configurable-precision real arithmetic helpers.
//!
//! All floating-point work in this crate uses binary [`FBig`] values with an
//! explicit precision in bits.  Exact integers ([`IBig`]) and rationals
//! ([`RBig`]) convert into `Real` only at the solver boundary, with a single
//! correct rounding.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use dashu_base::Abs;
use dashu_float::{round::mode::HalfEven, DBig, FBig};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

/// Binary floating-point number with per-value precision.
pub type Real = FBig<HalfEven, 2>;

/// Extra working bits used inside iterative computations before rounding
/// results back to the requested precision.
pub const GUARD_BITS: usize = 64;

/// Machine epsilon of a `bits`-bit significand, as an `f64` exponent scale.
pub fn epsilon(bits: usize) -> f64 {
    libm_exp2(1.0 - bits as f64)
}

fn libm_exp2(e: f64) -> f64 {
    // Exponents here are integral and well inside f64 range.
    let n = e as i32;
    if n >= -1022 {
        f64::from_bits(((n + 1023) as u64) << 52)
    } else {
        // subnormal range; build by halving
        let mut x = f64::from_bits(1u64 << 52); // 2^-1022
        let mut m = -1022 - n;
        while m > 0 {
            x *= 0.5;
            m -= 1;
        }
        x
    }
}

/// Convert an exact integer to a `Real` with the given precision.
pub fn real_from_ibig(value: &IBig, bits: usize) -> Real {
    Real::from(value.clone()).with_precision(bits).value()
}

/// Convert a small unsigned integer to a `Real` with the given precision.
pub fn real_from_usize(value: usize, bits: usize) -> Real {
    Real::from(value).with_precision(bits).value()
}

/// Convert an exact rational to a `Real` with the given precision (one
/// correct rounding).
pub fn real_from_rbig(value: &RBig, bits: usize) -> Real {
    value.to_float(bits).value()
}

/// `x^n` for a small non-negative integer exponent.
pub fn powi(x: &Real, n: usize) -> Real {
    x.powi(IBig::from(n))
}

/// Principal `n`-th root of `x`, rounded to `bits` bits.
///
/// For odd `n` a negative `x` yields the real negative root.  Panics when `x`
/// is negative with even `n`; callers reject that case up front.
pub fn nth_root(x: &Real, n: usize, bits: usize) -> Real {
    assert!(n >= 1, "root order must be >= 1");
    if x.repr().is_zero() {
        return Real::ZERO.with_precision(bits).value();
    }
    let negative = x.sign() == dashu_base::Sign::Negative;
    assert!(
        !(negative && n % 2 == 0),
        "even root of a negative value is not real"
    );
    let work = bits + GUARD_BITS;
    let mag = x.clone().abs().with_precision(work).value();
    let mut root = if n == 1 {
        mag.clone()
    } else {
        let order = real_from_usize(n, work);
        let mut r = (mag.ln() / &order).exp();
        // Newton polish of r^n = |x| to the working precision.
        for _ in 0..2 {
            let pow_nm1 = powi(&r, n - 1);
            let corr = &mag / pow_nm1;
            r = (r * real_from_usize(n - 1, work) + corr) / &order;
        }
        r
    };
    if negative {
        root = -root;
    }
    root.with_precision(bits).value()
}

/// Relative difference `|x − y| / max(|y|, 1)` at the operands' precision.
pub fn rel_err(x: &Real, y: &Real) -> Real {
    let diff = (x - y).abs();
    let denom = y.clone().abs();
    if denom >= Real::ONE {
        diff / denom
    } else {
        diff
    }
}

/// Relative difference as an `f64` for reporting.
pub fn rel_err_f64(x: &Real, y: &Real) -> f64 {
    rel_err(x, y).to_f64().value()
}

/// Full-precision decimal rendering: enough digits that parsing the string
/// back at the same binary precision recovers the value exactly.
pub fn to_decimal_full(x: &Real) -> String {
    let d: DBig = x.to_decimal().value();
    d.to_string()
}

/// Render `x` with exactly `digits` significant digits, positional when the
/// magnitude allows and scientific otherwise.
pub fn to_decimal_sig(x: &Real, digits: usize) -> String {
    assert!(digits >= 1);
    if x.repr().is_zero() {
        let mut s = String::from("0.");
        for _ in 1..digits {
            s.push('0');
        }
        return s;
    }
    let d: DBig = x.to_decimal().value();
    let d = if d.precision() > digits {
        d.with_precision(digits).value()
    } else {
        d
    };
    let repr = d.into_repr();
    let mut exp = repr.exponent();
    let sig = repr.significand().clone();
    let negative = sig < IBig::ZERO;
    let mut s = if negative { (-sig).to_string() } else { sig.to_string() };
    // Correct rounding can carry into an extra digit ending in zero.
    while s.len() > digits && s.ends_with('0') {
        s.pop();
        exp += 1;
    }
    while s.len() < digits {
        s.push('0');
        exp -= 1;
    }
    let point = s.len() as isize + exp;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if point <= 0 {
        if point < -(digits as isize) {
            // too far below 1 for positional display
            return sci_string(negative, &s, point);
        }
        out.push_str("0.");
        for _ in 0..(-point) {
            out.push('0');
        }
        out.push_str(&s);
    } else if (point as usize) < s.len() {
        out.push_str(&s[..point as usize]);
        out.push('.');
        out.push_str(&s[point as usize..]);
    } else if (point as usize) == s.len() {
        out.push_str(&s);
        out.push_str(".0");
    } else {
        return sci_string(negative, &s, point);
    }
    out
}

fn sci_string(negative: bool, digits: &str, point: isize) -> String {
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&digits[..1]);
    out.push('.');
    if digits.len() > 1 {
        out.push_str(&digits[1..]);
    } else {
        out.push('0');
    }
    out.push('e');
    out.push_str(&(point - 1).to_string());
    out
}

/// Parse a decimal literal (optionally with exponent) or an `a/b` rational
/// into an exact rational.
pub fn parse_rational(s: &str) -> Option<RBig> {
    let s = s.trim();
    if s.contains('/') {
        return RBig::from_str(s).ok();
    }
    let d = DBig::from_str(s).ok()?;
    Some(dbig_to_rbig(d))
}

fn dbig_to_rbig(d: DBig) -> RBig {
    let repr = d.into_repr();
    let exp = repr.exponent();
    let sig = repr.significand().clone();
    if exp >= 0 {
        RBig::from(sig * IBig::from(10).pow(exp as usize))
    } else {
        RBig::from_parts(sig, UBig::from(10u8).pow((-exp) as usize))
    }
}

/// Parse a decimal literal into a `Real` at the given precision with a single
/// correct rounding.
pub fn parse_real(s: &str, bits: usize) -> Option<Real> {
    Some(real_from_rbig(&parse_rational(s)?, bits))
}

/// Render an exact rational as a finite decimal string when its denominator
/// is of the form `2^a 5^b`, falling back to `num/den`.
pub fn rational_to_string(r: &RBig) -> String {
    let num = r.numerator();
    let den = r.denominator();
    if den.is_one() {
        return num.to_string();
    }
    let mut twos = 0usize;
    let mut fives = 0usize;
    let mut rest = den.clone();
    while rest.clone() % UBig::from(2u8) == UBig::ZERO {
        rest /= UBig::from(2u8);
        twos += 1;
    }
    while rest.clone() % UBig::from(5u8) == UBig::ZERO {
        rest /= UBig::from(5u8);
        fives += 1;
    }
    if !rest.is_one() {
        return r.to_string();
    }
    let shift = twos.max(fives);
    let scaled = num * IBig::from(10).pow(shift) / IBig::from(den.clone());
    let negative = scaled < IBig::ZERO;
    let mut digits = if negative {
        (-scaled).to_string()
    } else {
        scaled.to_string()
    };
    while digits.len() <= shift {
        digits.insert(0, '0');
    }
    let split = digits.len() - shift;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&digits[..split]);
    let mut frac: Vec<char> = digits[split..].chars().collect();
    while frac.last() == Some(&'0') {
        frac.pop();
    }
    if !frac.is_empty() {
        out.push('.');
        out.extend(frac);
    }
    out
}
