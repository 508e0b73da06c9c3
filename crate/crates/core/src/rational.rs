//! Exact rational scalars.
//!
//! Every identity in this crate that the sources state exactly is verified in
//! exact arithmetic, so the scalar type is an arbitrary-precision rational,
//! always reduced, with positive denominator. `num_rational::BigRational`
//! already maintains both invariants; this module pins the choice and adds the
//! small constructors the rest of the crate leans on.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact factorial as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    acc
}

/// Nearest-f64 view of a rational, for reporting only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// |r| as f64, for residual reporting.
pub fn abs_f64(r: &Rational) -> f64 {
    to_f64(&r.abs())
}

/// Renders `p/q` (or just `p` when `q == 1`), the exact form used in reports.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q`, or a plain integer with sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = rat(2, -4);
        assert_eq!(fmt_rational(&r), "-1/2");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }

    #[test]
    fn parse_round_trips() {
        for s in ["3", "-7/5", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(fmt_rational(&r), s);
        }
        assert!(parse_rational("1/0").is_none());
    }
}
