//! Small helpers around [`BigRational`]: integrality, `p`-adic valuation,
//! canonical text form and parsing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

/// Exponent of `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// `p`-adic valuation; `None` stands for the valuation of zero (infinity).
pub fn valuation(r: &BigRational, p: u64) -> Option<i64> {
    let num = int_valuation(r.numer(), p)?;
    let den = int_valuation(r.denom(), p).unwrap_or(0);
    Some(num - den)
}

/// True when `r` lies in the localization of the integers at `p`.
pub fn is_p_integral(r: &BigRational, p: u64) -> bool {
    valuation(r, p).is_none_or(|v| v >= 0)
}

/// Canonical text form: `n` for integers, `p/q` otherwise, sign on the
/// numerator.
pub fn to_canonical(r: &BigRational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n`, `-n`, `p/q` (optionally surrounded by whitespace).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn ser_rat<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_canonical(r))
}

pub(crate) fn ser_rat_vec<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(to_canonical))
}

pub(crate) fn ser_rat_matrix<S: Serializer>(
    m: &[Vec<BigRational>],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|row| row.iter().map(to_canonical).collect::<Vec<_>>()),
    )
}

pub(crate) fn ser_int<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub(crate) fn ser_int_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|n| n.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(valuation(&ratio(1, 2), 3), Some(0));
        assert_eq!(valuation(&ratio(1, 2), 2), Some(-1));
        assert_eq!(valuation(&ratio(18, 5), 3), Some(2));
        assert_eq!(valuation(&int(0), 3), None);
        assert!(is_p_integral(&ratio(7, 10), 3));
        assert!(!is_p_integral(&ratio(7, 12), 3));
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(to_canonical(&ratio(-6, 4)), "-3/2");
        assert_eq!(to_canonical(&int(5)), "5");
        assert_eq!(parse_rational(" -3/6 ").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn odd_primes() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_odd_prime(p)).collect();
        assert_eq!(primes, vec![3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
