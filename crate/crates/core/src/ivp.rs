//! Integer-valued polynomials `f(w)` with `f(Z) ⊆ Z`, stored in the binomial
//! basis `C(w, n)`.
//!
//! The ring of integer-valued polynomials is the dual of the operation ring:
//! `<sigma_n, C(w, m)> = [n = m]`, and pairing an operation with `w^h` gives
//! its eigenvalue `lambda_h`. A polynomial is integer valued exactly when all
//! of its binomial coordinates are integers, which is what makes this basis
//! the canonical storage.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::opring::{LambdaSeq, SigmaCoeffs};
use crate::rational::{from_bigint, is_integer, parse_rational, ser_rat_vec, to_canonical};
use crate::stirling::{factorial, stirling1_signed, stirling2};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IvpPoly {
    #[serde(serialize_with = "ser_rat_vec")]
    binom_coeffs: Vec<BigRational>,
}

impl IvpPoly {
    /// Builds from binomial-basis coordinates `c_n` of `sum c_n C(w, n)`.
    pub fn from_binomial_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Self { binom_coeffs: coeffs }
    }

    /// Converts power-basis coefficients (`coeffs[h]` on `w^h`) using
    /// `w^h = sum_n n! {h n} C(w, n)`.
    pub fn from_power_basis(coeffs: &[BigRational]) -> Self {
        let mut out = vec![BigRational::zero(); coeffs.len().max(1)];
        for (h, p) in coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (n, slot) in out.iter_mut().enumerate().take(h + 1) {
                let s = stirling2(h, n);
                if !s.is_zero() {
                    *slot += p * from_bigint(s * factorial(n));
                }
            }
        }
        Self::from_binomial_coeffs(out)
    }

    /// The binomial polynomial `C(w, n)`.
    pub fn binomial(n: usize) -> Self {
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::one();
        Self { binom_coeffs: c }
    }

    /// `w^h`.
    pub fn power(h: usize) -> Self {
        let mut p = vec![BigRational::zero(); h + 1];
        p[h] = BigRational::one();
        Self::from_power_basis(&p)
    }

    pub fn binom_coeffs(&self) -> &[BigRational] {
        &self.binom_coeffs
    }

    pub fn degree(&self) -> usize {
        self.binom_coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.binom_coeffs.iter().all(Zero::is_zero)
    }

    /// Power-basis coefficients, using `C(w, n) = (1/n!) sum_k s(n,k) w^k`
    /// with signed Stirling numbers of the first kind.
    pub fn to_power_basis(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.binom_coeffs.len()];
        for (n, c) in self.binom_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scale = c / from_bigint(factorial(n));
            for (k, slot) in out.iter_mut().enumerate().take(n + 1) {
                let s = stirling1_signed(n, k);
                if !s.is_zero() {
                    *slot += &scale * from_bigint(s);
                }
            }
        }
        out
    }

    /// Integer-valuedness via the binomial coordinates.
    pub fn is_integer_valued(&self) -> bool {
        self.binom_coeffs.iter().all(is_integer)
    }

    pub fn assert_integer_valued(&self) -> Result<()> {
        if self.is_integer_valued() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{self} is not integer valued")))
        }
    }

    pub fn evaluate(&self, w: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        let mut binom = BigRational::one();
        for (n, c) in self.binom_coeffs.iter().enumerate() {
            if n > 0 {
                binom = binom * (w - BigRational::from_integer((n as i64 - 1).into()))
                    / BigRational::from_integer((n as i64).into());
            }
            total += c * &binom;
        }
        total
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.binom_coeffs.len().max(other.binom_coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..len)
            .map(|i| {
                self.binom_coeffs.get(i).unwrap_or(&zero) + other.binom_coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        Self::from_binomial_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_binomial_coeffs(self.binom_coeffs.iter().map(|x| x * c).collect())
    }

    /// Product, formed in the power basis and converted back.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.to_power_basis();
        let b = other.to_power_basis();
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::from_power_basis(&out)
    }

    /// Parses `w^2 - w`, `(1/6)w^3`, `3*binom(w,2) + 1` and similar sums.
    pub fn parse(s: &str) -> Result<Self> {
        PolyParser { src: s.as_bytes(), pos: 0 }.parse()
    }
}

impl FromStr for IvpPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for IvpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .binom_coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| {
                if n == 0 {
                    to_canonical(c)
                } else if c.is_one() {
                    format!("binom(w,{n})")
                } else if is_integer(c) {
                    format!("{}*binom(w,{n})", to_canonical(c))
                } else {
                    format!("({})*binom(w,{n})", to_canonical(c))
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Duality pairing `<a, f> = sum_n a_n c_n`.
pub fn pairing(a: &SigmaCoeffs, f: &IvpPoly) -> Result<BigRational> {
    if f.degree() > a.truncation() && !f.is_zero() {
        return Err(Error::IndexOutOfRange { index: f.degree(), truncation: a.truncation() });
    }
    Ok(a.entries().iter().zip(f.binom_coeffs()).map(|(x, c)| x * c).sum())
}

/// `pi_lambda(u^a e^{2b} v^b) = lambda_b`. The `u`-exponent does not affect
/// the value.
pub fn pi_lambda(a_exp: i64, b_exp: usize, lambda: &LambdaSeq) -> Result<BigRational> {
    let _ = a_exp;
    lambda.get(b_exp).cloned()
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in polynomial literal", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {token:?}")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected a nonnegative integer"))
    }

    fn parse(mut self) -> Result<IvpPoly> {
        let mut total = IvpPoly::from_binomial_coeffs(vec![]);
        let mut first = true;
        loop {
            let negative = if self.eat("-") {
                true
            } else if first || self.eat("+") {
                false
            } else if self.peek().is_none() {
                break;
            } else {
                return Err(self.err("expected '+' or '-'"));
            };
            first = false;
            let mut term = self.term()?;
            if negative {
                term = term.scale(&-BigRational::one());
            }
            total = total.add(&term);
            if self.peek().is_none() {
                break;
            }
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<IvpPoly> {
        let mut coeff = BigRational::one();
        let mut explicit = false;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b')' {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                coeff = parse_rational(text)?;
                self.expect(")")?;
                explicit = true;
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                coeff = BigRational::from_integer(n.into());
                if self.eat("/") {
                    let d = self.number()?;
                    if d == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    coeff /= BigRational::from_integer(d.into());
                }
                explicit = true;
            }
            _ => {}
        }
        self.eat("*");
        let basis = if self.eat("binom") {
            self.expect("(")?;
            self.expect("w")?;
            self.expect(",")?;
            let n = self.number()?;
            self.expect(")")?;
            IvpPoly::binomial(n)
        } else if self.eat("w") {
            let h = if self.eat("^") { self.number()? } else { 1 };
            IvpPoly::power(h)
        } else if explicit {
            IvpPoly::binomial(0)
        } else {
            return Err(self.err("expected a term"));
        };
        Ok(basis.scale(&coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opring::{lambda_to_sigma, sigma_to_lambda};
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn power_basis_conversion() {
        assert_eq!(IvpPoly::from_power_basis(&ints(&[0, 0, 1])).binom_coeffs(), ints(&[0, 1, 2]).as_slice());
        assert_eq!(IvpPoly::from_power_basis(&ints(&[1])).binom_coeffs(), ints(&[1]).as_slice());
        assert_eq!(IvpPoly::from_power_basis(&ints(&[0, 0, 0, 1])).binom_coeffs(), ints(&[0, 1, 6, 6]).as_slice());
        let f = IvpPoly::from_power_basis(&ints(&[3, -1, 4, 1, -5]));
        assert_eq!(f.to_power_basis(), ints(&[3, -1, 4, 1, -5]));
    }

    fn brute_integer_valued(f: &IvpPoly) -> bool {
        (-20..=20).all(|k| is_integer(&f.evaluate(&int(k))))
    }

    #[test]
    fn integer_valued_examples() {
        let f = IvpPoly::parse("(1/2)w^2 - (1/2)w").unwrap();
        assert!(f.is_integer_valued());
        assert!(brute_integer_valued(&f));
        assert_eq!(f, IvpPoly::binomial(2));

        let f = IvpPoly::parse("(1/2)w").unwrap();
        assert!(!f.is_integer_valued());
        assert_eq!(f.evaluate(&int(1)), ratio(1, 2));

        let f = IvpPoly::parse("(1/6)w^3 - (1/6)w").unwrap();
        assert!(f.is_integer_valued());
        assert!(brute_integer_valued(&f));
        assert_eq!(f.binom_coeffs(), ints(&[0, 0, 1, 1]).as_slice());
        assert!(f.assert_integer_valued().is_ok());
        assert!(IvpPoly::parse("w/2").is_err() || !IvpPoly::parse("(1/2)w").unwrap().is_integer_valued());
    }

    #[test]
    fn parsing() {
        assert_eq!(IvpPoly::parse("w^2 - w").unwrap(), IvpPoly::from_power_basis(&ints(&[0, -1, 1])));
        assert_eq!(IvpPoly::parse("binom(w,2)").unwrap(), IvpPoly::binomial(2));
        assert_eq!(IvpPoly::parse("3*binom(w, 3) + 1").unwrap().binom_coeffs(), ints(&[1, 0, 0, 3]).as_slice());
        assert_eq!(IvpPoly::parse("1/6 w^3").unwrap(), IvpPoly::parse("(1/6)w^3").unwrap());
        assert_eq!(IvpPoly::parse("-w").unwrap().binom_coeffs(), ints(&[0, -1]).as_slice());
        assert!(IvpPoly::parse("w^").is_err());
        assert!(IvpPoly::parse("w w").is_err());
        assert!(IvpPoly::parse("").is_err());
        assert_eq!(IvpPoly::binomial(2).scale(&int(2)).to_string(), "2*binom(w,2)");
    }

    #[test]
    fn pairing_examples() {
        let psi3 = SigmaCoeffs::adams(3, 4);
        assert_eq!(pairing(&psi3, &IvpPoly::power(2)).unwrap(), int(9));
        for n in 0..5 {
            for m in 0..5 {
                let v = pairing(&SigmaCoeffs::unit(n, 4).unwrap(), &IvpPoly::binomial(m)).unwrap();
                assert_eq!(v, int((n == m) as i64));
            }
        }
        assert_eq!(pairing(&SigmaCoeffs::unit(2, 3).unwrap(), &IvpPoly::power(2)).unwrap(), int(2));
        assert!(pairing(&SigmaCoeffs::unit(0, 1).unwrap(), &IvpPoly::power(2)).is_err());
    }

    #[test]
    fn pi_lambda_examples() {
        assert_eq!(pi_lambda(0, 3, &LambdaSeq::adams(2, 5)).unwrap(), int(8));
        let l = LambdaSeq::from_integers([4, 5, 6]).unwrap();
        assert_eq!(pi_lambda(5, 0, &l).unwrap(), int(4));
        assert_eq!(pi_lambda(-1, 1, &LambdaSeq::sigma(1, 3)).unwrap(), int(1));
        assert!(pi_lambda(0, 3, &l).is_err());
    }

    fn poly() -> impl Strategy<Value = IvpPoly> {
        prop::collection::vec((-40i64..40, 1i64..=12), 1..=9)
            .prop_map(|v| IvpPoly::from_power_basis(&v.into_iter().map(|(n, d)| ratio(n, d)).collect::<Vec<_>>()))
    }

    proptest! {
        #[test]
        fn criterion_agrees_with_evaluation(f in poly()) {
            prop_assert_eq!(f.is_integer_valued(), brute_integer_valued(&f));
        }

        #[test]
        fn pairing_matches_eigenvalues(v in prop::collection::vec(-20i64..20, 1..10)) {
            let a = SigmaCoeffs::from_integers(v).unwrap();
            let lambda = sigma_to_lambda(&a);
            for h in 0..=a.truncation() {
                prop_assert_eq!(&pairing(&a, &IvpPoly::power(h)).unwrap(), &lambda.entries()[h]);
            }
            prop_assert_eq!(lambda_to_sigma(&lambda), a);
        }

        #[test]
        fn products_stay_integer_valued(a in prop::collection::vec(-9i64..9, 1..5), b in prop::collection::vec(-9i64..9, 1..5)) {
            let f = IvpPoly::from_binomial_coeffs(a.into_iter().map(int).collect());
            let g = IvpPoly::from_binomial_coeffs(b.into_iter().map(int).collect());
            prop_assert!(f.mul(&g).is_integer_valued());
        }
    }
}
