//! Polynomials over the rationals in graded generators `m_1, m_2, ...`
//! (`m_i` of degree `i`), and polynomials in a formal eigenvalue variable
//! `kappa` with such coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{is_integer, to_canonical};

/// Exponent vector over `m_1, m_2, ...`, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are indexed from 1");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &e)| (i + 1) * e as usize).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut e = long.0.clone();
        for (slot, x) in e.iter_mut().zip(&short.0) {
            *slot += x;
        }
        Self(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "m{}", i + 1)?;
            } else {
                write!(f, "m{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `m_1, m_2, ...` with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(Monomial::default(), c)
    }

    /// The generator `m_i`.
    pub fn generator(i: usize) -> Self {
        Self::monomial(Monomial::generator(i), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    /// Common degree of all terms, `None` when inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Ring homomorphism to the rationals fixed by the images of the
    /// generators.
    pub fn evaluate<F: Fn(usize) -> BigRational>(&self, generator_value: F) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(generator_value(i + 1), e as usize);
                }
            }
            total += v;
        }
        total
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // by degree, then m1-heavy monomials first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = *c < BigRational::zero();
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", to_canonical(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else if is_integer(&abs) {
                write!(f, "{}*{m}", to_canonical(&abs))?;
            } else {
                write!(f, "({})*{m}", to_canonical(&abs))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exponents: &'a [u32],
    coeff: String,
}

impl Serialize for GradedPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermOut { exponents: m.exponents(), coeff: to_canonical(c) })?;
        }
        seq.end()
    }
}

/// Polynomial in `kappa` with [`GradedPoly`] coefficients; entry `j` is the
/// coefficient of `kappa^j`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct KPolynomial {
    coeffs: Vec<GradedPoly>,
}

impl KPolynomial {
    pub fn new(mut coeffs: Vec<GradedPoly>) -> Self {
        while coeffs.last().is_some_and(GradedPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GradedPoly::one())
    }

    pub fn constant(c: GradedPoly) -> Self {
        Self::new(vec![c])
    }

    /// `kappa^e`.
    pub fn kappa_power(e: usize) -> Self {
        let mut coeffs = vec![GradedPoly::zero(); e + 1];
        coeffs[e] = GradedPoly::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[GradedPoly] {
        &self.coeffs
    }

    pub fn coefficient(&self, j: usize) -> GradedPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Degree in `kappa`; zero for the zero polynomial.
    pub fn kappa_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|j| self.coefficient(j).add(&other.coefficient(j))).collect())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(GradedPoly::neg).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn scale_graded(&self, c: &GradedPoly) -> Self {
        Self::new(self.coeffs.iter().map(|p| p.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GradedPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }

    /// Multiplies by `kappa^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GradedPoly::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `kappa`; fails when the constant term is nonzero.
    pub fn shift_down(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c0) if c0.is_zero() => Ok(Self { coeffs: self.coeffs[1..].to_vec() }),
            Some(_) => Err(Error::Invalid("polynomial is not divisible by kappa".into())),
        }
    }

    /// Specializes `kappa` to a rational value.
    pub fn eval_at(&self, kappa: &BigRational) -> GradedPoly {
        let mut total = GradedPoly::zero();
        let mut power = BigRational::one();
        for c in &self.coeffs {
            total = total.add(&c.scale(&power));
            power *= kappa;
        }
        total
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("({c})"),
                1 => format!("({c})*k"),
                _ => format!("({c})*k^{j}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(i: usize) -> GradedPoly {
        GradedPoly::generator(i)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = m(1).scale(&int(-2));
        assert_eq!(p.to_string(), "-2*m1");
        let q = m(1).pow(2).scale(&int(4)).sub(&m(2).scale(&int(3)));
        assert_eq!(q.to_string(), "4*m1^2 - 3*m2");
        assert_eq!(q.homogeneous_degree(), Some(2));
        assert_eq!(p.mul(&q).homogeneous_degree(), Some(3));
        assert!(q.sub(&q).is_zero());
        assert_eq!(m(1).add(&GradedPoly::one()).homogeneous_degree(), None);
        assert_eq!(GradedPoly::constant(ratio(1, 2)).as_constant(), Some(ratio(1, 2)));
        assert_eq!(m(2).as_constant(), None);
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let p = m(1).pow(2).add(&m(2).scale(&int(3)));
        let q = m(1).sub(&GradedPoly::constant(int(5)));
        let val = |i: usize| ratio(if i.is_multiple_of(2) { 1 } else { -1 }, i as i64 + 1);
        assert_eq!(p.mul(&q).evaluate(val), p.evaluate(val) * q.evaluate(val));
    }

    #[test]
    fn kpolynomials() {
        // m1 (1 - k)
        let b2 = KPolynomial::new(vec![m(1), m(1).neg()]);
        assert_eq!(b2.kappa_degree(), 1);
        assert!(b2.eval_at(&int(1)).is_zero());
        let sq = b2.mul(&b2);
        assert_eq!(sq.eval_at(&int(3)), b2.eval_at(&int(3)).pow(2));
        assert_eq!(KPolynomial::kappa_power(2).shift_down().unwrap(), KPolynomial::kappa_power(1));
        assert!(KPolynomial::one().shift_down().is_err());
        assert_eq!(b2.shift_up(2).shift_down().unwrap().shift_down().unwrap(), b2);
    }
}
