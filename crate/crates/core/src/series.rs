//! Truncated power series in one variable over an exact coefficient ring,
//! with composition and compositional inversion, plus a small multivariate
//! variant used to expand formal group laws.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{GradedPoly, KPolynomial};

/// Exact commutative coefficient ring for [`Series`].
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
    /// The value as a rational constant, if it is one.
    fn as_rational(&self) -> Option<BigRational>;
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigRational) -> Self {
        self * c
    }
    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Coefficient for GradedPoly {
    fn zero() -> Self {
        GradedPoly::zero()
    }
    fn one() -> Self {
        GradedPoly::one()
    }
    fn is_zero(&self) -> bool {
        GradedPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        GradedPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        GradedPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        GradedPoly::mul(self, other)
    }
    fn scale(&self, c: &BigRational) -> Self {
        GradedPoly::scale(self, c)
    }
    fn as_rational(&self) -> Option<BigRational> {
        self.as_constant()
    }
}

impl Coefficient for KPolynomial {
    fn zero() -> Self {
        KPolynomial::zero()
    }
    fn one() -> Self {
        KPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        KPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        KPolynomial::add(self, other)
    }
    fn neg(&self) -> Self {
        KPolynomial::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        KPolynomial::mul(self, other)
    }
    fn scale(&self, c: &BigRational) -> Self {
        KPolynomial::scale(self, c)
    }
    fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs() {
            [] => Some(<BigRational as Zero>::zero()),
            [c] => c.as_constant(),
            _ => None,
        }
    }
}

/// `c_0 + c_1 x + ... + c_T x^T + O(x^(T+1))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![C::zero(); order + 1] }
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: C) {
        self.coeffs[i] = c;
    }

    pub fn map<D: Coefficient, F: Fn(&C) -> D>(&self, f: F) -> Series<D> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: (0..=order).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(C::neg).collect() }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Self { coeffs }
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Invalid("inner series has a constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut total = Self::zero(order);
        total.coeffs[0] = self.coeffs[0].clone();
        let mut power = inner.clone();
        for i in 1..=order {
            if !self.coeffs[i].is_zero() {
                total = total.add(&power.scale(&self.coeffs[i]));
            }
            if i < order {
                power = power.mul(&inner);
            }
        }
        Ok(total)
    }

    /// Compositional inverse `g` with `self(g(x)) = x`.
    ///
    /// Requires zero constant term and a nonzero rational linear coefficient.
    /// Works order by order with a table of the powers `g^i`, so that
    /// `[x^n] g^i` (for `i >= 2`) only involves `g_1 .. g_(n-1)`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() < 1 {
            return Err(Error::NotInvertible);
        }
        let lead = self.coeffs[1].as_rational().filter(|c| !Zero::is_zero(c)).ok_or(Error::NotInvertible)?;
        let inv_lead = lead.recip();
        let order = self.order();
        // powers[i][n] = [x^n] g^i
        let mut powers: Vec<Vec<C>> = vec![vec![C::zero(); order + 1]; order + 1];
        powers[0][0] = C::one();
        let mut g = vec![C::zero(); order + 1];
        for n in 1..=order {
            for i in 2..=n {
                let mut acc = C::zero();
                for j in 1..=(n + 1 - i) {
                    if g[j].is_zero() || powers[i - 1][n - j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&g[j].mul(&powers[i - 1][n - j]));
                }
                powers[i][n] = acc;
            }
            let mut rest = C::zero();
            for i in 2..=n {
                if !self.coeffs[i].is_zero() && !powers[i][n].is_zero() {
                    rest = rest.add(&self.coeffs[i].mul(&powers[i][n]));
                }
            }
            let target = if n == 1 { C::one() } else { C::zero() };
            g[n] = target.add(&rest.neg()).scale(&inv_lead);
            powers[1][n] = g[n].clone();
        }
        Ok(Self { coeffs: g })
    }
}

/// Power series in several variables, truncated at total degree `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiSeries {
    nvars: usize,
    order: usize,
    terms: BTreeMap<Vec<u32>, GradedPoly>,
}

impl MultiSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        Self { nvars, order, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, order: usize, c: GradedPoly) -> Self {
        let mut s = Self::zero(nvars, order);
        s.add_term(vec![0; nvars], c);
        s
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, order: usize, i: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        let mut e = vec![0; nvars];
        e[i] = 1;
        s.add_term(e, GradedPoly::one());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, exponents: &[u32]) -> GradedPoly {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GradedPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: GradedPoly) {
        if c.is_zero() || e.iter().sum::<u32>() as usize > self.order {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(|e| e.iter().all(|&x| x == 0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        out.terms.retain(|e, _| e.iter().sum::<u32>() as usize <= out.order);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GradedPoly) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars, self.order.min(other.order));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// `f(inner)` for a univariate series `f`; `inner` must have no constant
    /// term.
    pub fn compose_univariate(f: &Series<GradedPoly>, inner: &MultiSeries) -> Result<Self> {
        if inner.has_constant_term() {
            return Err(Error::Invalid("inner series has a constant term".into()));
        }
        let order = inner.order.min(f.order());
        let mut total = Self::constant(inner.nvars, order, f.coeff(0).clone());
        let mut power = inner.clone();
        power.order = order;
        for i in 1..=order {
            total = total.add(&power.scale(f.coeff(i)));
            if i < order {
                power = power.mul(inner);
            }
        }
        Ok(total)
    }

    /// `sum_{ij} table(i, j) a^i b^j` for a bivariate coefficient table.
    pub fn apply_bivariate<F: Fn(usize, usize) -> GradedPoly>(table: F, a: &Self, b: &Self) -> Self {
        let order = a.order.min(b.order);
        let mut a_pows = vec![Self::constant(a.nvars, order, GradedPoly::one())];
        let mut b_pows = vec![Self::constant(b.nvars, order, GradedPoly::one())];
        for i in 1..=order {
            a_pows.push(a_pows[i - 1].mul(a));
            b_pows.push(b_pows[i - 1].mul(b));
        }
        let mut total = Self::zero(a.nvars, order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                let c = table(i, j);
                if !c.is_zero() {
                    total = total.add(&a_pows[i].mul(&b_pows[j]).scale(&c));
                }
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn rat_series(v: &[i64]) -> Series<BigRational> {
        Series::from_coeffs(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn rational_reversion() {
        // x/(1-x) = x + x^2 + ... has inverse x/(1+x) = x - x^2 + x^3 - ...
        let f = rat_series(&[0, 1, 1, 1, 1, 1, 1]);
        let g = f.reversion().unwrap();
        assert_eq!(g, rat_series(&[0, 1, -1, 1, -1, 1, -1]));
        assert_eq!(f.compose(&g).unwrap(), Series::x(6));
        assert_eq!(g.compose(&f).unwrap(), Series::x(6));
    }

    #[test]
    fn scaled_linear_term() {
        let f = Series::from_coeffs(vec![int(0), int(2), ratio(1, 3), int(5)]);
        let g = f.reversion().unwrap();
        assert_eq!(f.compose(&g).unwrap(), Series::x(3));
        assert!(rat_series(&[0, 0, 1]).reversion().is_err());
        assert!(rat_series(&[1, 1, 1]).reversion().is_err());
    }

    #[test]
    fn graded_reversion() {
        let mut f: Series<GradedPoly> = Series::x(4);
        for i in 2..=4 {
            f.set_coeff(i, GradedPoly::generator(i - 1));
        }
        let g = f.reversion().unwrap();
        assert_eq!(f.compose(&g).unwrap(), Series::x(4));
        assert_eq!(g.coeff(2), &GradedPoly::generator(1).neg());
    }

    #[test]
    fn multiseries_products_truncate() {
        let s = MultiSeries::var(2, 3, 0);
        let t = MultiSeries::var(2, 3, 1);
        let p = s.add(&t).mul(&s.add(&t)).mul(&s.add(&t)).mul(&s);
        assert!(p.terms().next().is_none());
        let q = s.add(&t).mul(&s.add(&t));
        assert_eq!(q.coeff(&[1, 1]), GradedPoly::constant(int(2)));
    }
}
