//! The universal formal group law over `Q[m_1, m_2, ...]`.
//!
//! The logarithm is `log(x) = x + m_1 x^2 + m_2 x^3 + ...`, the exponential is
//! its compositional inverse, `F(s, t) = exp(log s + log t)`, and the
//! `k`-series is `[k](x) = exp(k log x)`. The Adams operation acts on the
//! orientation by `kappa^-1 [kappa](x)`; its coefficients
//! `B_i(kappa)` drive [`crate::hopfeval`].
//!
//! Everything is truncated at order `T` in the series variable. The
//! coefficient of `x^i` only involves `m_1 .. m_(i-1)`, so the generator
//! bound `D` must satisfy `D >= T - 1`. Violations are reported as
//! [`Error::Capacity`], never silently truncated.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{GradedPoly, KPolynomial};
use crate::rational::int;
use crate::series::{MultiSeries, Series};

/// Largest supported series order.
pub const MAX_ORDER: usize = 30;

/// Truncation orders: series order `T` and generator degree bound `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FglConfig {
    pub order: usize,
    pub degree: usize,
}

impl Default for FglConfig {
    fn default() -> Self {
        Self { order: 10, degree: 9 }
    }
}

impl FglConfig {
    /// Smallest consistent configuration of order `order`.
    pub fn with_order(order: usize) -> Self {
        Self { order, degree: order.saturating_sub(1) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Capacity("series order must be at least 1".into()));
        }
        if self.order > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "series order {} exceeds the maximum {MAX_ORDER}",
                self.order
            )));
        }
        if self.degree + 1 < self.order {
            return Err(Error::Capacity(format!(
                "generator degree bound {} is below order - 1 = {}",
                self.degree,
                self.order - 1
            )));
        }
        Ok(())
    }
}

/// Log and exp series of the universal formal group law at a fixed
/// truncation, with derived tables.
#[derive(Debug, Clone)]
pub struct Fgl {
    config: FglConfig,
    log: Series<GradedPoly>,
    exp: Series<GradedPoly>,
}

impl Fgl {
    pub fn new(config: FglConfig) -> Result<Self> {
        config.validate()?;
        let log = log_series(config.order)?;
        let exp = log.reversion()?;
        Ok(Self { config, log, exp })
    }

    pub fn config(&self) -> FglConfig {
        self.config
    }

    pub fn order(&self) -> usize {
        self.config.order
    }

    pub fn log(&self) -> &Series<GradedPoly> {
        &self.log
    }

    pub fn exp(&self) -> &Series<GradedPoly> {
        &self.exp
    }

    fn check_order(&self, needed: usize) -> Result<()> {
        if needed > self.config.order {
            Err(Error::Capacity(format!(
                "order {needed} requested but the series are truncated at {}",
                self.config.order
            )))
        } else {
            Ok(())
        }
    }

    /// `F(s, t) = exp(log s + log t)` as a bivariate series of total order `T`.
    pub fn formal_sum(&self) -> MultiSeries {
        let s = MultiSeries::var(2, self.config.order, 0);
        let t = MultiSeries::var(2, self.config.order, 1);
        self.add_series(&s, &t).expect("variables have no constant term")
    }

    /// `F(a, b)` for multivariate series without constant terms.
    pub fn add_series(&self, a: &MultiSeries, b: &MultiSeries) -> Result<MultiSeries> {
        let la = MultiSeries::compose_univariate(&self.log, a)?;
        let lb = MultiSeries::compose_univariate(&self.log, b)?;
        MultiSeries::compose_univariate(&self.exp, &la.add(&lb))
    }

    /// Coefficient `a_ij` of `s^i t^j` in `F(s, t)`.
    pub fn fgl_coeff(&self, i: usize, j: usize) -> Result<GradedPoly> {
        self.check_order(i + j)?;
        Ok(self.formal_sum().coeff(&[i as u32, j as u32]))
    }

    /// All `a_ij` with `i + j <= T`, indexed `[i][j]`.
    pub fn fgl_table(&self) -> Vec<Vec<GradedPoly>> {
        let f = self.formal_sum();
        let t = self.config.order;
        (0..=t).map(|i| (0..=(t - i)).map(|j| f.coeff(&[i as u32, j as u32])).collect()).collect()
    }

    /// `[k](x) = exp(k log x)` for a rational `k`.
    pub fn k_series(&self, k: &BigRational) -> Series<GradedPoly> {
        let scaled = self.log.map(|c| c.scale(k));
        self.exp.compose(&scaled).expect("log has no constant term")
    }

    /// `[kappa](x)` with `kappa` kept formal.
    pub fn formal_k_series(&self) -> Series<KPolynomial> {
        let kappa = KPolynomial::kappa_power(1);
        let log = self.log.map(|c| KPolynomial::constant(c.clone()));
        let exp = self.exp.map(|c| KPolynomial::constant(c.clone()));
        exp.compose(&log.scale(&kappa)).expect("log has no constant term")
    }

    /// `kappa^-1 [kappa](x) = sum_i B_i(kappa) x^i`, the action of the Adams
    /// operation on the orientation class.
    pub fn adams_orientation_series(&self) -> Series<KPolynomial> {
        self.formal_k_series()
            .map(|c| c.shift_down().expect("every coefficient of [kappa](x) is divisible by kappa"))
    }
}

/// `x + m_1 x^2 + ... + m_(T-1) x^T`.
pub fn log_series(order: usize) -> Result<Series<GradedPoly>> {
    FglConfig::with_order(order).validate()?;
    let mut s = Series::x(order);
    for i in 2..=order {
        s.set_coeff(i, GradedPoly::generator(i - 1));
    }
    Ok(s)
}

/// Compositional inverse of [`log_series`].
pub fn exp_series(order: usize) -> Result<Series<GradedPoly>> {
    Ok(Fgl::new(FglConfig::with_order(order))?.exp)
}

/// A named element of the coefficient ring with its expression in the
/// rational generators `m_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DictEntry {
    pub name: &'static str,
    pub half_degree: usize,
    pub poly: GradedPoly,
    pub convention: &'static str,
}

/// Integral elements used by the worked examples.
///
/// `x1` is the formal group law coefficient `a_11 = -2 m_1`; the sign is the
/// one for which `b_2 etaR(x1)` evaluates to `(lambda_2 - lambda_1)/2 x1^2`.
/// `a21` is the coefficient `a_21 = 4 m_1^2 - 3 m_2`.
pub fn dictionary() -> Vec<DictEntry> {
    let m1 = GradedPoly::generator(1);
    let m2 = GradedPoly::generator(2);
    vec![
        DictEntry {
            name: "x1",
            half_degree: 1,
            poly: m1.scale(&int(-2)),
            convention: "x1 = a_11 = -2*m1 (negated [CP^1] normalization)",
        },
        DictEntry {
            name: "a21",
            half_degree: 2,
            poly: m1.pow(2).scale(&int(4)).sub(&m2.scale(&int(3))),
            convention: "a21 = a_21, coefficient of s^2 t in exp(log s + log t)",
        },
    ]
}

pub fn lookup(name: &str) -> Option<DictEntry> {
    dictionary().into_iter().find(|e| e.name == name)
}

/// Image of `m_i` under the ring map classifying the multiplicative formal
/// group law `s + t + st`, whose logarithm is `ln(1 + x)`. It sends `x1` to
/// `1` and `a21` to `0`.
pub fn multiplicative_log_coeff(i: usize) -> BigRational {
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    BigRational::new(sign.into(), (i as i64 + 1).into())
}

/// Series tables for golden files.
#[derive(Debug, Clone, Serialize)]
pub struct FglDump {
    pub config: FglConfig,
    pub log: Vec<GradedPoly>,
    pub exp: Vec<GradedPoly>,
    pub fgl_coefficients: Vec<FglCoeffOut>,
    pub adams_orientation: Vec<KPolynomial>,
    pub dictionary: Vec<DictEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FglCoeffOut {
    pub i: usize,
    pub j: usize,
    pub coeff: GradedPoly,
}

impl Fgl {
    pub fn dump(&self) -> FglDump {
        let table = self.fgl_table();
        let mut coeffs = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if i >= 1 && j >= 1 {
                    coeffs.push(FglCoeffOut { i, j, coeff: c.clone() });
                }
            }
        }
        FglDump {
            config: self.config,
            log: self.log.coeffs()[1..].to_vec(),
            exp: self.exp.coeffs()[1..].to_vec(),
            fgl_coefficients: coeffs,
            adams_orientation: self.adams_orientation_series().coeffs()[1..].to_vec(),
            dictionary: dictionary(),
        }
    }
}

impl Default for Fgl {
    fn default() -> Self {
        Self::new(FglConfig::default()).expect("default configuration is valid")
    }
}

/// True when the series is exactly `x`.
pub fn is_identity<C: crate::series::Coefficient>(s: &Series<C>) -> bool {
    s.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| if i == 1 { c == &C::one() } else { c.is_zero() })
}
