//! The `p`-local split setting for an odd prime `p`.
//!
//! The Adams idempotent `e_0` keeps the eigenvalue on `pi_{2m}` when
//! `(p-1) | m` and kills it otherwise. Operations on the Adams summand are
//! modelled by summand sequences `mu`, with `mu_n` acting on
//! `pi_{2(p-1)n}`; `mu` is realizable exactly when its zero-extension passes
//! the Clarke congruences over `Z_(p)`.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::opring::{lambda_to_sigma, CongruenceCert, Flavor, LambdaSeq};
use crate::rational::{from_bigint, is_odd_prime, is_p_integral, ser_rat_matrix, ser_rat_vec, valuation};
use crate::stirling::{factorial, stirling2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeqFlavor {
    /// Indexed by every `m`.
    Full,
    /// Indexed by `n`, entry `n` acting on `pi_{2(p-1)n}`.
    Summand,
}

/// A candidate sequence over `Z_(p)`. Membership is checked, not enforced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PLocalSeq {
    prime: u64,
    #[serde(serialize_with = "ser_rat_vec")]
    entries: Vec<BigRational>,
    flavor: SeqFlavor,
}

fn require_odd_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

impl PLocalSeq {
    pub fn new(prime: u64, entries: Vec<BigRational>, flavor: SeqFlavor) -> Result<Self> {
        require_odd_prime(prime)?;
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { prime, entries, flavor })
    }

    pub fn full(prime: u64, lambda: &LambdaSeq) -> Result<Self> {
        Self::new(prime, lambda.entries().to_vec(), SeqFlavor::Full)
    }

    pub fn summand(prime: u64, mu: Vec<BigRational>) -> Result<Self> {
        Self::new(prime, mu, SeqFlavor::Summand)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn flavor(&self) -> SeqFlavor {
        self.flavor
    }

    /// Eigenvalues on every `pi_{2m}`. A summand sequence is zero-extended to
    /// truncation `(p-1)N`.
    pub fn to_lambda(&self) -> LambdaSeq {
        match self.flavor {
            SeqFlavor::Full => LambdaSeq::new(self.entries.clone()),
            SeqFlavor::Summand => {
                let step = (self.prime - 1) as usize;
                let n = self.entries.len() - 1;
                let mut out = vec![BigRational::zero(); step * n + 1];
                for (j, mu) in self.entries.iter().enumerate() {
                    out[step * j] = mu.clone();
                }
                LambdaSeq::new(out)
            }
        }
        .expect("entries are non-empty")
    }

    /// Pointwise product, for sequences of the same prime, flavor and length.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.prime != other.prime || self.flavor != other.flavor {
            return Err(Error::Invalid("prime or flavor mismatch".into()));
        }
        if self.entries.len() != other.entries.len() {
            return Err(Error::TruncationMismatch {
                left: self.entries.len() - 1,
                right: other.entries.len() - 1,
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).collect();
        Ok(Self { entries, ..self.clone() })
    }

    /// Restriction of a full sequence to the summand indices.
    pub fn restrict(&self) -> Result<Self> {
        if self.flavor != SeqFlavor::Full {
            return Err(Error::Invalid("already a summand sequence".into()));
        }
        let step = (self.prime - 1) as usize;
        let entries = self.entries.iter().step_by(step).cloned().collect();
        Ok(Self { entries, flavor: SeqFlavor::Summand, prime: self.prime })
    }
}

/// `e_0 lambda`.
pub fn adams_idempotent(lambda: &LambdaSeq, p: u64) -> Result<PLocalSeq> {
    require_odd_prime(p)?;
    let step = (p - 1) as usize;
    let entries = lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(m, l)| if m % step == 0 { l.clone() } else { BigRational::zero() })
        .collect();
    PLocalSeq::new(p, entries, SeqFlavor::Full)
}

/// `C_n . lambda` in `Z_(p)` for every `n`. A summand sequence is checked
/// through its zero-extension.
pub fn check_congruences_plocal(seq: &PLocalSeq) -> CongruenceCert {
    let flavor = match seq.flavor {
        SeqFlavor::Full => Flavor::PLocal,
        SeqFlavor::Summand => Flavor::Summand,
    };
    let values = lambda_to_sigma(&seq.to_lambda()).into_entries();
    CongruenceCert::from_values(values, Some(seq.prime), flavor)
}

/// Membership of a summand sequence: all `C_n` up to `(p-1)N` on the
/// zero-extension.
pub fn summand_membership(mu: &PLocalSeq) -> Result<CongruenceCert> {
    if mu.flavor != SeqFlavor::Summand {
        return Err(Error::Invalid("expected a summand sequence".into()));
    }
    Ok(check_congruences_plocal(mu))
}

/// Summand sequence of `e_0 sigma_n`: entry `j` is `n! S((p-1)j, n)`.
pub fn summand_row(p: u64, n: usize, truncation: usize) -> Vec<BigRational> {
    let step = (p - 1) as usize;
    (0..=truncation).map(|j| from_bigint(factorial(n) * stirling2(step * j, n))).collect()
}

/// Result of extracting a basis from `{e_0 sigma_n : n <= (p-1)N}`.
///
/// Rows are reduced in sigma-coordinates, truncated at `(p-1)N`, where the
/// greedy pivots are `p`-adic units. The choice of basis is not canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub prime: u64,
    pub truncation: usize,
    /// Summand sequence of `e_0 sigma_n`, `n = 0..=(p-1)N`.
    #[serde(serialize_with = "ser_rat_matrix")]
    pub summand_rows: Vec<Vec<BigRational>>,
    /// Sigma-coordinates of the zero-extension of each row.
    #[serde(serialize_with = "ser_rat_matrix")]
    pub sigma_rows: Vec<Vec<BigRational>>,
    /// Indices `n` of the selected rows, in pivot order.
    pub selected: Vec<usize>,
    pub pivot_columns: Vec<usize>,
    /// Valuation of the determinant of the selected rows on the pivot
    /// columns; `None` if that minor is singular.
    pub pivot_minor_valuation: Option<i64>,
    /// Row `n` as a combination of the selected rows.
    #[serde(serialize_with = "ser_rat_matrix")]
    pub change_of_basis: Vec<Vec<BigRational>>,
    /// Every coefficient of `change_of_basis` is `p`-integral, and the
    /// combinations reproduce the rows in both coordinate systems.
    pub reproduces: bool,
    pub basis_dependent: bool,
}

pub fn spanning_set_reduce(p: u64, truncation: usize) -> Result<BasisReport> {
    require_odd_prime(p)?;
    let step = (p - 1) as usize;
    let top = step * truncation;
    let summand_rows: Vec<Vec<BigRational>> = (0..=top).map(|n| summand_row(p, n, truncation)).collect();
    let sigma_rows: Vec<Vec<BigRational>> = summand_rows
        .iter()
        .map(|r| {
            let seq = PLocalSeq::summand(p, r.clone()).expect("prime checked");
            lambda_to_sigma(&seq.to_lambda()).into_entries()
        })
        .collect();

    let mut work = sigma_rows.clone();
    let mut remaining: Vec<usize> = (0..work.len()).collect();
    let mut selected = Vec::new();
    let mut pivot_columns = Vec::new();
    for col in 0..=top {
        let best = remaining
            .iter()
            .filter_map(|&r| valuation(&work[r][col], p).map(|v| (v, r)))
            .min();
        let Some((_, pivot)) = best else { continue };
        remaining.retain(|&r| r != pivot);
        let inv = work[pivot][col].recip();
        for &r in &remaining {
            if work[r][col].is_zero() {
                continue;
            }
            let f = &work[r][col] * &inv;
            for c in col..=top {
                let delta = &f * &work[pivot][c];
                work[r][c] -= delta;
            }
        }
        selected.push(pivot);
        pivot_columns.push(col);
    }

    let minor: Vec<Vec<BigRational>> = selected
        .iter()
        .map(|&r| pivot_columns.iter().map(|&c| sigma_rows[r][c].clone()).collect())
        .collect();
    let pivot_minor_valuation = valuation(&linalg::determinant(&minor), p);

    let basis_sigma: Vec<Vec<BigRational>> = selected.iter().map(|&r| sigma_rows[r].clone()).collect();
    let mut change_of_basis = Vec::with_capacity(sigma_rows.len());
    let mut reproduces = true;
    for (n, row) in sigma_rows.iter().enumerate() {
        let coeffs = linalg::solve(&basis_sigma, row);
        let coeffs = match coeffs {
            Some(c) => c,
            None => {
                reproduces = false;
                vec![BigRational::zero(); selected.len()]
            }
        };
        reproduces &= coeffs.iter().all(|c| is_p_integral(c, p));
        let rebuilt: Vec<BigRational> = (0..=truncation)
            .map(|j| selected.iter().zip(&coeffs).map(|(&s, c)| c * &summand_rows[s][j]).sum())
            .collect();
        reproduces &= rebuilt == summand_rows[n];
        change_of_basis.push(coeffs);
    }

    Ok(BasisReport {
        prime: p,
        truncation,
        summand_rows,
        sigma_rows,
        selected,
        pivot_columns,
        pivot_minor_valuation,
        change_of_basis,
        reproduces,
        basis_dependent: true,
    })
}
