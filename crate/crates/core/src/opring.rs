//! The ring of additive unstable degree-zero K-theory operations, realized on
//! truncated sequences.
//!
//! An operation is stored either by its eigenvalues on the even homotopy
//! groups ([`LambdaSeq`]) or by its coordinates in the topological basis
//! `sigma_n = sum_k (-1)^(n+k) C(n,k) psi^k` ([`SigmaCoeffs`]). The two are
//! related by lower-triangular Stirling transforms:
//!
//! ```text
//! lambda_m = sum_{n<=m} a_n n! {m n}
//! a_n      = (1/n!) sum_{k<=n} (-1)^(n-k) <n k> lambda_k
//! ```
//!
//! The second line is the Clarke congruence form `C_n . lambda`, so an
//! eigenvalue sequence comes from a genuine operation exactly when its
//! sigma-coordinates are integers.
//!
//! Every value is truncated at some index `N`. Nothing here extends a
//! sequence implicitly; [`SigmaCoeffs::resize`] and
//! [`LambdaSeq::extend_to`] zero-fill sigma-coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, from_bigint, is_integer, ser_rat, ser_rat_vec};
use crate::stirling::{binomial, binomial_signed, factorial, stirling1_signed, stirling2};

/// Eigenvalues `(lambda_0, ..., lambda_N)`; entry `m` acts on `pi_{2m}`.
///
/// Entries are rationals so that candidates failing the congruences can be
/// represented.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaSeq {
    #[serde(serialize_with = "ser_rat_vec")]
    entries: Vec<BigRational>,
}

/// Coordinates `(a_0, ..., a_N)` in the sigma basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaCoeffs {
    #[serde(serialize_with = "ser_rat_vec")]
    entries: Vec<BigRational>,
}

macro_rules! truncated_vector {
    ($ty:ident) => {
        impl $ty {
            pub fn new(entries: Vec<BigRational>) -> Result<Self> {
                if entries.is_empty() {
                    return Err(Error::Empty);
                }
                Ok(Self { entries })
            }

            pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
                Self::new(values.into_iter().map(rational::int).collect())
            }

            pub fn zero(truncation: usize) -> Self {
                Self { entries: vec![BigRational::zero(); truncation + 1] }
            }

            pub fn truncation(&self) -> usize {
                self.entries.len() - 1
            }

            pub fn entries(&self) -> &[BigRational] {
                &self.entries
            }

            pub fn into_entries(self) -> Vec<BigRational> {
                self.entries
            }

            pub fn get(&self, index: usize) -> Result<&BigRational> {
                self.entries.get(index).ok_or(Error::IndexOutOfRange {
                    index,
                    truncation: self.truncation(),
                })
            }

            /// Keeps the first `truncation + 1` entries.
            pub fn truncate(&self, truncation: usize) -> Result<Self> {
                if truncation > self.truncation() {
                    return Err(Error::IndexOutOfRange {
                        index: truncation,
                        truncation: self.truncation(),
                    });
                }
                Ok(Self { entries: self.entries[..=truncation].to_vec() })
            }

            pub fn is_integral(&self) -> bool {
                self.entries.iter().all(is_integer)
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                same_truncation(self.truncation(), other.truncation())?;
                let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
                Ok(Self { entries })
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                same_truncation(self.truncation(), other.truncation())?;
                let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
                Ok(Self { entries })
            }

            pub fn scale(&self, c: &BigRational) -> Self {
                Self { entries: self.entries.iter().map(|a| a * c).collect() }
            }
        }
    };
}

truncated_vector!(LambdaSeq);
truncated_vector!(SigmaCoeffs);

fn same_truncation(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::TruncationMismatch { left, right })
    }
}

impl LambdaSeq {
    /// Eigenvalues `(k^m)` of the Adams operation `psi^k`, with `0^0 = 1`.
    pub fn adams(k: i64, truncation: usize) -> Self {
        let mut entries = Vec::with_capacity(truncation + 1);
        let mut power = BigInt::one();
        for _ in 0..=truncation {
            entries.push(from_bigint(power.clone()));
            power *= k;
        }
        Self { entries }
    }

    /// Eigenvalues of `sigma_n`, entry `m` being `n! {m n}`.
    pub fn sigma(n: usize, truncation: usize) -> Self {
        let fact = factorial(n);
        Self {
            entries: (0..=truncation).map(|m| from_bigint(&fact * stirling2(m, n))).collect(),
        }
    }

    /// Lengthens the sequence by zero-filling its sigma-coordinates.
    pub fn extend_to(&self, truncation: usize) -> Self {
        if truncation <= self.truncation() {
            return Self { entries: self.entries[..=truncation].to_vec() };
        }
        sigma_to_lambda(&lambda_to_sigma(self).resize(truncation))
    }
}

impl SigmaCoeffs {
    /// The basis element `sigma_n` as a unit vector.
    pub fn unit(n: usize, truncation: usize) -> Result<Self> {
        if n > truncation {
            return Err(Error::IndexOutOfRange { index: n, truncation });
        }
        let mut s = Self::zero(truncation);
        s.entries[n] = BigRational::one();
        Ok(s)
    }

    /// Coordinates of `psi^k`. For `k >= 0` these are `C(k, n)`; negative
    /// `k` gives the signed binomials `C(k, n)` as well.
    pub fn adams(k: i64, truncation: usize) -> Self {
        Self {
            entries: (0..=truncation).map(|n| from_bigint(binomial_signed(k, n))).collect(),
        }
    }

    /// Truncates or zero-fills to the requested truncation.
    pub fn resize(&self, truncation: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.resize(truncation + 1, BigRational::zero());
        Self { entries }
    }

    /// Product in sigma-coordinates, computed by expanding each `sigma_i`
    /// into Adams operations and multiplying with `psi^k psi^l = psi^(kl)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        same_truncation(self.truncation(), other.truncation())?;
        let n_max = self.truncation();
        let mut out = vec![BigRational::zero(); n_max + 1];
        for (i, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.entries.iter().enumerate() {
                if b.is_zero() || i.max(j) > n_max {
                    continue;
                }
                let ab = a * b;
                for (n, c) in sigma_structure_constants(i, j, n_max).into_iter().enumerate() {
                    if !c.is_zero() {
                        out[n] += &ab * from_bigint(c);
                    }
                }
            }
        }
        Ok(Self { entries: out })
    }
}

/// Coefficients `c_n` (for `n <= n_max`) in `sigma_i sigma_j = sum_n c_n sigma_n`.
pub fn sigma_structure_constants(i: usize, j: usize, n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n_max + 1];
    for k in 0..=i {
        for l in 0..=j {
            let weight = binomial(i, k as i64) * binomial(j, l as i64);
            let sign = (i + j + k + l) % 2 == 1;
            let kl = k * l;
            for (n, slot) in out.iter_mut().enumerate() {
                let term = &weight * binomial(kl, n as i64);
                if sign {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
    }
    out
}

/// `lambda_m = sum_{n<=m} a_n n! {m n}`.
pub fn sigma_to_lambda(a: &SigmaCoeffs) -> LambdaSeq {
    let n_max = a.truncation();
    let weighted: Vec<BigRational> =
        a.entries.iter().enumerate().map(|(n, a_n)| a_n * from_bigint(factorial(n))).collect();
    let entries = (0..=n_max)
        .map(|m| {
            weighted[..=m]
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(|(n, w)| w * from_bigint(stirling2(m, n)))
                .sum()
        })
        .collect();
    LambdaSeq { entries }
}

/// `a_n = C_n . lambda`.
pub fn lambda_to_sigma(lambda: &LambdaSeq) -> SigmaCoeffs {
    let entries = (0..=lambda.truncation()).map(|n| apply_form(&clarke_form(n), lambda)).collect();
    SigmaCoeffs { entries }
}

/// The Clarke form `C_n`: coefficients on `lambda_0, ..., lambda_n` of
/// `(1/n!) sum_k (-1)^(n-k) <n k> lambda_k`.
pub fn clarke_form(n: usize) -> Vec<BigRational> {
    let fact = from_bigint(factorial(n));
    (0..=n).map(|k| from_bigint(stirling1_signed(n, k)) / &fact).collect()
}

/// Evaluates a linear form (coefficients on `lambda_0, lambda_1, ...`).
pub fn apply_form(form: &[BigRational], lambda: &LambdaSeq) -> BigRational {
    form.iter().zip(&lambda.entries).map(|(c, l)| c * l).sum()
}

/// A Clarke form written over a common denominator, e.g.
/// `(1/24)(0, -6, 11, -6, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceRow {
    pub index: usize,
    #[serde(serialize_with = "crate::rational::ser_int_vec")]
    pub numerators: Vec<BigInt>,
    #[serde(serialize_with = "crate::rational::ser_int")]
    pub denominator: BigInt,
}

impl CongruenceRow {
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.numerators.iter().map(|c| BigRational::new(c.clone(), self.denominator.clone())).collect()
    }
}

impl std::fmt::Display for CongruenceRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nums: Vec<String> = self.numerators.iter().map(|n| n.to_string()).collect();
        write!(f, "C_{} = (1/{})({})", self.index, self.denominator, nums.join(","))
    }
}

/// Rows `C_0, ..., C_N`, each over the denominator `n!`.
pub fn congruence_table(truncation: usize) -> Vec<CongruenceRow> {
    (0..=truncation)
        .map(|n| CongruenceRow {
            index: n,
            numerators: (0..=n).map(|k| stirling1_signed(n, k)).collect(),
            denominator: factorial(n),
        })
        .collect()
}

/// One line of a congruence certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceEntry {
    pub index: usize,
    #[serde(serialize_with = "ser_rat")]
    pub value: BigRational,
    pub pass: bool,
    /// `p`-adic valuation of `value` in the `p`-local variant; `None` for
    /// zero or for the integral variant.
    pub valuation: Option<i64>,
}

/// Record of which congruences `C_n . lambda` hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceCert {
    pub truncation: usize,
    pub prime: Option<u64>,
    pub flavor: Flavor,
    pub entries: Vec<CongruenceEntry>,
    pub verdict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Integral,
    PLocal,
    Summand,
}

impl CongruenceCert {
    pub(crate) fn from_values(
        values: Vec<BigRational>,
        prime: Option<u64>,
        flavor: Flavor,
    ) -> Self {
        let entries: Vec<CongruenceEntry> = values
            .into_iter()
            .enumerate()
            .map(|(index, value)| {
                let (pass, valuation) = match prime {
                    None => (is_integer(&value), None),
                    Some(p) => {
                        let v = rational::valuation(&value, p);
                        (v.is_none_or(|v| v >= 0), v)
                    }
                };
                CongruenceEntry { index, value, pass, valuation }
            })
            .collect();
        let verdict = entries.iter().all(|e| e.pass);
        Self { truncation: entries.len() - 1, prime, flavor, entries, verdict }
    }

    /// Smallest index whose congruence fails.
    pub fn first_failure(&self) -> Option<&CongruenceEntry> {
        self.entries.iter().find(|e| !e.pass)
    }
}

/// Checks `C_n . lambda` in the integers for `n = 0..=N`.
pub fn check_congruences(lambda: &LambdaSeq) -> CongruenceCert {
    CongruenceCert::from_values(lambda_to_sigma(lambda).entries, None, Flavor::Integral)
}

/// Composition of diagonal operations: pointwise product of eigenvalues.
pub fn multiply(lambda: &LambdaSeq, other: &LambdaSeq) -> Result<LambdaSeq> {
    same_truncation(lambda.truncation(), other.truncation())?;
    Ok(LambdaSeq { entries: lambda.entries.iter().zip(&other.entries).map(|(a, b)| a * b).collect() })
}

/// Coproduct of `sigma_n`: `d[i][j]` with `Delta sigma_n = sum d_ij sigma_i (x) sigma_j`.
///
/// Adams operations are group-like, so
/// `d_ij = sum_k (-1)^(n+k) C(n,k) C(k,i) C(k,j)`.
pub fn coproduct_sigma(n: usize) -> Vec<Vec<BigInt>> {
    let mut d = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for k in 0..=n {
        let outer = binomial(n, k as i64);
        let negative = (n + k) % 2 == 1;
        for (i, row) in d.iter_mut().enumerate().take(k + 1) {
            let left = &outer * binomial(k, i as i64);
            for (j, slot) in row.iter_mut().enumerate().take(k + 1) {
                let term = &left * binomial(k, j as i64);
                if negative {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
    }
    d
}

/// Action on `pi_{2m}`: multiplication by `lambda_m`.
pub fn act_on_homotopy(lambda: &LambdaSeq, m: usize, t: &BigRational) -> Result<BigRational> {
    Ok(lambda.get(m)? * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    // Expands sigma_n = sum_k (-1)^(n+k) C(n,k) psi^k directly.
    fn lambda_by_adams_expansion(a: &SigmaCoeffs) -> LambdaSeq {
        let n_max = a.truncation();
        let mut total = LambdaSeq::zero(n_max);
        for (n, a_n) in a.entries().iter().enumerate() {
            for k in 0..=n {
                let mut c = a_n * from_bigint(binomial(n, k as i64));
                if (n + k) % 2 == 1 {
                    c = -c;
                }
                total = total.add(&LambdaSeq::adams(k as i64, n_max).scale(&c)).unwrap();
            }
        }
        total
    }

    #[test]
    fn sigma_to_lambda_examples() {
        let a = SigmaCoeffs::from_integers([1, 0, 0, 0, 0]).unwrap();
        assert_eq!(sigma_to_lambda(&a).entries(), ints(&[1, 0, 0, 0, 0]).as_slice());

        let a = SigmaCoeffs::from_integers([1, 2, 1, 0, 0, 0]).unwrap();
        let lambda = sigma_to_lambda(&a);
        assert_eq!(lambda.entries(), ints(&[1, 2, 4, 8, 16, 32]).as_slice());
        assert_eq!(lambda, lambda_by_adams_expansion(&a));

        for m in 0..8 {
            let lambda = sigma_to_lambda(&SigmaCoeffs::unit(m, 9).unwrap());
            for j in 0..m {
                assert!(lambda.entries()[j].is_zero());
            }
            assert_eq!(lambda.entries()[m], from_bigint(factorial(m)));
        }
    }

    #[test]
    fn lambda_to_sigma_examples() {
        let a = lambda_to_sigma(&LambdaSeq::adams(2, 4));
        assert_eq!(a.entries(), ints(&[1, 2, 1, 0, 0]).as_slice());
        let a = lambda_to_sigma(&LambdaSeq::from_integers([1, 1, 1, 1, 1, 1]).unwrap());
        assert_eq!(a.entries(), ints(&[1, 1, 0, 0, 0, 0]).as_slice());
        let a = lambda_to_sigma(&LambdaSeq::from_integers([1, 0, 0, 0]).unwrap());
        assert_eq!(a.entries(), ints(&[1, 0, 0, 0]).as_slice());
    }

    #[test]
    fn adams_coordinates_are_binomials() {
        for k in -5i64..=5 {
            assert_eq!(lambda_to_sigma(&LambdaSeq::adams(k, 12)), SigmaCoeffs::adams(k, 12));
        }
    }

    #[test]
    fn congruence_examples() {
        assert!(check_congruences(&LambdaSeq::adams(2, 10)).verdict);

        let cert = check_congruences(&LambdaSeq::from_integers([0, 1, 2, 3, 4]).unwrap());
        assert!(!cert.verdict);
        let fail = cert.first_failure().unwrap();
        assert_eq!(fail.index, 2);
        assert_eq!(fail.value, ratio(1, 2));

        assert!(check_congruences(&LambdaSeq::from_integers([7, 0, 0, 0, 0]).unwrap()).verdict);
        // N = 0: only lambda_0 is checked
        assert!(!check_congruences(&LambdaSeq::new(vec![ratio(1, 3)]).unwrap()).verdict);
    }

    #[test]
    fn empty_sequences_rejected() {
        assert_eq!(LambdaSeq::new(vec![]), Err(Error::Empty));
        assert_eq!(SigmaCoeffs::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn table_rows() {
        let table = congruence_table(4);
        assert_eq!(table[2].to_string(), "C_2 = (1/2)(0,-1,1)");
        assert_eq!(table[4].to_string(), "C_4 = (1/24)(0,-6,11,-6,1)");
        assert_eq!(table[3].coefficients(), clarke_form(3));
    }

    #[test]
    fn multiply_examples() {
        let p6 = multiply(&LambdaSeq::adams(2, 8), &LambdaSeq::adams(3, 8)).unwrap();
        assert_eq!(p6, LambdaSeq::adams(6, 8));
        let l = LambdaSeq::from_integers([3, -1, 4, 1, 5]).unwrap();
        assert_eq!(multiply(&l, &LambdaSeq::adams(1, 4)).unwrap(), l);
        let s1 = LambdaSeq::sigma(1, 6);
        assert_eq!(s1.entries(), ints(&[0, 1, 1, 1, 1, 1, 1]).as_slice());
        assert_eq!(multiply(&s1, &s1).unwrap(), s1);
        assert!(matches!(
            multiply(&s1, &LambdaSeq::adams(2, 3)),
            Err(Error::TruncationMismatch { left: 6, right: 3 })
        ));
    }

    #[test]
    fn structure_constants_small() {
        // sigma_1 sigma_1 = sigma_1
        assert_eq!(sigma_structure_constants(1, 1, 3), vec![0.into(), 1.into(), 0.into(), 0.into()]);
        // sigma_1 acts as the identity in positive degrees, so sigma_1 sigma_2 = sigma_2
        let c = sigma_structure_constants(1, 2, 4);
        assert_eq!(c, vec![0.into(), 0.into(), 1.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct_sigma(0), vec![vec![BigInt::one()]]);
        let d1 = coproduct_sigma(1);
        assert_eq!(d1, vec![vec![0.into(), 1.into()], vec![1.into(), 1.into()]]);
    }

    // 2-D transform oracle: pairing Delta sigma_n with w^m (x) w^m' equals
    // sum_k (-1)^(n+k) C(n,k) k^m k^m'.
    #[test]
    fn coproduct_matches_double_transform() {
        for n in 0..=6 {
            let d = coproduct_sigma(n);
            for m in 0..=7 {
                for mp in 0..=7 {
                    let mut lhs = BigInt::zero();
                    for i in 0..=n {
                        for j in 0..=n {
                            lhs += &d[i][j]
                                * factorial(i)
                                * stirling2(m, i)
                                * factorial(j)
                                * stirling2(mp, j);
                        }
                    }
                    let mut rhs = BigInt::zero();
                    for k in 0..=n {
                        let pow = |e: usize| if e == 0 { BigInt::one() } else { BigInt::from(k).pow(e as u32) };
                        let t = binomial(n, k as i64) * pow(m) * pow(mp);
                        if (n + k) % 2 == 0 {
                            rhs += t
                        } else {
                            rhs -= t
                        }
                    }
                    assert_eq!(lhs, rhs, "n={n} m={m} m'={mp}");
                }
            }
        }
    }

    #[test]
    fn coproduct_counit() {
        // epsilon(sigma_j) = [j = 0], so the j = 0 column recovers sigma_n
        for n in 0..=8 {
            let d = coproduct_sigma(n);
            for i in 0..=n {
                let expected = if i == n { BigInt::one() } else { BigInt::zero() };
                assert_eq!(d[i][0], expected);
                assert_eq!(d[0][i], expected);
            }
        }
    }

    #[test]
    fn action_on_homotopy() {
        assert_eq!(act_on_homotopy(&LambdaSeq::adams(3, 4), 2, &int(1)).unwrap(), int(9));
        assert_eq!(act_on_homotopy(&LambdaSeq::sigma(0, 3), 0, &int(5)).unwrap(), int(5));
        assert_eq!(act_on_homotopy(&LambdaSeq::sigma(2, 5), 4, &int(1)).unwrap(), int(14));
        assert!(act_on_homotopy(&LambdaSeq::adams(3, 4), 5, &int(1)).is_err());
    }

    #[test]
    fn extension_zero_fills_sigma() {
        let l = LambdaSeq::adams(2, 2);
        assert_eq!(l.extend_to(6), LambdaSeq::adams(2, 6));
        assert_eq!(l.extend_to(1), LambdaSeq::adams(2, 1));
    }

    #[test]
    fn triangular_diagonals() {
        for n in 0..15 {
            assert_eq!(sigma_to_lambda(&SigmaCoeffs::unit(n, n).unwrap()).entries()[n], from_bigint(factorial(n)));
            assert_eq!(clarke_form(n)[n], BigRational::new(BigInt::one(), factorial(n)));
        }
    }

    fn rat_vec() -> impl Strategy<Value = Vec<BigRational>> {
        prop::collection::vec((-50i64..50, 1i64..12), 1..31)
            .prop_map(|v| v.into_iter().map(|(n, d)| ratio(n, d)).collect())
    }

    proptest! {
        #[test]
        fn round_trips(v in rat_vec()) {
            let a = SigmaCoeffs::new(v.clone()).unwrap();
            prop_assert_eq!(lambda_to_sigma(&sigma_to_lambda(&a)), a);
            let l = LambdaSeq::new(v).unwrap();
            prop_assert_eq!(sigma_to_lambda(&lambda_to_sigma(&l)), l);
        }

        #[test]
        fn membership_is_integrality(v in prop::collection::vec((-30i64..30, 1i64..4), 1..12)) {
            let l = LambdaSeq::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect()).unwrap();
            let cert = check_congruences(&l);
            let a = lambda_to_sigma(&l);
            prop_assert_eq!(cert.verdict, a.is_integral());
            for e in &cert.entries {
                prop_assert_eq!(&e.value, &a.entries()[e.index]);
            }
        }

        #[test]
        fn ring_closure(a in prop::collection::vec(-20i64..20, 1..12), b in prop::collection::vec(-20i64..20, 1..12)) {
            let n = a.len().min(b.len());
            let la = sigma_to_lambda(&SigmaCoeffs::from_integers(a[..n].iter().copied()).unwrap());
            let lb = sigma_to_lambda(&SigmaCoeffs::from_integers(b[..n].iter().copied()).unwrap());
            prop_assert!(check_congruences(&multiply(&la, &lb).unwrap()).verdict);
        }

        #[test]
        fn sigma_product_matches_pointwise(a in rat_vec(), b in rat_vec()) {
            let n = a.len().min(b.len()).min(12);
            let sa = SigmaCoeffs::new(a[..n].to_vec()).unwrap();
            let sb = SigmaCoeffs::new(b[..n].to_vec()).unwrap();
            let via_sigma = sigma_to_lambda(&sa.multiply(&sb).unwrap());
            let pointwise = multiply(&sigma_to_lambda(&sa), &sigma_to_lambda(&sb)).unwrap();
            prop_assert_eq!(via_sigma, pointwise);
        }
    }
}
