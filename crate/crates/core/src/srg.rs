//! Strong regularity of `Cay(F_q, D)` for unions of cyclotomic classes.
//!
//! Three independent routes to the same certificate:
//! * from the exact restricted spectrum (`psi(gamma^a D)` values),
//! * from counting representations of each difference `x - y` with `x, y in D`,
//! * from the closed-form eigenvalues of the two index-2 constructions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive};
use serde::Serialize;

use crate::arith::{euler_phi, gcd, is_prime, isqrt};
use crate::cyclotomic_integer::CyclotomicInteger;
use crate::cyclotomy::{value_counts, ClassMap, ClassSet};
use crate::error::{Error, Result};
use crate::gauss_theory::{
    class_number, classify_index2, index2_gauss_prime_power, index2_gauss_two_primes, mult_order,
    Index2Case, QuadraticGaussValue,
};

/// Largest number of ordered pairs the difference-count oracle will visit.
pub const MAX_ORACLE_PAIRS: u128 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Source {
    Spectrum,
    Oracle,
    Predicted,
}

/// The two restricted eigenvalues and their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RestrictedEigenvalues {
    Integral {
        r: i64,
        s: i64,
        mult_r: i64,
        mult_s: i64,
    },
    /// Conference graph: `r, s = (lambda - mu +- sqrt(discriminant)) / 2`
    /// are irrational and each has multiplicity `(v - 1) / 2`.
    Conference { discriminant: i64, mult: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgCertificate {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    pub eigenvalues: RestrictedEigenvalues,
    pub source: Source,
    /// `mu = 0`: a disjoint union of cliques.
    pub degenerate: bool,
}

impl SrgCertificate {
    pub fn r(&self) -> Option<i64> {
        match self.eigenvalues {
            RestrictedEigenvalues::Integral { r, .. } => Some(r),
            RestrictedEigenvalues::Conference { .. } => None,
        }
    }

    pub fn s(&self) -> Option<i64> {
        match self.eigenvalues {
            RestrictedEigenvalues::Integral { s, .. } => Some(s),
            RestrictedEigenvalues::Conference { .. } => None,
        }
    }

    pub fn multiplicities(&self) -> (i64, i64) {
        match self.eigenvalues {
            RestrictedEigenvalues::Integral { mult_r, mult_s, .. } => (mult_r, mult_s),
            RestrictedEigenvalues::Conference { mult, .. } => (mult, mult),
        }
    }

    /// Same graph parameters regardless of which route produced them.
    pub fn same_parameters(&self, other: &Self) -> bool {
        (self.v, self.k, self.lambda, self.mu, &self.eigenvalues)
            == (other.v, other.k, other.lambda, other.mu, &other.eigenvalues)
    }

    /// Re-checks every parameter identity.
    pub fn is_consistent(&self) -> bool {
        let (v, k, l, mu) = (
            self.v as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        let basic = k * (k - l - 1) == (v - k - 1) * mu && 0 <= l && l < k && mu >= 0;
        let spectral = match self.eigenvalues {
            RestrictedEigenvalues::Integral {
                r,
                s,
                mult_r,
                mult_s,
            } => {
                let (r, s, mr, ms) = (r as i128, s as i128, mult_r as i128, mult_s as i128);
                r > s
                    && mu == k + r * s
                    && l == mu + r + s
                    && mr > 0
                    && ms > 0
                    && mr + ms == v - 1
                    && k + mr * r + ms * s == 0
            }
            RestrictedEigenvalues::Conference { discriminant, mult } => {
                let (d, m) = (discriminant as i128, mult as i128);
                d == (l - mu) * (l - mu) + 4 * (k - mu) && 2 * m == v - 1 && k + m * (l - mu) == 0
            }
        };
        basic && spectral && self.degenerate == (self.mu == 0)
    }

    /// Certificate from `(v, k, lambda, mu)`, deriving the spectrum.
    pub fn from_parameters(v: i64, k: i64, lambda: i64, mu: i64, source: Source) -> Option<Self> {
        let (vv, kk, ll, mm) = (v as i128, k as i128, lambda as i128, mu as i128);
        let sigma = ll - mm;
        let disc = sigma * sigma + 4 * (kk - mm);
        if disc < 0 {
            return None;
        }
        let root = isqrt(disc as u64) as i128;
        let eigenvalues = if root * root == disc {
            if (sigma + root) % 2 != 0 {
                return None;
            }
            let (r, s) = ((sigma + root) / 2, (sigma - root) / 2);
            integral_spectrum(vv, kk, r, s)?
        } else {
            if (vv - 1) % 2 != 0 || kk + (vv - 1) / 2 * sigma != 0 {
                return None;
            }
            RestrictedEigenvalues::Conference {
                discriminant: disc as i64,
                mult: ((vv - 1) / 2) as i64,
            }
        };
        let cert = SrgCertificate {
            v,
            k,
            lambda,
            mu,
            eigenvalues,
            source,
            degenerate: mu == 0,
        };
        cert.is_consistent().then_some(cert)
    }
}

/// Parameters a certificate was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateInputs {
    pub p: u64,
    pub p1: Option<u64>,
    pub p2: Option<u64>,
    pub m: Option<u32>,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "D")]
    pub d: Vec<usize>,
}

impl SrgCertificate {
    /// Flat JSON record; `r`, `s` are null and `discriminant` is set for
    /// conference graphs.
    pub fn to_json(&self, inputs: &CertificateInputs) -> serde_json::Value {
        let (mult_r, mult_s) = self.multiplicities();
        let discriminant = match self.eigenvalues {
            RestrictedEigenvalues::Conference { discriminant, .. } => Some(discriminant),
            RestrictedEigenvalues::Integral { .. } => None,
        };
        serde_json::json!({
            "source": self.source,
            "v": self.v,
            "k": self.k,
            "lambda": self.lambda,
            "mu": self.mu,
            "r": self.r(),
            "s": self.s(),
            "mult_r": mult_r,
            "mult_s": mult_s,
            "discriminant": discriminant,
            "degenerate_flag": self.degenerate,
            "inputs": inputs,
        })
    }
}

fn integral_spectrum(v: i128, k: i128, r: i128, s: i128) -> Option<RestrictedEigenvalues> {
    if r <= s {
        return None;
    }
    let num = -k - (v - 1) * s;
    if num % (r - s) != 0 {
        return None;
    }
    let mult_r = num / (r - s);
    let mult_s = v - 1 - mult_r;
    if mult_r <= 0 || mult_s <= 0 {
        return None;
    }
    Some(RestrictedEigenvalues::Integral {
        r: r as i64,
        s: s as i64,
        mult_r: mult_r as i64,
        mult_s: mult_s as i64,
    })
}

/// Decides strong regularity from the distinct restricted eigenvalues of a
/// `k`-regular graph on `v` vertices.
///
/// Two distinct rational-integer values give the usual certificate. Two
/// distinct irrational values whose sum and product are rational integers
/// give a conference-graph certificate. Anything else is not an srg.
pub fn srg_from_spectrum(
    v: i64,
    k: i64,
    values: &[CyclotomicInteger],
) -> Result<Option<SrgCertificate>> {
    if k <= 0 || k >= v {
        return Err(Error::InconsistentValency { k, v });
    }
    let mut distinct = values.to_vec();
    distinct.sort();
    distinct.dedup();
    let [a, b] = &distinct[..] else {
        return Ok(None);
    };
    let (vv, kk) = (v as i128, k as i128);
    let build = |lambda: i128, mu: i128, eigenvalues| {
        let cert = SrgCertificate {
            v,
            k,
            lambda: lambda as i64,
            mu: mu as i64,
            eigenvalues,
            source: Source::Spectrum,
            degenerate: mu == 0,
        };
        cert.is_consistent().then_some(cert)
    };
    if let (Some(x), Some(y)) = (a.as_integer(), b.as_integer()) {
        let (r, s) = (x.max(y) as i128, x.min(y) as i128);
        let mu = kk + r * s;
        let lambda = mu + r + s;
        return Ok(integral_spectrum(vv, kk, r, s).and_then(|ev| build(lambda, mu, ev)));
    }
    let (Some(sum), Some(prod)) = ((a + b).as_integer(), (a * b).as_integer()) else {
        return Ok(None);
    };
    let (sigma, pi) = (sum as i128, prod as i128);
    let mu = kk + pi;
    let lambda = mu + sigma;
    let disc = sigma * sigma - 4 * pi;
    if (vv - 1) % 2 != 0 {
        return Ok(None);
    }
    Ok(build(
        lambda,
        mu,
        RestrictedEigenvalues::Conference {
            discriminant: disc as i64,
            mult: ((vv - 1) / 2) as i64,
        },
    ))
}

/// Spectrum route for a union of classes, including a check that the
/// multiplicities implied by the parameters match how often each value
/// occurs among the `N` connection sums.
pub fn srg_from_connection_sums(cm: &ClassMap, set: &ClassSet) -> Result<Option<SrgCertificate>> {
    if !cm.is_symmetric(set) {
        return Err(Error::DirectedConnectionSet);
    }
    let sums = cm.connection_sums(set)?;
    let v = cm.field().q() as i64;
    let k = (set.len() * cm.class_size()) as i64;
    let Some(cert) = srg_from_spectrum(v, k, &sums)? else {
        return Ok(None);
    };
    let counts = value_counts(&sums);
    let weight = cm.class_size() as i64;
    let observed: Vec<i64> = counts.iter().map(|(_, c)| *c as i64 * weight).collect();
    let matches = match cert.eigenvalues {
        RestrictedEigenvalues::Integral { mult_r, mult_s, .. } => observed == [mult_s, mult_r],
        RestrictedEigenvalues::Conference { mult, .. } => observed == [mult, mult],
    };
    debug_assert!(matches, "multiplicities disagree with value counts");
    Ok(matches.then_some(cert))
}

/// Partial difference set test: counts, for every nonzero `d`, the ordered
/// pairs `(x, y)` of elements of `D` with `x - y = d`.
pub fn difference_count_oracle(cm: &ClassMap, set: &ClassSet) -> Result<Option<SrgCertificate>> {
    let field = cm.field();
    let members = cm.members(set)?;
    for &x in &members {
        let neg_class = cm.class_of(field.neg(x)).expect("nonzero");
        if !set.contains(neg_class) {
            return Err(Error::DirectedConnectionSet);
        }
    }
    let pairs = (members.len() as u128).pow(2);
    if pairs > MAX_ORACLE_PAIRS {
        return Err(Error::PairBudgetExceeded {
            pairs,
            budget: MAX_ORACLE_PAIRS,
        });
    }
    let order = field.order();
    // zech[k] = log(gamma^k - 1), so gamma^a - gamma^b = gamma^{b + zech[a-b]}
    let zech: Vec<u32> = (0..order)
        .map(|k| {
            let d = field.sub(field.antilog(k as u64), 1);
            if d == 0 {
                u32::MAX
            } else {
                field.log_table()[d as usize]
            }
        })
        .collect();
    let logs: Vec<usize> = members
        .iter()
        .map(|&x| field.log_table()[x as usize] as usize)
        .collect();
    let mut counts = vec![0u32; order];
    for &ly in &logs {
        for &lx in &logs {
            let k = if lx >= ly { lx - ly } else { lx + order - ly };
            if k == 0 {
                continue;
            }
            let d = ly + zech[k] as usize;
            counts[if d >= order { d - order } else { d }] += 1;
        }
    }
    let mut lambda = None;
    let mut mu = None;
    for (l, &c) in counts.iter().enumerate() {
        let slot = if set.contains(l % cm.n()) {
            &mut lambda
        } else {
            &mut mu
        };
        match *slot {
            None => *slot = Some(c),
            Some(prev) if prev != c => return Ok(None),
            Some(_) => {}
        }
    }
    let (Some(lambda), Some(mu)) = (lambda, mu) else {
        // complete graph
        return Ok(None);
    };
    Ok(SrgCertificate::from_parameters(
        field.q() as i64,
        members.len() as i64,
        lambda as i64,
        mu as i64,
        Source::Oracle,
    ))
}

/// Provenance of a predicted eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `(j_a / p1) = 0`.
    ResidueZero,
    /// `(j_a / p1) != 0`, `+c` sign.
    ResiduePlus,
    /// `(j_a / p1) != 0`, `-c` sign.
    ResidueMinus,
    CPlus,
    CMinus,
    C1,
    C2,
    C3,
}

/// Closed-form candidate restricted eigenvalues of one of the two
/// index-2 constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedSpectrum {
    pub p: u64,
    pub p1: u64,
    pub p2: Option<u64>,
    pub m: u32,
    /// Number of classes `N`.
    pub n: u64,
    pub gauss: QuadraticGaussValue,
    /// `v = q = p^f`.
    pub v: BigInt,
    /// Valency `|D|`.
    pub k: BigInt,
    pub values: Vec<(Branch, BigRational)>,
}

impl PredictedSpectrum {
    pub fn distinct_values(&self) -> Vec<BigRational> {
        let mut vals: Vec<BigRational> = self.values.iter().map(|(_, v)| v.clone()).collect();
        vals.sort();
        vals.dedup();
        vals
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|(_, v)| v.is_integer())
    }

    pub fn value(&self, branch: Branch) -> Option<&BigRational> {
        self.values
            .iter()
            .find(|(b, _)| *b == branch)
            .map(|(_, v)| v)
    }

    /// `(r, s)` when the candidates collapse to two integers.
    pub fn two_values(&self) -> Option<(BigInt, BigInt)> {
        let d = self.distinct_values();
        match &d[..] {
            [s, r] if r.is_integer() && s.is_integer() => Some((r.to_integer(), s.to_integer())),
            _ => None,
        }
    }

    /// Certificate derived from the two predicted values, when everything
    /// fits in 64 bits.
    pub fn certificate(&self) -> Option<SrgCertificate> {
        let (r, s) = self.two_values()?;
        let (v, k) = (self.v.to_i64()?, self.k.to_i64()?);
        let (r, s) = (r.to_i128()?, s.to_i128()?);
        let mu = k as i128 + r * s;
        let lambda = mu + r + s;
        let cert = SrgCertificate {
            v,
            k,
            lambda: lambda.to_i64()?,
            mu: mu.to_i64()?,
            eigenvalues: integral_spectrum(v as i128, k as i128, r, s)?,
            source: Source::Predicted,
            degenerate: mu == 0,
        };
        cert.is_consistent().then_some(cert)
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Candidate eigenvalues of `Cay(F_q, C_0 u ... u C_{p1^{m-1}-1})` for
/// `N = p1^m` in the index-2 case.
pub fn predicted_spectrum_prime_power(p: u64, p1: u64, m: u32) -> Result<PredictedSpectrum> {
    let gauss = index2_gauss_prime_power(p, p1, m)?;
    let ph0: BigInt = Pow::pow(big(p), gauss.h0);
    let b = BigInt::from(gauss.b);
    let c = big(gauss.c_abs);
    let den = big(2 * p1);
    let base = -(&ph0 * &b) - 2u32;
    let values = vec![
        (
            Branch::ResidueZero,
            ratio(&ph0 * &b * (p1 - 1) - 2u32, den.clone()),
        ),
        (
            Branch::ResiduePlus,
            ratio(&ph0 * &c * p1 + &base, den.clone()),
        ),
        (Branch::ResidueMinus, ratio(-(&ph0 * &c * p1) + &base, den)),
    ];
    let v: BigInt = Pow::pow(big(p), gauss.f);
    let k = (&v - 1u32) / p1;
    Ok(PredictedSpectrum {
        p,
        p1,
        p2: None,
        m,
        n: p1.pow(m),
        gauss,
        v,
        k,
        values,
    })
}

/// Candidate eigenvalues of `Cay(F_q, U_{i < p1^{m-1}} C_{i p2})` for
/// `N = p1^m p2` in the index-2 case with `{p1, p2} = {1, 3} (mod 4)`.
pub fn predicted_spectrum_two_primes(
    p: u64,
    p1: u64,
    p2: u64,
    m: u32,
) -> Result<PredictedSpectrum> {
    let gauss = index2_gauss_two_primes(p, p1, p2, m)?;
    if gauss.f % 2 != 0 {
        return Err(Error::Precondition(format!(
            "extension degree {} is odd",
            gauss.f
        )));
    }
    let sqrt_q: BigInt = Pow::pow(big(p), gauss.f / 2);
    let ph0: BigInt = Pow::pow(big(p), gauss.h0);
    let half = |x: BigInt| ratio(x, big(2));
    let int = |x: BigInt| BigRational::from_integer(x);
    let b = BigInt::from(gauss.b);
    let c = big(gauss.c_abs);
    let small = big(p1).pow(m - 1);
    let large = big(p1).pow(m);
    let sign = |prime: u64| -> BigInt {
        if (prime - 1) / 2 % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let (e1, e2) = (sign(p1), sign(p2));

    let b_term = half(&b * &ph0 * &small);
    let c_term = half(&c * &ph0 * &large * p2);
    let minus_small = int(-small.clone());
    let t1 = int(&e1 * &small * p2 * &sqrt_q);
    let t2 = int(&e2 * &large * &sqrt_q);

    let c_plus = &minus_small + &b_term + &c_term;
    let c_minus = &minus_small + &b_term - &c_term;
    let c1 = &minus_small - &t1 - &t2 + &b_term * int(big((p1 - 1) * (p2 - 1)));
    let c2 = &minus_small - &t1 - &b_term * int(big(p2 - 1));
    let c3 = &minus_small - &t2 - &b_term * int(big(p1 - 1));

    let n = p1.pow(m) * p2;
    let scale = int(big(n));
    let values = [
        (Branch::CPlus, c_plus),
        (Branch::CMinus, c_minus),
        (Branch::C1, c1),
        (Branch::C2, c2),
        (Branch::C3, c3),
    ]
    .into_iter()
    .map(|(br, t)| (br, t / &scale))
    .collect();
    let v: BigInt = Pow::pow(big(p), gauss.f);
    let k = (&v - 1u32) / (p1 * p2);
    Ok(PredictedSpectrum {
        p,
        p1,
        p2: Some(p2),
        m,
        n,
        gauss,
        v,
        k,
        values,
    })
}

/// Why a candidate fails a corollary check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rejection {
    NotPrime,
    SamePrimes,
    NotCoprime,
    P1TooSmall,
    P1Not3Mod4,
    ResiduesNot13,
    OrderNotFull,
    NotIndex2,
    OddClassNumber,
    DiophantineFail,
    SignUnresolved,
    PrimeEquationFail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePowerWitness {
    /// Order conditions are verified for `m <= 2`; larger `m` rests on the
    /// lifting of `ord_{p1^m}(p)` from `m = 2`.
    pub orders_checked_through_m: u32,
    pub h: u64,
    /// Sign of `b` from `p1 mod 8`.
    pub b: i64,
    /// `b` solved from the Gauss sum congruence at `m = 1`.
    pub b_congruence: i64,
    pub f_m1: u64,
    pub f_m2: u64,
    #[serde(serialize_with = "ser_display")]
    pub r_m1: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub s_m1: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub r_m2: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub s_m2: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePowerCheck {
    pub p: u64,
    pub p1: u64,
    pub holds: bool,
    pub reasons: Vec<Rejection>,
    pub witness: Option<PrimePowerWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoPrimeWitness {
    /// Order conditions are verified for `m <= 2`; larger `m` rests on the
    /// lifting of `ord_{p1^m}(p)` from `m = 2`.
    pub orders_checked_through_m: u32,
    pub h: u64,
    pub b: i64,
    pub c_abs: u64,
    pub f_m1: u64,
    pub f_m2: u64,
    #[serde(serialize_with = "ser_display")]
    pub r_m1: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub s_m1: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub r_m2: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub s_m2: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoPrimeCheck {
    pub p: u64,
    pub p1: u64,
    pub p2: u64,
    pub holds: bool,
    pub reasons: Vec<Rejection>,
    pub witness: Option<TwoPrimeWitness>,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn four_p_pow(p: u64, h: u64) -> BigInt {
    BigInt::from(4u32) * Pow::pow(big(p), h)
}

fn spectrum_pair(spec: &PredictedSpectrum) -> Option<(BigInt, BigInt)> {
    spec.two_values()
}

/// `Cay(F_q, D)` of the prime-power construction is an srg for every `m`,
/// certified by `1 + p1 = 4 p^h` with `h` the class number of `Q(sqrt(-p1))`.
pub fn corollary42_check(p: u64, p1: u64) -> PrimePowerCheck {
    let mut reasons = Vec::new();
    let reject = |reasons: Vec<Rejection>| PrimePowerCheck {
        p,
        p1,
        holds: false,
        reasons,
        witness: None,
    };
    if !is_prime(p) || !is_prime(p1) {
        return reject(vec![Rejection::NotPrime]);
    }
    if p == p1 {
        return reject(vec![Rejection::NotCoprime]);
    }
    if p1 <= 3 {
        reasons.push(Rejection::P1TooSmall);
    }
    if p1 % 4 != 3 {
        reasons.push(Rejection::P1Not3Mod4);
    }
    let index2 = |n: u64| {
        classify_index2(p, n)
            .map(|c| matches!(c, Index2Case::PrimePower { .. }))
            .unwrap_or(false)
    };
    if !(index2(p1) && p1.checked_mul(p1).is_some_and(index2)) {
        reasons.push(Rejection::NotIndex2);
    }
    let h = class_number(p1).expect("primes are squarefree");
    if BigInt::from(1 + p1) != four_p_pow(p, h) {
        reasons.push(Rejection::DiophantineFail);
    }
    if !reasons.is_empty() {
        return reject(reasons);
    }
    let b = if p1 % 8 == 3 { 1 } else { -1 };
    let witness = (|| {
        let s1 = predicted_spectrum_prime_power(p, p1, 1).ok()?;
        let s2 = predicted_spectrum_prime_power(p, p1, 2).ok()?;
        let (r_m1, s_m1) = spectrum_pair(&s1)?;
        let (r_m2, s_m2) = spectrum_pair(&s2)?;
        Some(PrimePowerWitness {
            orders_checked_through_m: 2,
            h,
            b,
            b_congruence: s1.gauss.b,
            f_m1: s1.gauss.f,
            f_m2: s2.gauss.f,
            r_m1,
            s_m1,
            r_m2,
            s_m2,
        })
    })();
    match witness {
        Some(w) if w.b_congruence == b => PrimePowerCheck {
            p,
            p1,
            holds: true,
            reasons,
            witness: Some(w),
        },
        _ => reject(vec![Rejection::SignUnresolved]),
    }
}

/// Conditions under which the two-prime construction is an srg for every `m`.
pub fn corollary52_check(p: u64, p1: u64, p2: u64) -> TwoPrimeCheck {
    let reject = |reasons: Vec<Rejection>| TwoPrimeCheck {
        p,
        p1,
        p2,
        holds: false,
        reasons,
        witness: None,
    };
    if ![p, p1, p2].into_iter().all(is_prime) {
        return reject(vec![Rejection::NotPrime]);
    }
    if p1 == p2 {
        return reject(vec![Rejection::SamePrimes]);
    }
    if gcd(p, p1 * p2) != 1 {
        return reject(vec![Rejection::NotCoprime]);
    }
    let mut reasons = Vec::new();
    let mut residues = [p1 % 4, p2 % 4];
    residues.sort_unstable();
    if residues != [1, 3] {
        reasons.push(Rejection::ResiduesNot13);
    }
    let full = |n: u64| mult_order(p, n).map(|o| o == euler_phi(n)).unwrap_or(false);
    if !(full(p1) && full(p1 * p1) && full(p2)) {
        reasons.push(Rejection::OrderNotFull);
    }
    let n = p1 * p2;
    let is_index2 = n % 2 == 1
        && classify_index2(p, n)
            .map(|c| c.is_index2())
            .unwrap_or(false);
    if !is_index2 {
        reasons.push(Rejection::NotIndex2);
    }
    let h = class_number(n).expect("product of distinct primes is squarefree");
    if h % 2 != 0 {
        reasons.push(Rejection::OddClassNumber);
    }
    if BigInt::from(1 + n) != four_p_pow(p, h) {
        reasons.push(Rejection::DiophantineFail);
    }
    if !reasons.is_empty() {
        return reject(reasons);
    }
    let Ok(gauss) = index2_gauss_two_primes(p, p1, p2, 1) else {
        return reject(vec![Rejection::SignUnresolved]);
    };
    let b = gauss.b;
    let e1: i64 = if (p1 - 1) / 2 % 2 == 0 { 1 } else { -1 };
    let two_ph = 2 * p.pow((h / 2) as u32) as i64;
    if gauss.c_abs != 1
        || b.abs() != 1
        || p1 as i64 != two_ph + e1 * b
        || p2 as i64 != two_ph - e1 * b
    {
        return reject(vec![Rejection::PrimeEquationFail]);
    }
    let witness = (|| {
        let s1 = predicted_spectrum_two_primes(p, p1, p2, 1).ok()?;
        let s2 = predicted_spectrum_two_primes(p, p1, p2, 2).ok()?;
        let (r_m1, s_m1) = spectrum_pair(&s1)?;
        let (r_m2, s_m2) = spectrum_pair(&s2)?;
        Some(TwoPrimeWitness {
            orders_checked_through_m: 2,
            h,
            b,
            c_abs: gauss.c_abs,
            f_m1: s1.gauss.f,
            f_m2: s2.gauss.f,
            r_m1,
            s_m1,
            r_m2,
            s_m2,
        })
    })();
    match witness {
        Some(w) => TwoPrimeCheck {
            p,
            p1,
            p2,
            holds: true,
            reasons,
            witness: Some(w),
        },
        None => reject(vec![Rejection::PrimeEquationFail]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FieldTable;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn cyc(values: &[i64]) -> Vec<CyclotomicInteger> {
        values
            .iter()
            .map(|&v| CyclotomicInteger::from_integer(2, v))
            .collect()
    }

    #[test]
    fn delange_from_spectrum() {
        let cert = srg_from_spectrum(4096, 273, &cyc(&[17, -15]))
            .unwrap()
            .unwrap();
        assert_eq!((cert.lambda, cert.mu), (20, 18));
        assert_eq!(
            cert.eigenvalues,
            RestrictedEigenvalues::Integral {
                r: 17,
                s: -15,
                mult_r: 1911,
                mult_s: 2184
            }
        );
        assert!(!cert.degenerate);
    }

    #[test]
    fn perfect_matching_is_degenerate() {
        let cert = srg_from_spectrum(16, 1, &cyc(&[1, -1])).unwrap().unwrap();
        assert_eq!((cert.lambda, cert.mu), (0, 0));
        assert!(cert.degenerate);
        assert_eq!(cert.multiplicities(), (7, 8));
    }

    #[test]
    fn one_value_or_three_values_is_not_srg() {
        assert_eq!(srg_from_spectrum(16, 15, &cyc(&[-1])).unwrap(), None);
        assert_eq!(srg_from_spectrum(16, 5, &cyc(&[3, 1, -3])).unwrap(), None);
        assert_eq!(
            srg_from_spectrum(16, 16, &cyc(&[1, -1])),
            Err(Error::InconsistentValency { k: 16, v: 16 })
        );
    }

    #[test]
    fn paley_oracle() {
        let f5 = FieldTable::build(5, 1).unwrap();
        let cm = ClassMap::new(&f5, 2).unwrap();
        let squares = ClassSet::new(2, [0]).unwrap();
        let cert = difference_count_oracle(&cm, &squares).unwrap().unwrap();
        assert_eq!((cert.v, cert.k, cert.lambda, cert.mu), (5, 2, 0, 1));
        assert!(matches!(
            cert.eigenvalues,
            RestrictedEigenvalues::Conference {
                discriminant: 5,
                mult: 2
            }
        ));
        let spectral = srg_from_connection_sums(&cm, &squares).unwrap().unwrap();
        assert!(spectral.same_parameters(&cert));

        let f9 = FieldTable::build(3, 2).unwrap();
        let cm = ClassMap::new(&f9, 2).unwrap();
        let cert = difference_count_oracle(&cm, &squares).unwrap().unwrap();
        assert_eq!((cert.v, cert.k, cert.lambda, cert.mu), (9, 4, 1, 2));
        assert_eq!((cert.r(), cert.s()), (Some(1), Some(-2)));
    }

    #[test]
    fn directed_sets_are_rejected() {
        let f13 = FieldTable::build(13, 1).unwrap();
        let cm = ClassMap::new(&f13, 4).unwrap();
        let set = ClassSet::new(4, [0]).unwrap();
        assert_eq!(
            difference_count_oracle(&cm, &set),
            Err(Error::DirectedConnectionSet)
        );
        assert_eq!(
            srg_from_connection_sums(&cm, &set),
            Err(Error::DirectedConnectionSet)
        );
    }

    #[test]
    fn prime_power_predictions() {
        let spec = predicted_spectrum_prime_power(2, 7, 2).unwrap();
        assert_eq!(spec.distinct_values(), vec![int(-439), int(585)]);
        assert_eq!(spec.k, BigInt::from(299_593));
        let spec = predicted_spectrum_prime_power(2, 7, 1).unwrap();
        assert_eq!(spec.distinct_values(), vec![int(-1), int(1)]);
        assert_eq!(spec.k, BigInt::from(1));
        // failing the corollary: three values
        let spec = predicted_spectrum_prime_power(2, 23, 1).unwrap();
        assert_eq!(spec.distinct_values(), vec![int(-23), int(-7), int(9)]);
    }

    #[test]
    fn example_43_formulas() {
        let spec = predicted_spectrum_prime_power(5, 19, 2).unwrap();
        let p85: BigInt = Pow::pow(BigInt::from(5), 85u32);
        let r = (BigInt::from(9) * &p85 - 1) / 19;
        let s = (BigInt::from(-10) * &p85 - 1) / 19;
        assert_eq!(spec.two_values(), Some((r, s)));
    }

    #[test]
    fn two_prime_predictions() {
        let spec = predicted_spectrum_two_primes(2, 3, 5, 2).unwrap();
        assert_eq!(spec.n, 45);
        assert_eq!(spec.distinct_values(), vec![int(-15), int(17)]);
        let spec = predicted_spectrum_two_primes(2, 5, 3, 2).unwrap();
        assert_eq!(spec.distinct_values(), vec![int(-239), int(273)]);
        assert_eq!(spec.k, BigInt::from(69_905));
        let spec = predicted_spectrum_two_primes(3, 5, 7, 1).unwrap();
        assert_eq!(spec.distinct_values(), vec![int(-125), int(118)]);
        assert_eq!(spec.k, BigInt::from(15_184));
        let cert = spec.certificate().unwrap();
        assert_eq!((cert.lambda, cert.mu), (427, 434));
    }

    #[test]
    fn corollary42_examples() {
        let c = corollary42_check(2, 7);
        assert!(c.holds);
        assert_eq!(c.witness.as_ref().unwrap().b, -1);
        let c = corollary42_check(41, 163);
        assert!(c.holds);
        let w = c.witness.unwrap();
        assert_eq!((w.b, w.h), (1, 1));
        let c = corollary42_check(3, 7);
        assert!(!c.holds);
        assert!(c.reasons.contains(&Rejection::DiophantineFail));
    }

    #[test]
    fn corollary52_examples() {
        let c = corollary52_check(2, 3, 5);
        assert!(c.holds);
        let w = c.witness.unwrap();
        assert_eq!((w.h, w.b), (2, 1));
        let c = corollary52_check(3, 17, 19);
        assert!(c.holds);
        assert_eq!(
            (c.witness.as_ref().unwrap().h, c.witness.as_ref().unwrap().b),
            (4, -1)
        );
        let c = corollary52_check(2, 7, 3);
        assert!(!c.holds);
        assert!(c.reasons.contains(&Rejection::DiophantineFail));
    }

    #[test]
    fn parameters_round_trip() {
        let cert = SrgCertificate::from_parameters(4096, 273, 20, 18, Source::Oracle).unwrap();
        assert_eq!((cert.r(), cert.s()), (Some(17), Some(-15)));
        assert_eq!(cert.multiplicities(), (1911, 2184));
        // infeasible parameter set
        assert_eq!(
            SrgCertificate::from_parameters(10, 3, 1, 1, Source::Oracle),
            None
        );
    }
}
