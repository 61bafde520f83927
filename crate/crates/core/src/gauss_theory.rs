//! Number-theoretic side of the construction: multiplicative orders, the
//! index-2 classification, class numbers of imaginary quadratic fields, and
//! closed-form Gauss sums in the semi-primitive and index-2 cases.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::arith::{
    checked_pow, euler_phi, factorize, gcd, is_prime, is_squarefree, isqrt, order_dividing, pow_mod,
};
use crate::error::{Error, Result};
use crate::finite_field::FieldTable;

/// Largest field order accepted by [`gauss_sum_numeric`].
pub const NUMERIC_FIELD_CAP: usize = 1 << 16;

/// Upper bound on `|b|` scanned when solving `b^2 + delta c^2 = 4 p^h`.
const DIOPHANTINE_SCAN_CAP: u64 = 100_000_000;

/// Order of `p` modulo `n`.
pub fn mult_order(p: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall { n, min: 2 });
    }
    if gcd(p % n, n) != 1 {
        return Err(Error::NotCoprime { p, n });
    }
    Ok(order_dividing(p % n, n, euler_phi(n)))
}

/// Whether `-1` is a power of `p` modulo `n`; returns the minimal `t` with
/// `p^t = -1 (mod n)` if so.
pub fn minus_one_exponent(p: u64, n: u64) -> Result<Option<u64>> {
    let ord = mult_order(p, n)?;
    // <p> is cyclic, so -1 lies in it iff it is the element p^{ord/2}
    if ord % 2 == 0 && pow_mod(p, ord / 2, n) == n - 1 {
        Ok(Some(ord / 2))
    } else {
        Ok(None)
    }
}

/// The three odd-`N` shapes of the index-2 case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Index2Case {
    /// `N = p1^m` with `p1 = 3 (mod 4)`.
    PrimePower {
        p1: u64,
        m: u32,
    },
    /// `N = p1^m p2^n`, `{p1, p2} = {1, 3} (mod 4)`, `p` of full order
    /// modulo both prime powers.
    TwoPrimesSemiprimitiveMix {
        p1: u64,
        m: u32,
        p2: u64,
        n: u32,
    },
    /// `N = p1^m p2^n`, `p` of full order modulo `p1^m` and of half order
    /// modulo `p2^n` with `p2 = 3 (mod 4)`.
    TwoPrimesHalfOrder {
        p1: u64,
        m: u32,
        p2: u64,
        n: u32,
    },
    NotIndex2,
}

impl Index2Case {
    pub fn tag(&self) -> &'static str {
        match self {
            Index2Case::PrimePower { .. } => "PRIME_POWER",
            Index2Case::TwoPrimesSemiprimitiveMix { .. } => "TWO_PRIMES_SEMIPRIMITIVE_MIX",
            Index2Case::TwoPrimesHalfOrder { .. } => "TWO_PRIMES_HALF_ORDER",
            Index2Case::NotIndex2 => "NOT_INDEX2",
        }
    }

    pub fn is_index2(&self) -> bool {
        !matches!(self, Index2Case::NotIndex2)
    }
}

/// Decides whether `<p>` has index 2 in `(Z/NZ)^*` with `-1` outside it, and
/// if so which of the three shapes `N` has.
pub fn classify_index2(p: u64, n: u64) -> Result<Index2Case> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n <= 1 {
        return Err(Error::ModulusTooSmall { n, min: 3 });
    }
    if n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let ord = mult_order(p, n)?;
    if 2 * ord != euler_phi(n) || minus_one_exponent(p, n)?.is_some() {
        return Ok(Index2Case::NotIndex2);
    }
    let factors = factorize(n);
    match factors[..] {
        [(p1, m)] => Ok(Index2Case::PrimePower { p1, m }),
        [(a, ea), (b, eb)] => {
            let full = |prime: u64, e: u32| -> Result<bool> {
                let pe = prime.pow(e);
                Ok(mult_order(p, pe)? == euler_phi(pe))
            };
            match (full(a, ea)?, full(b, eb)?) {
                (true, true) => Ok(Index2Case::TwoPrimesSemiprimitiveMix {
                    p1: a,
                    m: ea,
                    p2: b,
                    n: eb,
                }),
                (true, false) => Ok(Index2Case::TwoPrimesHalfOrder {
                    p1: a,
                    m: ea,
                    p2: b,
                    n: eb,
                }),
                (false, true) => Ok(Index2Case::TwoPrimesHalfOrder {
                    p1: b,
                    m: eb,
                    p2: a,
                    n: ea,
                }),
                (false, false) => Ok(Index2Case::NotIndex2),
            }
        }
        // index 2 with -1 excluded forces at most two odd prime divisors
        _ => Ok(Index2Case::NotIndex2),
    }
}

/// Fundamental discriminant of `Q(sqrt(-d))` for squarefree `d`.
pub fn fundamental_discriminant(d: u64) -> i64 {
    if d % 4 == 3 {
        -(d as i64)
    } else {
        -4 * d as i64
    }
}

/// Reduced primitive positive definite forms `(a, b, c)` of discriminant
/// `disc < 0`: `|b| <= a <= c`, and `b >= 0` when `|b| = a` or `a = c`.
pub fn reduced_forms(disc: i64) -> Vec<(i64, i64, i64)> {
    assert!(disc < 0 && disc.rem_euclid(4) <= 1, "not a discriminant");
    let abs = -disc;
    let mut forms = Vec::new();
    let mut a = 1i64;
    // a <= c and b^2 <= a^2 give 3a^2 <= |disc|
    while 3 * a * a <= abs {
        for b in -a + 1..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (a == c && b < 0) {
                continue;
            }
            let g = gcd(gcd(a as u64, b.unsigned_abs()), c as u64);
            if g == 1 {
                forms.push((a, b, c));
            }
        }
        a += 1;
    }
    forms
}

/// Class number of `Q(sqrt(-d))`, by counting reduced forms.
pub fn class_number(d: u64) -> Result<u64> {
    if d == 0 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    Ok(reduced_forms(fundamental_discriminant(d)).len() as u64)
}

/// `g(chi) = sign * p^{r/2}` for a character of order `N` in the
/// semi-primitive case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiprimitiveGauss {
    pub p: u64,
    pub n: u64,
    pub r: u64,
    pub t: u64,
    pub s: u64,
    pub sign: i8,
    pub half_r: u64,
}

impl SemiprimitiveGauss {
    pub fn value(&self) -> BigInt {
        let mag: BigInt = Pow::pow(BigInt::from(self.p), self.half_r);
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }
}

pub fn semiprimitive_gauss(p: u64, n: u64, r: u64) -> Result<SemiprimitiveGauss> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n <= 2 {
        return Err(Error::ModulusTooSmall { n, min: 3 });
    }
    let t = minus_one_exponent(p, n)?.ok_or(Error::NotSemiprimitive { p, n })?;
    if r == 0 || r % (2 * t) != 0 {
        return Err(Error::DegreeNotMultiple { r, two_t: 2 * t });
    }
    let s = r / (2 * t);
    let exponent = if p == 2 {
        s - 1
    } else {
        // (p^t + 1) s / N, reduced mod 2 using exact arithmetic
        let pt: BigInt = Pow::pow(BigInt::from(p), t) + 1u32;
        let q = pt * s / BigInt::from(n);
        let parity = (q % 2u32 == BigInt::one()) as u64;
        s - 1 + parity
    };
    Ok(SemiprimitiveGauss {
        p,
        n,
        r,
        t,
        s,
        sign: if exponent % 2 == 0 { 1 } else { -1 },
        half_r: r / 2,
    })
}

/// `g = (b + c sqrt(-delta)) / 2 * p^{h0}`, with the sign of `c` left open.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticGaussValue {
    pub p: u64,
    /// Extension degree `f = ord_N(p)`.
    pub f: u64,
    pub h: u64,
    pub h0: u64,
    pub b: i64,
    pub c_abs: u64,
    pub delta: u64,
}

impl QuadraticGaussValue {
    /// `b^2 + delta c^2 = 4 p^h`.
    pub fn satisfies_norm_equation(&self) -> bool {
        let lhs =
            BigInt::from(self.b) * self.b + BigInt::from(self.delta) * self.c_abs * self.c_abs;
        lhs == BigInt::from(4u32) * Pow::pow(BigInt::from(self.p), self.h)
    }

    /// `|g|^2 = p^f`, i.e. `(b^2 + delta c^2)/4 * p^{2 h0} = p^f`.
    pub fn has_absolute_value_sqrt_q(&self) -> bool {
        let norm4 =
            BigInt::from(self.b) * self.b + BigInt::from(self.delta) * self.c_abs * self.c_abs;
        let p = BigInt::from(self.p);
        norm4 * Pow::pow(&p, 2 * self.h0) == BigInt::from(4u32) * Pow::pow(&p, self.f)
    }

    /// Approximate value with the given sign on `c`.
    pub fn to_complex(&self, c_sign: i8) -> (f64, f64) {
        let scale = (self.p as f64).powi(self.h0 as i32);
        let re = self.b as f64 / 2.0 * scale;
        let im = c_sign as f64 * self.c_abs as f64 * (self.delta as f64).sqrt() / 2.0 * scale;
        (re, im)
    }
}

/// All `(b, |c|)` with `b^2 + delta c^2 = 4 p^h`, `c > 0` and `b, c` prime to `p`.
pub fn norm_equation_solutions(p: u64, h: u64, delta: u64) -> Result<Vec<(i64, u64)>> {
    let target = checked_pow(p, h)
        .and_then(|ph| ph.checked_mul(4))
        .ok_or(Error::Overflow("4 p^h does not fit in 64 bits"))?;
    let bound = isqrt(target);
    if bound > DIOPHANTINE_SCAN_CAP {
        return Err(Error::Overflow("norm equation search range too large"));
    }
    let mut out = Vec::new();
    for b_abs in 0..=bound {
        let rest = target - b_abs * b_abs;
        if rest % delta != 0 {
            continue;
        }
        let c2 = rest / delta;
        let c = isqrt(c2);
        if c == 0 || c * c != c2 || b_abs % p == 0 || c % p == 0 {
            continue;
        }
        out.push((-(b_abs as i64), c));
        if b_abs != 0 {
            out.push((b_abs as i64, c));
        }
    }
    out.sort();
    Ok(out)
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn prime_power(p1: u64, m: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::Precondition("exponent m must be positive".into()));
    }
    checked_pow(p1, m as u64).ok_or(Error::Overflow("p1^m does not fit in 64 bits"))
}

fn pick_unique_b(
    solutions: &[(i64, u64)],
    accept: impl Fn(i64) -> bool,
) -> Result<Option<(i64, u64)>> {
    let picked: Vec<(i64, u64)> = solutions
        .iter()
        .copied()
        .filter(|&(b, _)| accept(b))
        .collect();
    let mut bs: Vec<i64> = picked.iter().map(|&(b, _)| b).collect();
    bs.dedup();
    match bs.len() {
        0 => Ok(None),
        1 => Ok(Some(picked[0])),
        _ => Err(Error::AmbiguousSolution(bs)),
    }
}

/// Index-2 Gauss sum for a character of order `N = p1^m`.
pub fn index2_gauss_prime_power(p: u64, p1: u64, m: u32) -> Result<QuadraticGaussValue> {
    for x in [p, p1] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    require(p1 > 3 && p1 % 4 == 3, || {
        format!("p1 = {p1} must be > 3 and = 3 (mod 4)")
    })?;
    let n = prime_power(p1, m)?;
    let case = classify_index2(p, n)?;
    require(matches!(case, Index2Case::PrimePower { .. }), || {
        format!("{p} is not in the index-2 case modulo {n}")
    })?;
    let f = mult_order(p, n)?;
    let h = class_number(p1)?;
    if f < h || (f - h) % 2 != 0 {
        return Err(Error::OddExponentGap { f, h });
    }
    let h0 = (f - h) / 2;
    let solutions = norm_equation_solutions(p, h, p1)?;
    let ph0 = pow_mod(p, h0, p1);
    let (b, c_abs) = pick_unique_b(&solutions, |b| {
        (b.rem_euclid(p1 as i64) as u64 * ph0 + 2) % p1 == 0
    })?
    .ok_or(Error::NoDiophantineSolution { delta: p1, p, h })?;
    Ok(QuadraticGaussValue {
        p,
        f,
        h,
        h0,
        b,
        c_abs,
        delta: p1,
    })
}

/// Index-2 Gauss sum for a character of order `N = p1^m p2` with
/// `{p1, p2} = {1, 3} (mod 4)` and `p` of full order modulo `p1^m` and `p2`.
pub fn index2_gauss_two_primes(p: u64, p1: u64, p2: u64, m: u32) -> Result<QuadraticGaussValue> {
    for x in [p, p1, p2] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    require(p1 != p2, || "p1 and p2 must differ".into())?;
    let mut residues = [p1 % 4, p2 % 4];
    residues.sort_unstable();
    require(residues == [1, 3], || {
        format!(
            "{{p1, p2}} mod 4 = {{{}, {}}}, need {{1, 3}}",
            p1 % 4,
            p2 % 4
        )
    })?;
    let p1m = prime_power(p1, m)?;
    let n = p1m
        .checked_mul(p2)
        .ok_or(Error::Overflow("p1^m p2 does not fit in 64 bits"))?;
    require(mult_order(p, p1m)? == euler_phi(p1m), || {
        format!("ord_{p1m}({p}) is not phi({p1m})")
    })?;
    require(mult_order(p, p2)? == p2 - 1, || {
        format!("ord_{p2}({p}) is not {}", p2 - 1)
    })?;
    let f = mult_order(p, n)?;
    require(
        2 * f == euler_phi(n) && minus_one_exponent(p, n)?.is_none(),
        || format!("{p} is not in the index-2 case modulo {n}"),
    )?;
    let delta = p1 * p2;
    let h = class_number(delta)?;
    if h % 2 != 0 {
        return Err(Error::OddClassNumber(h));
    }
    if f < h || (f - h) % 2 != 0 {
        return Err(Error::OddExponentGap { f, h });
    }
    let h0 = (f - h) / 2;
    let ell = if p1 % 4 == 3 { p1 } else { p2 };
    let target = 2 * pow_mod(p, h / 2, ell) % ell;
    let solutions = norm_equation_solutions(p, h, delta)?;
    let (b, c_abs) = pick_unique_b(&solutions, |b| b.rem_euclid(ell as i64) as u64 == target)?
        .ok_or(Error::NoDiophantineSolution { delta, p, h })?;
    Ok(QuadraticGaussValue {
        p,
        f,
        h,
        h0,
        b,
        c_abs,
        delta,
    })
}

/// Floating-point Gauss sum with an error bound, for cross-validation only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericGauss {
    pub re: f64,
    pub im: f64,
    pub error_bound: f64,
}

impl NumericGauss {
    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn distance_to(&self, (re, im): (f64, f64)) -> f64 {
        ((self.re - re).powi(2) + (self.im - im).powi(2)).sqrt()
    }
}

/// `g(chi) = sum_{a != 0} chi(a) psi(a)` with `chi(gamma) = exp(2 pi i j / N)`.
pub fn gauss_sum_numeric(field: &FieldTable, n: usize, j: usize) -> Result<NumericGauss> {
    let q = field.q();
    if q > NUMERIC_FIELD_CAP {
        return Err(Error::NumericScaleCap {
            q,
            cap: NUMERIC_FIELD_CAP,
        });
    }
    if n == 0 {
        return Err(Error::ModulusTooSmall { n: 0, min: 1 });
    }
    let order = field.order();
    if order % n != 0 {
        return Err(Error::ClassCountNotDivisor { n, order });
    }
    if j >= n {
        return Err(Error::ClassIndexOutOfRange { index: j, n });
    }
    let p = field.p() as usize;
    let unit = |k: usize, m: usize| {
        let theta = std::f64::consts::TAU * k as f64 / m as f64;
        (theta.cos(), theta.sin())
    };
    let chi: Vec<(f64, f64)> = (0..n).map(|k| unit(k, n)).collect();
    let psi: Vec<(f64, f64)> = (0..p).map(|k| unit(k, p)).collect();
    let traces = field.trace_table();
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (k, &x) in field.antilog_table().iter().enumerate() {
        let (cr, ci) = chi[(j * k) % n];
        let (sr, si) = psi[traces[x as usize] as usize];
        re += cr * sr - ci * si;
        im += cr * si + ci * sr;
    }
    Ok(NumericGauss {
        re,
        im,
        error_bound: q as f64 * 2f64.powi(-50),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_from_examples() {
        assert_eq!(mult_order(2, 49).unwrap(), 21);
        assert_eq!(mult_order(5, 361).unwrap(), 171);
        assert_eq!(mult_order(2, 15).unwrap(), 4);
        assert_eq!(mult_order(3, 107 * 107).unwrap(), 5671);
        assert_eq!(mult_order(5, 499 * 499).unwrap(), 124_251);
        assert_eq!(mult_order(17, 67 * 67).unwrap(), 2211);
        assert_eq!(mult_order(41, 163 * 163).unwrap(), 13_203);
        assert_eq!(mult_order(2, 6), Err(Error::NotCoprime { p: 2, n: 6 }));
    }

    #[test]
    fn order_matches_brute_force() {
        for n in 2..200u64 {
            for p in 1..n {
                if gcd(p, n) != 1 {
                    continue;
                }
                let mut x = p % n;
                let mut k = 1;
                while x != 1 % n {
                    x = x * p % n;
                    k += 1;
                }
                assert_eq!(mult_order(p, n).unwrap(), k, "ord_{n}({p})");
            }
        }
    }

    #[test]
    fn index2_cases() {
        assert_eq!(
            classify_index2(2, 49).unwrap(),
            Index2Case::PrimePower { p1: 7, m: 2 }
        );
        assert_eq!(
            classify_index2(2, 15).unwrap(),
            Index2Case::TwoPrimesSemiprimitiveMix {
                p1: 3,
                m: 1,
                p2: 5,
                n: 1
            }
        );
        assert_eq!(classify_index2(2, 11).unwrap(), Index2Case::NotIndex2);
        // 2^3 = 8 = -1 mod 9: semi-primitive, never index 2
        assert_eq!(classify_index2(2, 9).unwrap(), Index2Case::NotIndex2);
        assert_eq!(classify_index2(2, 10), Err(Error::EvenModulus(10)));
        assert_eq!(
            classify_index2(2, 1),
            Err(Error::ModulusTooSmall { n: 1, min: 3 })
        );
    }

    #[test]
    fn half_order_case() {
        // ord_3(2) = 2 = phi(3), ord_7(2) = 3 = phi(7)/2
        let case = classify_index2(2, 21).unwrap();
        assert_eq!(case.tag(), "TWO_PRIMES_HALF_ORDER");
        assert_eq!(
            case,
            Index2Case::TwoPrimesHalfOrder {
                p1: 3,
                m: 1,
                p2: 7,
                n: 1
            }
        );
    }

    #[test]
    fn class_numbers() {
        let cases = [
            (1, 1),
            (2, 1),
            (3, 1),
            (5, 2),
            (7, 1),
            (15, 2),
            (19, 1),
            (23, 3),
            (35, 2),
            (67, 1),
            (107, 3),
            (163, 1),
            (323, 4),
            (499, 3),
        ];
        for (d, h) in cases {
            assert_eq!(class_number(d).unwrap(), h, "h(-{d})");
        }
        assert_eq!(class_number(12), Err(Error::NotSquarefree(12)));
        assert_eq!(class_number(0), Err(Error::NotSquarefree(0)));
    }

    #[test]
    fn semiprimitive_examples() {
        let g = semiprimitive_gauss(2, 3, 2).unwrap();
        assert_eq!((g.t, g.s, g.sign), (1, 1, 1));
        assert_eq!(g.value(), BigInt::from(2));
        let g = semiprimitive_gauss(3, 4, 2).unwrap();
        assert_eq!(g.value(), BigInt::from(-3));
        let g = semiprimitive_gauss(2, 5, 8).unwrap();
        assert_eq!((g.t, g.s), (2, 2));
        assert_eq!(g.value(), BigInt::from(-16));
        assert_eq!(
            semiprimitive_gauss(2, 7, 6),
            Err(Error::NotSemiprimitive { p: 2, n: 7 })
        );
        assert_eq!(
            semiprimitive_gauss(2, 5, 6),
            Err(Error::DegreeNotMultiple { r: 6, two_t: 4 })
        );
    }

    #[test]
    fn langevin_examples() {
        let g = index2_gauss_prime_power(2, 7, 1).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b, g.c_abs), (3, 1, 1, -1, 1));
        let g = index2_gauss_prime_power(2, 7, 2).unwrap();
        assert_eq!((g.f, g.h0, g.b), (21, 10, -1));
        let g = index2_gauss_prime_power(5, 19, 2).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b), (171, 1, 85, 1));
        let g = index2_gauss_prime_power(2, 23, 1).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b, g.c_abs), (11, 3, 4, -3, 1));
        assert!(g.satisfies_norm_equation() && g.has_absolute_value_sqrt_q());
        assert!(matches!(
            index2_gauss_prime_power(2, 11, 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            index2_gauss_prime_power(2, 5, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn mbodj_examples() {
        let g = index2_gauss_two_primes(2, 3, 5, 1).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b, g.c_abs), (4, 2, 1, 1, 1));
        let g = index2_gauss_two_primes(3, 5, 7, 1).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b), (12, 2, 5, -1));
        let g = index2_gauss_two_primes(3, 17, 19, 1).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b), (144, 4, 70, -1));
        let g = index2_gauss_two_primes(2, 3, 13, 1).unwrap();
        assert_eq!((g.f, g.h, g.h0, g.b, g.c_abs), (12, 4, 4, 5, 1));
        assert!(g.satisfies_norm_equation() && g.has_absolute_value_sqrt_q());
        assert!(matches!(
            index2_gauss_two_primes(2, 7, 3, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn norm_equation() {
        assert_eq!(
            norm_equation_solutions(2, 1, 7).unwrap(),
            vec![(-1, 1), (1, 1)]
        );
        // b = 0 or c = 0 modulo p are excluded: 4*2^2 = 16 = 4^2 + 0, 1 + 15
        assert_eq!(
            norm_equation_solutions(2, 2, 15).unwrap(),
            vec![(-1, 1), (1, 1)]
        );
    }

    #[test]
    fn numeric_trivial_character() {
        let field = FieldTable::build(3, 3).unwrap();
        let g = gauss_sum_numeric(&field, 2, 0).unwrap();
        assert!((g.re + 1.0).abs() < 1e-9 && g.im.abs() < 1e-9);
        assert!(g.error_bound <= 27.0 * 2f64.powi(-50));
    }

    #[test]
    fn numeric_errors() {
        let field = FieldTable::build(2, 4).unwrap();
        assert!(matches!(
            gauss_sum_numeric(&field, 4, 1),
            Err(Error::ClassCountNotDivisor { .. })
        ));
        assert!(matches!(
            gauss_sum_numeric(&field, 5, 5),
            Err(Error::ClassIndexOutOfRange { .. })
        ));
        let big = FieldTable::build(2, 17).unwrap();
        assert!(matches!(
            gauss_sum_numeric(&big, 3, 1),
            Err(Error::NumericScaleCap { .. })
        ));
    }
}
