use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact element of `Z[xi_p]` for a prime `p`.
///
/// Stored on the basis `1, xi, ..., xi^{p-2}`; `xi^{p-1}` is folded away as
/// `-(1 + xi + ... + xi^{p-2})`, which makes the representation canonical and
/// lets derived equality and ordering act on values. For `p = 2` this is a
/// plain integer (`xi = -1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicInteger {
    p: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(p: u64) -> Self {
        CyclotomicInteger {
            p,
            coeffs: vec![0; (p - 1) as usize],
        }
    }

    pub fn from_integer(p: u64, n: i64) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = n;
        z
    }

    /// `sum_j counts[j] * xi^j` for `j` in `0..p`.
    pub fn from_counts(p: u64, counts: &[i64]) -> Self {
        assert_eq!(counts.len() as u64, p, "need one count per power of xi");
        let top = counts[(p - 1) as usize];
        CyclotomicInteger {
            p,
            coeffs: counts[..(p - 1) as usize]
                .iter()
                .map(|&c| c - top)
                .collect(),
        }
    }

    /// `xi^e`.
    pub fn root_power(p: u64, e: u64) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[(e % p) as usize] = 1;
        Self::from_counts(p, &counts)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_rational_integer(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_rational_integer().then(|| self.coeffs[0])
    }

    /// Length-`p` representative with a zero in the `xi^{p-1}` slot.
    fn to_counts(&self) -> Vec<i64> {
        let mut c = self.coeffs.clone();
        c.push(0);
        c
    }

    /// Complex conjugate, `xi^j -> xi^{-j}`.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let src = self.to_counts();
        let mut out = vec![0i64; p];
        for (j, &c) in src.iter().enumerate() {
            out[(p - j) % p] += c;
        }
        Self::from_counts(self.p, &out)
    }

    /// Value under the embedding `xi -> exp(2 pi i / p)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, &c)| {
                let theta = std::f64::consts::TAU * j as f64 / p;
                (re + c as f64 * theta.cos(), im + c as f64 * theta.sin())
            })
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing Z[xi_p] for different p");
    }
}

impl Add for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn add(self, rhs: Self) -> CyclotomicInteger {
        self.same_ring(rhs);
        CyclotomicInteger {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn sub(self, rhs: Self) -> CyclotomicInteger {
        self.same_ring(rhs);
        CyclotomicInteger {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn neg(self) -> CyclotomicInteger {
        CyclotomicInteger {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    /// Cyclic convolution modulo `x^p - 1`, then folding.
    fn mul(self, rhs: Self) -> CyclotomicInteger {
        self.same_ring(rhs);
        let p = self.p as usize;
        let mut out = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        CyclotomicInteger::from_counts(self.p, &out)
    }
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            match (j, mag) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (_, 1) => write!(f, "{sign}z^{j}")?,
                _ => write!(f, "{sign}{mag}*z^{j}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folding_is_canonical() {
        // 1 + xi + xi^2 = 0 in Z[xi_3]
        let z = CyclotomicInteger::from_counts(3, &[1, 1, 1]);
        assert_eq!(z, CyclotomicInteger::zero(3));
        let a = CyclotomicInteger::from_counts(5, &[3, 1, 1, 1, 1]);
        assert_eq!(a, CyclotomicInteger::from_integer(5, 2));
        assert!(a.is_rational_integer());
    }

    #[test]
    fn p2_is_plain_integers() {
        let z = CyclotomicInteger::from_counts(2, &[5, 8]);
        assert_eq!(z.as_integer(), Some(-3));
        assert_eq!(z.coeffs().len(), 1);
    }

    #[test]
    fn conjugate_times_self_of_root_is_one() {
        for p in [3u64, 5, 7] {
            for e in 0..p {
                let z = CyclotomicInteger::root_power(p, e);
                assert_eq!((&z * &z.conj()).as_integer(), Some(1));
            }
        }
    }

    #[test]
    fn quadratic_gauss_sum_squares_to_p_star() {
        // sum_j (j/7) xi^j squares to -7
        let mut counts = vec![0i64; 7];
        for j in 1..7u64 {
            counts[j as usize] = crate::arith::legendre(j as i64, 7) as i64;
        }
        let g = CyclotomicInteger::from_counts(7, &counts);
        assert!(!g.is_rational_integer());
        assert_eq!((&g * &g).as_integer(), Some(-7));
        let (re, im) = g.to_complex();
        assert!(re.abs() < 1e-12 && (im - 7f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn display() {
        assert_eq!(CyclotomicInteger::from_integer(3, -4).to_string(), "-4");
        let z = CyclotomicInteger::from_counts(5, &[0, 1, 0, 2, 0]);
        assert_eq!(z.to_string(), "z^1+2*z^3");
    }
}
