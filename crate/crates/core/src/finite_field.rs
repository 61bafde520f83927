//! Table-driven finite fields `F_{p^f}`.
//!
//! An element is encoded as its coefficient vector in `F_p[x]/(g)` packed as a
//! base-`p` integer: the coefficient of `x^i` is digit `i`. Multiplication goes
//! through discrete-log/antilog tables relative to a fixed primitive element,
//! addition is digitwise.

use crate::arith::{factorize, is_prime, pow_mod};
use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: usize = 1 << 22;

const NO_LOG: u32 = u32::MAX;

/// Polynomials over `F_p` as little-endian coefficient vectors.
mod poly {
    use crate::arith::pow_mod;

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// `a mod g` where `g` is monic of degree `deg`; output has length `deg`.
    pub fn reduce(mut a: Vec<u64>, g: &[u64], p: u64) -> Vec<u64> {
        let deg = g.len() - 1;
        while a.len() > deg {
            let lead = a.pop().unwrap();
            if lead != 0 {
                let shift = a.len() - deg;
                for (i, &gi) in g[..deg].iter().enumerate() {
                    let t = &mut a[shift + i];
                    *t = (*t + (p - gi) * lead % p) % p;
                }
            }
        }
        a.resize(deg, 0);
        a
    }

    pub fn mul_mod(a: &[u64], b: &[u64], g: &[u64], p: u64) -> Vec<u64> {
        let mut prod = vec![0u64; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        reduce(prod, g, p)
    }

    pub fn pow_mod_poly(base: &[u64], mut exp: u64, g: &[u64], p: u64) -> Vec<u64> {
        let deg = g.len() - 1;
        let mut result = reduce(vec![1], g, p);
        let mut b = reduce(base.to_vec(), g, p);
        while exp > 0 {
            if exp & 1 == 1 {
                result = mul_mod(&result, &b, g, p);
            }
            exp >>= 1;
            if exp > 0 {
                b = mul_mod(&b, &b, g, p);
            }
        }
        debug_assert_eq!(result.len(), deg);
        result
    }

    /// Remainder of `a` by an arbitrary nonzero `b`.
    fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
        trim(&mut a);
        let db = b.len() - 1;
        let inv = pow_mod(b[db], p - 2, p);
        while a.len() > db {
            let lead = a.pop().unwrap();
            if lead != 0 {
                let factor = lead * inv % p;
                let shift = a.len() - db;
                for (i, &bi) in b[..db].iter().enumerate() {
                    let t = &mut a[shift + i];
                    *t = (*t + (p - bi) * factor % p) % p;
                }
            }
            trim(&mut a);
        }
        a
    }

    pub fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

/// A finite field `F_{p^f}` stored as lookup tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    p: u64,
    f: u32,
    q: usize,
    modulus: Vec<u64>,
    gamma: u32,
    /// `antilog[i]` encodes `gamma^i`, `0 <= i < q-1`.
    antilog: Vec<u32>,
    /// Inverse of `antilog`; `log[0]` is unused.
    log: Vec<u32>,
    trace: Vec<u32>,
}

impl FieldTable {
    /// Builds `F_{p^f}` on the lexicographically smallest monic irreducible
    /// polynomial of degree `f` (coefficients compared from the constant term
    /// up) with `gamma` the primitive element of smallest encoding.
    pub fn build(p: u64, f: u32) -> Result<Self> {
        let q = check_order(p, f)?;
        let f_us = f as usize;
        for idx in 0..q {
            // digit f-1-i of idx is c_i, so iteration order compares c_0 first
            let mut rest = idx as u64;
            let mut modulus = vec![0u64; f_us + 1];
            for i in (0..f_us).rev() {
                modulus[i] = rest % p;
                rest /= p;
            }
            modulus[f_us] = 1;
            if is_irreducible(&modulus, p) {
                return Self::from_irreducible(p, modulus, q);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Builds the field on a caller-chosen monic irreducible modulus, given
    /// as `f+1` coefficients from the constant term up.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let f = u32::try_from(modulus.len() - 1)
            .map_err(|_| Error::InvalidModulus("degree too large".into()))?;
        let q = check_order(p, f)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(
                "coefficient not reduced mod p".into(),
            ));
        }
        if modulus[modulus.len() - 1] != 1 {
            return Err(Error::InvalidModulus("not monic".into()));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus("reducible over F_p".into()));
        }
        Self::from_irreducible(p, modulus.to_vec(), q)
    }

    fn from_irreducible(p: u64, modulus: Vec<u64>, q: usize) -> Result<Self> {
        let f = modulus.len() - 1;
        let order = (q - 1) as u64;
        let prime_divisors: Vec<u64> = factorize(order).into_iter().map(|(l, _)| l).collect();
        let one = poly::reduce(vec![1], &modulus, p);

        let gamma_digits = (1..q)
            .map(|x| digits_of(x as u64, p, f))
            .find(|cand| {
                prime_divisors
                    .iter()
                    .all(|&l| poly::pow_mod_poly(cand, order / l, &modulus, p) != one)
            })
            .expect("multiplicative group of a field is cyclic");
        let gamma = encode(&gamma_digits, p) as u32;

        let mut antilog = vec![0u32; q - 1];
        let mut log = vec![NO_LOG; q];
        let mut cur = one.clone();
        let mut scratch = vec![0u64; 2 * f];
        for (i, slot) in antilog.iter_mut().enumerate() {
            let enc = encode(&cur, p) as u32;
            *slot = enc;
            debug_assert_eq!(log[enc as usize], NO_LOG);
            log[enc as usize] = i as u32;
            mul_in_place(&mut cur, &gamma_digits, &modulus, p, &mut scratch);
        }
        debug_assert_eq!(cur, one);

        let mut table = FieldTable {
            p,
            f: f as u32,
            q,
            modulus,
            gamma,
            antilog,
            log,
            trace: Vec::new(),
        };
        table.trace = table.build_trace();
        Ok(table)
    }

    /// Trace of each basis monomial `x^i` by summing its Frobenius orbit in
    /// the log domain, extended linearly to every encoding.
    fn build_trace(&self) -> Vec<u32> {
        let f = self.f as usize;
        let order = (self.q - 1) as u64;
        let mut basis_trace = vec![0u64; f];
        let mut monomial = 1u64;
        for bt in basis_trace.iter_mut() {
            let l = self.log[monomial as usize] as u64;
            let mut acc = 0u32;
            let mut e = l;
            for _ in 0..f {
                acc = self.add(acc, self.antilog[e as usize]);
                e = (e as u128 * self.p as u128 % order as u128) as u64;
            }
            debug_assert!((acc as u64) < self.p, "trace must land in the prime field");
            *bt = acc as u64;
            monomial *= self.p;
        }
        let mut trace = vec![0u32; self.q];
        for (x, t) in trace.iter_mut().enumerate() {
            let mut rest = x as u64;
            let mut acc = 0u64;
            for &bt in &basis_trace {
                acc += (rest % self.p) * bt;
                rest /= self.p;
            }
            *t = (acc % self.p) as u32;
        }
        trace
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// Field order `q = p^f`.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn order(&self) -> usize {
        self.q - 1
    }

    /// Modulus coefficients from the constant term up; length `f + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The fixed primitive element.
    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn antilog(&self, i: u64) -> u32 {
        self.antilog[(i % self.order() as u64) as usize]
    }

    pub fn antilog_table(&self) -> &[u32] {
        &self.antilog
    }

    /// Discrete log table; entry 0 holds `u32::MAX`.
    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    pub fn trace_table(&self) -> &[u32] {
        &self.trace
    }

    fn check(&self, x: u32) -> Result<()> {
        if (x as usize) < self.q {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                x: x as u64,
                q: self.q,
            })
        }
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, x: u32) -> Result<u32> {
        self.check(x)?;
        Ok(self.trace[x as usize])
    }

    /// Discrete logarithm base `gamma`, in `0..q-1`.
    pub fn dlog(&self, x: u32) -> Result<u32> {
        self.check(x)?;
        if x == 0 {
            return Err(Error::ZeroLog);
        }
        Ok(self.log[x as usize])
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        self.digitwise(x, y, |a, b| (a + b) % self.p)
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        self.digitwise(x, y, |a, b| (a + self.p - b) % self.p)
    }

    pub fn neg(&self, x: u32) -> u32 {
        self.sub(0, x)
    }

    fn digitwise(&self, x: u32, y: u32, op: impl Fn(u64, u64) -> u64) -> u32 {
        let (mut x, mut y) = (x as u64, y as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.f {
            out += op(x % self.p, y % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out as u32
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let s = self.log[x as usize] as u64 + self.log[y as usize] as u64;
        self.antilog[(s % self.order() as u64) as usize]
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let order = self.order() as u64;
        let l = self.log[x as usize] as u64;
        let s = (l as u128 * (e % order) as u128 % order as u128) as u64;
        self.antilog[s as usize]
    }

    /// Coefficient vector of an encoding, constant term first.
    pub fn coefficients(&self, x: u32) -> Vec<u64> {
        digits_of(x as u64, self.p, self.f as usize)
    }
}

fn check_order(p: u64, f: u32) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f == 0 {
        return Err(Error::ZeroDegree);
    }
    let too_large = Error::FieldTooLarge {
        p,
        f,
        cap: MAX_FIELD_ORDER,
    };
    let q = p.checked_pow(f).ok_or(too_large.clone())?;
    if q > MAX_FIELD_ORDER as u64 {
        return Err(too_large);
    }
    Ok(q as usize)
}

fn digits_of(mut x: u64, p: u64, f: usize) -> Vec<u64> {
    let mut d = vec![0u64; f];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn encode(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * p + d)
}

/// `cur <- cur * m mod g`, with `cur` of length `deg g`.
fn mul_in_place(cur: &mut [u64], m: &[u64], g: &[u64], p: u64, scratch: &mut [u64]) {
    let f = cur.len();
    let m_len = m.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
    let prod = &mut scratch[..f + m_len.max(1) - 1];
    prod.iter_mut().for_each(|c| *c = 0);
    for (j, &mj) in m[..m_len].iter().enumerate() {
        if mj == 0 {
            continue;
        }
        for (i, &ci) in cur.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ci * mj) % p;
        }
    }
    for top in (f..prod.len()).rev() {
        let lead = prod[top];
        if lead != 0 {
            for (i, &gi) in g[..f].iter().enumerate() {
                let t = &mut prod[top - f + i];
                *t = (*t + (p - gi) * lead % p) % p;
            }
        }
    }
    cur.copy_from_slice(&prod[..f]);
}

/// Rabin's test: `g | x^{p^f} - x` and `gcd(x^{p^{f/l}} - x, g) = 1` for
/// every prime `l | f`.
fn is_irreducible(g: &[u64], p: u64) -> bool {
    let f = g.len() - 1;
    if f == 1 {
        return true;
    }
    if g[0] == 0 {
        return false;
    }
    let x = poly::reduce(vec![0, 1], g, p);
    // frob[k] = x^{p^k} mod g
    let mut frob = Vec::with_capacity(f + 1);
    frob.push(x.clone());
    for k in 1..=f {
        let next = poly::pow_mod_poly(&frob[k - 1], p, g, p);
        frob.push(next);
    }
    if frob[f] != x {
        return false;
    }
    factorize(f as u64).into_iter().all(|(l, _)| {
        let mut diff = frob[f / l as usize].clone();
        diff[1] = (diff[1] + p - 1) % p;
        let common = poly::gcd(g.to_vec(), diff, p);
        common.len() == 1
    })
}

/// Checks that `gamma` generates the whole multiplicative group.
pub fn is_primitive(field: &FieldTable, x: u32) -> bool {
    if x == 0 {
        return false;
    }
    let order = field.order() as u64;
    field.pow(x, order) == 1
        && factorize(order)
            .into_iter()
            .all(|(l, _)| field.pow(x, order / l) != 1)
}

/// Smallest primitive root modulo a prime, for cross-checks on prime fields.
pub fn smallest_primitive_root(p: u64) -> Option<u64> {
    if !is_prime(p) {
        return None;
    }
    if p == 2 {
        return Some(1);
    }
    let divisors: Vec<u64> = factorize(p - 1).into_iter().map(|(l, _)| l).collect();
    (2..p).find(|&g| divisors.iter().all(|&l| pow_mod(g, (p - 1) / l, p) != 1))
}
