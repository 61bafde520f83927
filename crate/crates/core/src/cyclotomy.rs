//! Cyclotomic classes of `F_q^*`, their periods, and the character sums of
//! unions of classes.
//!
//! Class `C_i` is `gamma^i C_0` where `C_0` is the subgroup of `N`-th powers.
//! The period `eta_a` is the sum of `psi(x) = xi_p^{Tr(x)}` over `C_a`, kept
//! exact in `Z[xi_p]` by tallying trace values per class.

use std::collections::BTreeMap;

use crate::cyclotomic_integer::CyclotomicInteger;
use crate::error::{Error, Result};
use crate::finite_field::FieldTable;

/// Largest `N * p` tally table we are willing to allocate.
pub const MAX_TALLY_CELLS: usize = 1 << 25;

const NO_CLASS: u32 = u32::MAX;

/// A set of class indices modulo `N`, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSet {
    n: usize,
    indices: Vec<usize>,
}

impl ClassSet {
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::ClassIndexOutOfRange { index: bad, n });
        }
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        Ok(ClassSet { n, indices })
    }

    /// All `N` classes.
    pub fn full(n: usize) -> Self {
        ClassSet {
            n,
            indices: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&(i % self.n)).is_ok()
    }

    /// `{ i + t mod N : i in self }`.
    pub fn shifted(&self, t: usize) -> Self {
        ClassSet::new(self.n, self.indices.iter().map(|&i| (i + t) % self.n))
            .expect("shift of a valid set is valid")
    }
}

/// Per-class histogram of trace values: `counts[a * p + j]` is the number of
/// elements of `C_a` with trace `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTally {
    pub n: usize,
    pub p: usize,
    pub counts: Vec<u32>,
}

impl TraceTally {
    pub fn row(&self, a: usize) -> &[u32] {
        &self.counts[a * self.p..(a + 1) * self.p]
    }
}

/// The `N`-th cyclotomic class of every nonzero element of a field.
#[derive(Debug, Clone)]
pub struct ClassMap<'a> {
    field: &'a FieldTable,
    n: usize,
    class_of: Vec<u32>,
    class_size: usize,
}

impl<'a> ClassMap<'a> {
    pub fn new(field: &'a FieldTable, n: usize) -> Result<Self> {
        if n <= 1 {
            return Err(Error::ClassCountTooSmall(n));
        }
        let order = field.order();
        if order % n != 0 {
            return Err(Error::ClassCountNotDivisor { n, order });
        }
        let class_of = field
            .log_table()
            .iter()
            .enumerate()
            .map(|(x, &l)| if x == 0 { NO_CLASS } else { l % n as u32 })
            .collect();
        Ok(ClassMap {
            field,
            n,
            class_of,
            class_size: order / n,
        })
    }

    pub fn field(&self) -> &'a FieldTable {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class_size(&self) -> usize {
        self.class_size
    }

    /// Class index of a nonzero element, `None` for zero.
    pub fn class_of(&self, x: u32) -> Option<usize> {
        match self.class_of[x as usize] {
            NO_CLASS => None,
            c => Some(c as usize),
        }
    }

    /// Elements of `C_a`, as `gamma^{a + jN}`.
    pub fn class_members(&self, a: usize) -> impl Iterator<Item = u32> + '_ {
        (0..self.class_size).map(move |j| self.field.antilog((a + j * self.n) as u64))
    }

    /// Elements of the union of the classes in `set`.
    pub fn members(&self, set: &ClassSet) -> Result<Vec<u32>> {
        self.check_set(set)?;
        Ok(set
            .indices()
            .iter()
            .flat_map(|&a| self.class_members(a))
            .collect())
    }

    /// `s` with `-C_i = C_{i+s}`: `-1 = gamma^{(q-1)/2}` in odd characteristic.
    pub fn negation_shift(&self) -> usize {
        if self.field.p() == 2 {
            0
        } else {
            (self.field.order() / 2) % self.n
        }
    }

    /// Whether the union of classes is closed under negation.
    pub fn is_symmetric(&self, set: &ClassSet) -> bool {
        set.n() == self.n && set.shifted(self.negation_shift()) == *set
    }

    fn check_set(&self, set: &ClassSet) -> Result<()> {
        if set.n() != self.n {
            let index = set.indices().last().copied().unwrap_or(0);
            if index >= self.n {
                return Err(Error::ClassIndexOutOfRange { index, n: self.n });
            }
            return Err(Error::Precondition(format!(
                "class set is modulo {} but the class map has N = {}",
                set.n(),
                self.n
            )));
        }
        Ok(())
    }

    /// One pass over `F_q^*` accumulating `(class, trace)` counts.
    pub fn tally(&self) -> Result<TraceTally> {
        let p = self.field.p() as usize;
        let cells = self.n.saturating_mul(p);
        if cells > MAX_TALLY_CELLS {
            return Err(Error::TallyBudgetExceeded {
                cells,
                budget: MAX_TALLY_CELLS,
            });
        }
        let mut counts = vec![0u32; cells];
        let traces = self.field.trace_table();
        for (x, &c) in self.class_of.iter().enumerate().skip(1) {
            counts[c as usize * p + traces[x] as usize] += 1;
        }
        Ok(TraceTally {
            n: self.n,
            p,
            counts,
        })
    }

    /// All `N` periods `eta_0, ..., eta_{N-1}`.
    pub fn periods(&self) -> Result<Vec<CyclotomicInteger>> {
        let tally = self.tally()?;
        let p = self.field.p();
        Ok((0..self.n)
            .map(|a| {
                let row: Vec<i64> = tally.row(a).iter().map(|&c| c as i64).collect();
                CyclotomicInteger::from_counts(p, &row)
            })
            .collect())
    }

    pub fn period(&self, a: usize) -> Result<CyclotomicInteger> {
        if a >= self.n {
            return Err(Error::ClassIndexOutOfRange {
                index: a,
                n: self.n,
            });
        }
        let p = self.field.p();
        let traces = self.field.trace_table();
        let mut row = vec![0i64; p as usize];
        for x in self.class_members(a) {
            row[traces[x as usize] as usize] += 1;
        }
        Ok(CyclotomicInteger::from_counts(p, &row))
    }

    /// `psi(gamma^a D) = sum_{i in D} eta_{a+i}` for `a = 0..N`.
    pub fn connection_sums(&self, set: &ClassSet) -> Result<Vec<CyclotomicInteger>> {
        self.check_set(set)?;
        let periods = self.periods()?;
        Ok((0..self.n)
            .map(|a| {
                set.indices()
                    .iter()
                    .fold(CyclotomicInteger::zero(self.field.p()), |acc, &i| {
                        &acc + &periods[(a + i) % self.n]
                    })
            })
            .collect())
    }
}

/// Distinct values of a list with how often each occurs, in ascending order.
pub fn value_counts(values: &[CyclotomicInteger]) -> Vec<(CyclotomicInteger, usize)> {
    let mut counts: BTreeMap<&CyclotomicInteger, usize> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_default() += 1;
    }
    counts.into_iter().map(|(v, c)| (v.clone(), c)).collect()
}
