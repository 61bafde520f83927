use thiserror::Error;

/// Errors raised by the library. Every variant is a usage or domain error;
/// "the graph is not strongly regular" is a checked-false outcome, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{f} exceeds the table cap of {cap} elements")]
    FieldTooLarge { p: u64, f: u32, cap: usize },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element encoding {x} is out of range for a field of order {q}")]
    InvalidElement { x: u64, q: usize },
    #[error("zero has no discrete logarithm")]
    ZeroLog,

    #[error("class count {n} does not divide q-1 = {order}")]
    ClassCountNotDivisor { n: usize, order: usize },
    #[error("class count must be greater than 1, got {0}")]
    ClassCountTooSmall(usize),
    #[error("class index {index} out of range for {n} classes")]
    ClassIndexOutOfRange { index: usize, n: usize },
    #[error("connection set is empty")]
    EmptyConnectionSet,
    #[error("connection set is not closed under negation (-D != D)")]
    DirectedConnectionSet,
    #[error("tally table of {cells} cells exceeds the budget of {budget}")]
    TallyBudgetExceeded { cells: usize, budget: usize },
    #[error("{pairs} ordered pairs exceed the oracle budget of {budget}")]
    PairBudgetExceeded { pairs: u128, budget: u128 },

    #[error("{p} and {n} are not coprime")]
    NotCoprime { p: u64, n: u64 },
    #[error("modulus must be at least {min}, got {n}")]
    ModulusTooSmall { n: u64, min: u64 },
    #[error("{0} must be odd")]
    EvenModulus(u64),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("no t with {p}^t = -1 (mod {n})")]
    NotSemiprimitive { p: u64, n: u64 },
    #[error("extension degree {r} is not a multiple of 2t = {two_t}")]
    DegreeNotMultiple { r: u64, two_t: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("f - h = {f} - {h} is odd, so h0 is not an integer")]
    OddExponentGap { f: u64, h: u64 },
    #[error("class number h = {0} is odd; the sign congruence for b needs h even")]
    OddClassNumber(u64),
    #[error("no solution of b^2 + {delta} c^2 = 4 {p}^{h} meets the congruence on b")]
    NoDiophantineSolution { delta: u64, p: u64, h: u64 },
    #[error("congruence on b does not single out one solution: {0:?}")]
    AmbiguousSolution(Vec<i64>),
    #[error("{0}")]
    Overflow(&'static str),
    #[error("field of order {q} exceeds the numeric Gauss sum cap of {cap}")]
    NumericScaleCap { q: usize, cap: usize },
    #[error("valency {k} is inconsistent with {v} vertices")]
    InconsistentValency { k: i64, v: i64 },
    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
