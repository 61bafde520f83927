//! Strongly regular Cayley graphs on finite fields whose connection sets are
//! unions of cyclotomic classes: exact arithmetic in `F_{p^f}` and
//! `Z[xi_p]`, Gauss sums in the semi-primitive and index-2 cases, spectral
//! and combinatorial strong-regularity checks, and bounded family searches.

pub mod arith;
pub mod cli;
pub mod cyclotomic_integer;
pub mod cyclotomy;
pub mod error;
pub mod finite_field;
pub mod gauss_theory;
pub mod search;
pub mod srg;

pub use cyclotomic_integer::CyclotomicInteger;
pub use cyclotomy::{ClassMap, ClassSet};
pub use error::{Error, Result};
pub use finite_field::FieldTable;
pub use srg::{PredictedSpectrum, SrgCertificate};
