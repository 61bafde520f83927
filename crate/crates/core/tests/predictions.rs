//! Closed-form eigenvalue candidates against exact connection sums.

use std::collections::BTreeSet;

use cyclosrg::srg::{predicted_spectrum_prime_power, predicted_spectrum_two_primes, Branch};
use cyclosrg::{ClassMap, ClassSet, FieldTable, PredictedSpectrum};
use num_bigint::BigInt;
use num_rational::BigRational;

fn computed_values(p: u64, f: u32, n: usize, d: Vec<usize>) -> BTreeSet<BigRational> {
    let field = FieldTable::build(p, f).unwrap();
    let cm = ClassMap::new(&field, n).unwrap();
    let sums = cm.connection_sums(&ClassSet::new(n, d).unwrap()).unwrap();
    sums.iter()
        .map(|v| {
            let n = v
                .as_integer()
                .expect("index-2 connection sums are rational");
            BigRational::from_integer(BigInt::from(n))
        })
        .collect()
}

fn predicted(spec: &PredictedSpectrum) -> BTreeSet<BigRational> {
    spec.distinct_values().into_iter().collect()
}

#[test]
fn prime_power_family() {
    // (p, p1, m): D = C_0 u ... u C_{p1^{m-1} - 1}
    for &(p, p1, m) in &[
        (2u64, 7u64, 1u32),
        (2, 23, 1),
        (3, 11, 1),
        (5, 11, 1),
        (3, 23, 1),
        (5, 19, 1),
        (2, 7, 2),
    ] {
        let spec = predicted_spectrum_prime_power(p, p1, m).unwrap();
        let f = spec.gauss.f as u32;
        let d: Vec<usize> = (0..p1.pow(m - 1) as usize).collect();
        assert_eq!(
            computed_values(p, f, spec.n as usize, d),
            predicted(&spec),
            "(p, p1, m) = ({p}, {p1}, {m})"
        );
    }
}

#[test]
fn two_prime_family() {
    // D = union of C_{i p2} for i < p1^{m-1}
    for &(p, p1, p2, m) in &[
        (2u64, 3u64, 5u64, 1u32),
        (2, 5, 3, 1),
        (2, 3, 13, 1),
        (3, 5, 7, 1),
        (3, 7, 5, 1),
        (2, 3, 5, 2),
    ] {
        let spec = predicted_spectrum_two_primes(p, p1, p2, m).unwrap();
        let f = spec.gauss.f as u32;
        let d: Vec<usize> = (0..p1.pow(m - 1) as usize)
            .map(|i| i * p2 as usize)
            .collect();
        assert_eq!(
            computed_values(p, f, spec.n as usize, d),
            predicted(&spec),
            "(p, p1, p2, m) = ({p}, {p1}, {p2}, {m})"
        );
    }
}

#[test]
fn branch_counts_are_bounded() {
    let spec = predicted_spectrum_prime_power(2, 23, 1).unwrap();
    assert_eq!(spec.values.len(), 3);
    assert_eq!(spec.distinct_values().len(), 3);
    let spec = predicted_spectrum_two_primes(2, 3, 13, 1).unwrap();
    assert_eq!(spec.values.len(), 5);
    assert!(spec.distinct_values().len() <= 5);
    assert!(spec.value(Branch::C1).is_some());
}
