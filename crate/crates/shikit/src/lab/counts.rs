//! Closed-form counts and the brute-force censuses they are checked against.

use crate::error::{Error, Result};
use crate::model::{
    enumerate_nonnesting_a, enumerate_nonnesting_c, factorial, PartitionA, PartitionC,
    PartitionType, Permutation, SignedWindow,
};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / (p_1! ... p_k!)`; the parts need not sum to `n` (the remainder acts
/// as one more part).
pub fn multinomial(n: u64, parts: &[u64]) -> u64 {
    let used: u64 = parts.iter().sum();
    assert!(used <= n, "parts exceed n");
    let mut acc = factorial(n) / factorial(n - used);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Number of nonnesting partitions of `[n]` of type `λ`:
/// `n! / (m_λ (n - d + 1)!)`.
pub fn kreweras_count(lam: &PartitionType, n: usize) -> Result<u64> {
    if lam.total() != n {
        return Err(Error::InvalidPartition(format!("{lam} is not a partition of {n}")));
    }
    let d = lam.d() as u64;
    Ok(factorial(n as u64) / (lam.m_lambda() * factorial(n as u64 - d + 1)))
}

/// Number of nonnesting type C partitions of `[±n]` of type `λ`:
/// `n! / (m_λ (n - d)!)`.
pub fn type_count_c(lam: &PartitionType, n: usize) -> Result<u64> {
    if lam.total() > n {
        return Err(Error::InvalidPartition(format!("{lam} exceeds n={n}")));
    }
    let d = lam.d() as u64;
    Ok(factorial(n as u64) / (lam.m_lambda() * factorial(n as u64 - d)))
}

/// Number of windows whose poset admits a fixed type-`λ` partition of `[n]`
/// as an antichain: the multinomial coefficient over the parts.
pub fn class_size_a(lam: &PartitionType, n: usize) -> Result<u64> {
    if lam.total() != n {
        return Err(Error::InvalidPartition(format!("{lam} is not a partition of {n}")));
    }
    let parts: Vec<u64> = lam.parts().iter().map(|&p| p as u64).collect();
    Ok(multinomial(n as u64, &parts))
}

/// Type C counterpart: `multinomial(n; λ, n - |λ|) · ∏ 2^{λ_i}`.
pub fn class_size_c(lam: &PartitionType, n: usize) -> Result<u64> {
    if lam.total() > n {
        return Err(Error::InvalidPartition(format!("{lam} exceeds n={n}")));
    }
    let parts: Vec<u64> = lam.parts().iter().map(|&p| p as u64).collect();
    Ok(multinomial(n as u64, &parts) * (1u64 << lam.total()))
}

/// Size of one (c, o) class in type A: `multinomial(n; o_1, ..., o_k)`.
pub fn class_size_co_a(o: &[usize], n: usize) -> Result<u64> {
    let total: usize = o.iter().sum();
    if total != n {
        return Err(Error::InvalidSg(format!("o = {o:?} does not sum to {n}")));
    }
    let parts: Vec<u64> = o.iter().map(|&p| p as u64).collect();
    Ok(multinomial(n as u64, &parts))
}

/// Size of one (c, o) class in type C:
/// `multinomial(n; o, n - Σo) · 2^{Σo}`.
pub fn class_size_co_c(o: &[usize], n: usize) -> Result<u64> {
    let total: usize = o.iter().sum();
    if total > n {
        return Err(Error::InvalidSg(format!("o = {o:?} exceeds {n}")));
    }
    let parts: Vec<u64> = o.iter().map(|&p| p as u64).collect();
    Ok(multinomial(n as u64, &parts) * (1u64 << total))
}

/// Count type-`λ` nonnesting partitions of `[n]` by enumeration.
pub fn census_type_a(lam: &PartitionType, n: usize) -> Result<u64> {
    Ok(enumerate_nonnesting_a(n)?
        .iter()
        .filter(|p| &p.partition_type() == lam)
        .count() as u64)
}

/// Count type-`λ` nonnesting type C partitions of `[±n]` by enumeration.
pub fn census_type_c(lam: &PartitionType, n: usize) -> Result<u64> {
    let mut count = 0u64;
    for p in enumerate_nonnesting_c(n)? {
        if &p.partition_type()? == lam {
            count += 1;
        }
    }
    Ok(count)
}

/// Count the permutations `w` whose poset admits `pi` as an antichain: the
/// window labels must ascend along every arc.
pub fn census_class_a(pi: &PartitionA) -> u64 {
    let arcs = pi.arcs();
    Permutation::all(pi.n())
        .into_iter()
        .filter(|w| arcs.iter().all(|&(i, j)| w.value(i) < w.value(j)))
        .count() as u64
}

/// Count the signed windows admitting `pi`: every arc `(i, j)` must satisfy
/// `0 < w(i) ≤ |w(j)|` directly or after mirroring.
pub fn census_class_c(pi: &PartitionC) -> u64 {
    let arcs = pi.arcs();
    let admits = |w: &SignedWindow, i: i32, j: i32| {
        let (wi, wj) = (w.value(i), w.value(j));
        (wi > 0 && wi <= wj.abs()) || (wj < 0 && -wj <= wi.abs())
    };
    SignedWindow::all(pi.n())
        .into_iter()
        .filter(|w| arcs.iter().all(|&(i, j)| admits(w, i, j)))
        .count() as u64
}

/// One term of the type A summation identity:
/// `binom(n+1, d) · d!/m_λ · multinomial(n; λ)`.
pub fn identity_term_a(lam: &PartitionType, n: usize) -> Result<u64> {
    if lam.total() != n {
        return Err(Error::InvalidPartition(format!("{lam} is not a partition of {n}")));
    }
    let d = lam.d() as u64;
    let orderings = factorial(d) / lam.m_lambda();
    Ok(binomial(n as u64 + 1, d) * orderings * class_size_a(lam, n)?)
}

/// One term of the type C summation identity:
/// `(type count) · (class size)`.
pub fn identity_term_c(lam: &PartitionType, n: usize) -> Result<u64> {
    Ok(type_count_c(lam, n)? * class_size_c(lam, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[usize]) -> PartitionType {
        PartitionType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(kreweras_count(&lam(&[2, 1]), 3).unwrap(), 3);
        assert_eq!(kreweras_count(&lam(&[4]), 4).unwrap(), 1);
        assert_eq!(type_count_c(&lam(&[1]), 2).unwrap(), 2);
        assert_eq!(class_size_a(&lam(&[2, 1]), 3).unwrap(), 3);
        assert_eq!(class_size_c(&lam(&[1]), 1).unwrap(), 2);
        assert_eq!(class_size_c(&PartitionType::empty(), 2).unwrap(), 1);
        assert_eq!(class_size_co_a(&[2], 2).unwrap(), 1);
        assert_eq!(class_size_co_a(&[1, 1], 2).unwrap(), 2);
        assert_eq!(class_size_co_c(&[], 1).unwrap(), 1);
    }

    #[test]
    fn census_backs_closed_forms_small() {
        for n in 1..=5 {
            for lam in PartitionType::all_of(n) {
                assert_eq!(census_type_a(&lam, n).unwrap(), kreweras_count(&lam, n).unwrap());
            }
        }
        for n in 1..=3 {
            for lam in PartitionType::all_up_to(n) {
                assert_eq!(census_type_c(&lam, n).unwrap(), type_count_c(&lam, n).unwrap());
            }
        }
    }

    #[test]
    fn class_size_census_spot_checks() {
        let pi = PartitionA::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(census_class_a(&pi), 3);
        let pi = PartitionC::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(census_class_c(&pi), 2);
        let pi = PartitionC::new(2, vec![vec![-2, -1, 1, 2]]).unwrap();
        assert_eq!(census_class_c(&pi), 1);
    }

    #[test]
    fn identity_terms_at_small_n() {
        let terms: Vec<u64> =
            PartitionType::all_of(3).iter().map(|l| identity_term_a(l, 3).unwrap()).collect();
        let mut sorted = terms.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![4, 24, 36]);
        assert_eq!(terms.iter().sum::<u64>(), 64);

        let terms: Vec<u64> =
            PartitionType::all_up_to(2).iter().map(|l| identity_term_c(l, 2).unwrap()).collect();
        assert_eq!(terms.iter().sum::<u64>(), 25);
        let mut sorted = terms;
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 8, 8, 8]);
    }
}
