//! The refinement tables: sequences split by distinct-value count against
//! antichains split by size, coarsely and per (c, o) class.

use std::collections::BTreeMap;

use crate::biject::{sg_of_partition_a, SgTableC};
use crate::error::{Error, Result};
use crate::model::{
    enumerate_parking_functions, for_each_sequence_c, Permutation, SignedWindow,
};
use crate::poset::RootPoset;

/// `s[k]` counts sequences with statistic `k`; `m[k]` counts antichains of
/// size `k` over all windows (a multiset count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkMk {
    pub s: Vec<u64>,
    pub m: Vec<u64>,
}

impl SkMk {
    /// `S_k = M_{n-k}` for every `k`.
    pub fn duality_holds(&self) -> bool {
        let n = self.s.len() - 1;
        (0..=n).all(|k| self.s[k] == self.m[n - k])
    }
}

const SKMK_MAX_A: usize = 7;
const SKMK_MAX_C: usize = 4;

/// Type A: parking functions by number of distinct entries against
/// antichains by cardinality.
pub fn sk_mk_a(n: usize) -> Result<SkMk> {
    if n > SKMK_MAX_A {
        return Err(Error::ResourceLimit(format!("type A tables capped at n={SKMK_MAX_A} (got {n})")));
    }
    let mut s = vec![0u64; n + 1];
    for seq in enumerate_parking_functions(n)? {
        s[seq.d_stat()] += 1;
    }
    let mut m = vec![0u64; n + 1];
    for w in Permutation::all(n) {
        let poset = RootPoset::type_a(&w)?;
        for a in poset.antichains() {
            m[a.len()] += 1;
        }
    }
    Ok(SkMk { s, m })
}

/// Type C: all signed sequences by `d^C` against antichains by orbit count.
pub fn sk_mk_c(n: usize) -> Result<SkMk> {
    if n > SKMK_MAX_C {
        return Err(Error::ResourceLimit(format!("type C tables capped at n={SKMK_MAX_C} (got {n})")));
    }
    let mut s = vec![0u64; n + 1];
    for_each_sequence_c(n, |seq| s[seq.d_c_stat()] += 1);
    let mut m = vec![0u64; n + 1];
    for w in SignedWindow::all(n) {
        let poset = RootPoset::type_c(&w)?;
        for a in poset.antichains() {
            m[a.len()] += 1;
        }
    }
    Ok(SkMk { s, m })
}

/// Key of one (c, o) class: the ascending distinct values with their
/// multiplicities.
pub type CoKey = (Vec<i32>, Vec<usize>);

/// Per-class counts: sequence side and antichain side for every (c, o).
pub fn class_tables_a(n: usize) -> Result<BTreeMap<CoKey, [u64; 2]>> {
    if n > SKMK_MAX_A {
        return Err(Error::ResourceLimit(format!("type A tables capped at n={SKMK_MAX_A} (got {n})")));
    }
    let mut table: BTreeMap<CoKey, [u64; 2]> = BTreeMap::new();
    for seq in enumerate_parking_functions(n)? {
        let mut mult: BTreeMap<i32, usize> = BTreeMap::new();
        for &a in seq.entries() {
            *mult.entry(a).or_default() += 1;
        }
        let key = (mult.keys().copied().collect(), mult.values().copied().collect());
        table.entry(key).or_default()[0] += 1;
    }
    for w in Permutation::all(n) {
        let poset = RootPoset::type_a(&w)?;
        for a in poset.antichains() {
            let pi = poset.antichain_to_partition_a(&a)?;
            let sg = sg_of_partition_a(&pi)?;
            let key = (sg.s().to_vec(), sg.g().to_vec());
            table.entry(key).or_default()[1] += 1;
        }
    }
    Ok(table)
}

pub fn class_tables_c(n: usize) -> Result<BTreeMap<CoKey, [u64; 2]>> {
    if n > SKMK_MAX_C {
        return Err(Error::ResourceLimit(format!("type C tables capped at n={SKMK_MAX_C} (got {n})")));
    }
    let table_c = SgTableC::new(n)?;
    let mut table: BTreeMap<CoKey, [u64; 2]> = BTreeMap::new();
    for_each_sequence_c(n, |seq| {
        let mut mult: BTreeMap<i32, usize> = BTreeMap::new();
        for &a in seq.entries() {
            if a != 0 {
                *mult.entry(a.abs()).or_default() += 1;
            }
        }
        let key = (mult.keys().copied().collect(), mult.values().copied().collect());
        table.entry(key).or_default()[0] += 1;
    });
    for w in SignedWindow::all(n) {
        let poset = RootPoset::type_c(&w)?;
        for a in poset.antichains() {
            let pi = poset.antichain_to_partition_c(&a)?;
            let sg = table_c.sg_of_partition(&pi)?;
            let key = (sg.s().to_vec(), sg.g().to_vec());
            table.entry(key).or_default()[1] += 1;
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::counts::{class_size_co_a, class_size_co_c};

    #[test]
    fn tables_at_a2() {
        let t = sk_mk_a(2).unwrap();
        assert_eq!(t.s, vec![0, 1, 2]);
        assert_eq!(t.m, vec![2, 1, 0]);
        assert!(t.duality_holds());
    }

    #[test]
    fn tables_at_c1() {
        let t = sk_mk_c(1).unwrap();
        assert_eq!(t.s, vec![1, 2]);
        assert_eq!(t.m, vec![2, 1]);
        assert!(t.duality_holds());
    }

    #[test]
    fn sums_match_totals() {
        let t = sk_mk_a(3).unwrap();
        assert_eq!(t.s.iter().sum::<u64>(), 16);
        let t = sk_mk_c(2).unwrap();
        assert_eq!(t.s.iter().sum::<u64>(), 25);
    }

    #[test]
    fn refined_classes_balance_and_match_formulas() {
        for n in 1..=4 {
            for (key, counts) in class_tables_a(n).unwrap() {
                assert_eq!(counts[0], counts[1], "A n={n} class {key:?}");
                assert_eq!(counts[0], class_size_co_a(&key.1, n).unwrap());
            }
        }
        for n in 1..=3 {
            for (key, counts) in class_tables_c(n).unwrap() {
                assert_eq!(counts[0], counts[1], "C n={n} class {key:?}");
                assert_eq!(counts[0], class_size_co_c(&key.1, n).unwrap());
            }
        }
    }

    #[test]
    fn co_class_examples() {
        let t = class_tables_a(2).unwrap();
        assert_eq!(t[&(vec![1], vec![2])], [1, 1]);
        assert_eq!(t[&(vec![1, 2], vec![1, 1])], [2, 2]);
        let t = class_tables_c(1).unwrap();
        assert_eq!(t[&(vec![], vec![])], [1, 1]);
    }
}
