//! Bar multisets and their shifted / marked permutations.

use std::collections::BTreeSet;

use crate::biject::sg::{next_permutation, sg_of_partition_a, SgPair, SgTableC};
use crate::error::{Error, Result};
use crate::model::{PartitionA, PartitionC, SequenceA, SequenceC};

/// The multiset with `g(s)` copies of each `s ∈ S`, read off a nonnesting
/// partition of `[n]`; always `n` entries.
pub fn bar_multiset_a(pi: &PartitionA) -> Result<Vec<i32>> {
    let sg = sg_of_partition_a(pi)?;
    Ok(bar_from_sg(&sg, sg.total(), false))
}

/// Type C adds `n - |λ|` zeros in front of the `g(s)` copies of each `s ∈ S`.
pub fn bar_multiset_c(pi: &PartitionC, table: &SgTableC) -> Result<Vec<i32>> {
    let sg = table.sg_of_partition(pi)?;
    Ok(bar_from_sg(&sg, table.n(), true))
}

pub(crate) fn bar_from_sg(sg: &SgPair, n: usize, with_zeros: bool) -> Vec<i32> {
    let mut bar = Vec::with_capacity(n);
    if with_zeros {
        bar.extend(std::iter::repeat_n(0, n - sg.total()));
    }
    for (&s, &g) in sg.s().iter().zip(sg.g()) {
        bar.extend(std::iter::repeat_n(s, g));
    }
    bar
}

/// All permutations of the multiset with every entry increased by a common
/// `k ∈ {0, ..., n}` and taken modulo `n + 1`, residues written in
/// `{1, ..., n+1}`. Output is duplicate free and sorted.
pub fn n_shifted_permutations(bar: &[i32], n: usize) -> Result<Vec<SequenceA>> {
    if bar.len() != n {
        return Err(Error::InvalidSequence(format!("multiset has {} entries, want {n}", bar.len())));
    }
    if bar.iter().any(|&v| v < 1 || v > n as i32 + 1) {
        return Err(Error::InvalidSequence("multiset entry outside [1, n+1]".into()));
    }
    let mut out = BTreeSet::new();
    let mut perm = bar.to_vec();
    perm.sort_unstable();
    loop {
        for k in 0..=n as i32 {
            let shifted: Vec<i32> =
                perm.iter().map(|&v| (v - 1 + k).rem_euclid(n as i32 + 1) + 1).collect();
            out.insert(SequenceA::new(shifted)?);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out.into_iter().collect())
}

/// All permutations of the multiset with an independent ± sign on every
/// nonzero entry. Output is duplicate free and sorted.
pub fn marked_permutations(bar: &[i32]) -> Result<Vec<SequenceC>> {
    if bar.iter().any(|&v| v < 0) {
        return Err(Error::InvalidSequence("marked permutations take nonnegative entries".into()));
    }
    let mut out = BTreeSet::new();
    let mut perm = bar.to_vec();
    perm.sort_unstable();
    loop {
        let nonzero: Vec<usize> =
            perm.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, _)| k).collect();
        for mask in 0..(1u32 << nonzero.len()) {
            let mut signed = perm.clone();
            for (bit, &pos) in nonzero.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    signed[pos] = -signed[pos];
                }
            }
            out.insert(SequenceC::new(signed)?);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_examples() {
        let p = PartitionA::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(bar_multiset_a(&p).unwrap(), vec![1, 1, 3]);

        let table = SgTableC::new(1).unwrap();
        let zero = PartitionC::new(1, vec![vec![-1, 1]]).unwrap();
        assert_eq!(bar_multiset_c(&zero, &table).unwrap(), vec![0]);

        let table = SgTableC::new(2).unwrap();
        for pi in crate::model::enumerate_nonnesting_c(2).unwrap() {
            let sg = table.sg_of_partition(&pi).unwrap();
            if sg.s() == [2] && sg.g() == [1] {
                assert_eq!(bar_multiset_c(&pi, &table).unwrap(), vec![0, 2]);
            }
        }
    }

    #[test]
    fn two_shifted_permutations_of_12() {
        let got = n_shifted_permutations(&[1, 2], 2).unwrap();
        let want: BTreeSet<Vec<i32>> =
            [[1, 2], [2, 1], [2, 3], [3, 2], [3, 1], [1, 3]].into_iter().map(|v| v.to_vec()).collect();
        let got_set: BTreeSet<Vec<i32>> = got.iter().map(|s| s.entries().to_vec()).collect();
        assert_eq!(got_set, want);
        assert_eq!(got.len(), 6);
    }

    #[test]
    fn marked_permutations_of_011() {
        let got = marked_permutations(&[0, 1, 1]).unwrap();
        let want: BTreeSet<Vec<i32>> = [
            [0, 1, 1], [1, 0, 1], [1, 1, 0],
            [0, -1, -1], [-1, 0, -1], [-1, -1, 0],
            [0, 1, -1], [1, 0, -1], [1, -1, 0],
            [0, -1, 1], [-1, 0, 1], [-1, 1, 0],
        ]
        .into_iter()
        .map(|v| v.to_vec())
        .collect();
        let got_set: BTreeSet<Vec<i32>> = got.iter().map(|s| s.entries().to_vec()).collect();
        assert_eq!(got_set, want);
        assert_eq!(got.len(), 12);
    }

    #[test]
    fn all_zero_multiset_has_one_marked_permutation() {
        assert_eq!(marked_permutations(&[0, 0, 0]).unwrap().len(), 1);
    }

    #[test]
    fn shifted_count_is_perms_times_shifts() {
        // distinct shifts never collide
        let bar = [1, 1, 3];
        let got = n_shifted_permutations(&bar, 3).unwrap();
        assert_eq!(got.len(), 3 * 4);
    }
}
