//! The (S, g) encodings of nonnesting partitions, and the (c, o) vectors
//! that present the same data ordered by S.
//!
//! Type A is structural: S is the set of block minima and g the block sizes,
//! and a pair is realizable exactly when, listing S ascending as `c` with
//! sizes `o`, `c_1 = 1` and `c_i ≤ o_1 + ... + o_{i-1} + 1`. Reconstruction
//! is a greedy sweep that attaches each non-minimum to the open unfilled
//! block with the smallest last element.
//!
//! Type C admits every pair with `Σ g ≤ n`, and the correspondence is fixed
//! by rank: partitions of one type and pairs of the same type are both
//! canonically ordered and matched index by index. The per-type counts agree,
//! which [`SgTableC::new`] verifies while building the table.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{enumerate_nonnesting_c, PartitionA, PartitionC, PartitionType};

/// A d-subset `S` of `[n]` with a size assignment `g : S → parts`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SgPair {
    s: Vec<i32>,
    g: Vec<usize>,
}

/// The (c, o) view of an [`SgPair`]: `c` is `S` sorted ascending and `o` the
/// matching g-values.
pub type CoVectors = SgPair;

impl SgPair {
    pub fn new(s: Vec<i32>, g: Vec<usize>) -> Result<Self> {
        if s.len() != g.len() {
            return Err(Error::InvalidSg("S and g have different lengths".into()));
        }
        if !s.windows(2).all(|w| w[0] < w[1]) || s.first().is_some_and(|&v| v < 1) {
            return Err(Error::InvalidSg(format!("S = {s:?} is not an ascending subset of [n]")));
        }
        if g.contains(&0) {
            return Err(Error::InvalidSg("zero size in g".into()));
        }
        Ok(SgPair { s, g })
    }

    pub fn empty() -> Self {
        SgPair { s: Vec::new(), g: Vec::new() }
    }

    pub fn s(&self) -> &[i32] {
        &self.s
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn d(&self) -> usize {
        self.s.len()
    }

    /// `Σ g(s)`, the total size carried by the pair.
    pub fn total(&self) -> usize {
        self.g.iter().sum()
    }

    /// The multiset of g-values as an integer partition.
    pub fn type_of(&self) -> PartitionType {
        PartitionType::new(self.g.clone()).expect("positive sizes")
    }
}

impl std::fmt::Display for SgPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "S={{{}}};g={}",
            self.s.iter().join(","),
            self.g.iter().join(",")
        )
    }
}

/// S and g read off a nonnesting partition of `[n]`: block minima and sizes.
pub fn sg_of_partition_a(pi: &PartitionA) -> Result<SgPair> {
    if !pi.is_nonnesting() {
        return Err(Error::InvalidPartition(format!("{pi} is not nonnesting")));
    }
    let s = pi.blocks().iter().map(|b| b[0]).collect();
    let g = pi.blocks().iter().map(|b| b.len()).collect();
    SgPair::new(s, g)
}

/// Realizability of a type A pair (the ascending-order constraints above).
pub fn sg_valid_a(sg: &SgPair, n: usize) -> bool {
    if sg.total() != n || sg.s.last().is_some_and(|&v| v > n as i32) {
        return false;
    }
    if n == 0 {
        return sg.d() == 0;
    }
    if sg.s.first() != Some(&1) {
        return false;
    }
    let mut opened = 0usize;
    for (k, &c) in sg.s.iter().enumerate().skip(1) {
        opened += sg.g[k - 1];
        if c as usize > opened + 1 {
            return false;
        }
    }
    true
}

/// The unique nonnesting partition of `[n]` with block minima `S` and sizes
/// `g`. Non-minimum elements attach greedily to the open unfilled block with
/// the smallest current last element.
pub fn partition_from_sg_a(sg: &SgPair, n: usize) -> Result<PartitionA> {
    if !sg_valid_a(sg, n) {
        return Err(Error::InvalidSg(format!("{sg} is not realizable for n={n}")));
    }
    let capacity: BTreeMap<i32, usize> = sg.s.iter().copied().zip(sg.g.iter().copied()).collect();
    let mut blocks: Vec<Vec<i32>> = Vec::new();
    for e in 1..=n as i32 {
        if let Some(&cap) = capacity.get(&e) {
            blocks.push(Vec::with_capacity(cap));
            blocks.last_mut().unwrap().push(e);
        } else {
            let target = blocks
                .iter_mut()
                .filter(|b| b.len() < capacity[&b[0]])
                .min_by_key(|b| *b.last().unwrap())
                .ok_or_else(|| Error::InvalidSg(format!("{sg}: no open block for element {e}")))?;
            target.push(e);
        }
    }
    let partition = PartitionA::new(n, blocks)?;
    debug_assert!(partition.is_nonnesting());
    Ok(partition)
}

/// The canonical type-preserving correspondence between nonnesting type C
/// partitions and (S, g) pairs for one value of `n`.
#[derive(Debug)]
pub struct SgTableC {
    n: usize,
    classes: BTreeMap<Vec<usize>, ClassC>,
}

#[derive(Debug)]
struct ClassC {
    partitions: Vec<PartitionC>,
    sgs: Vec<SgPair>,
    partition_rank: BTreeMap<PartitionC, usize>,
    sg_rank: BTreeMap<SgPair, usize>,
}

impl SgTableC {
    pub fn new(n: usize) -> Result<Self> {
        let mut classes: BTreeMap<Vec<usize>, ClassC> = BTreeMap::new();
        for pi in enumerate_nonnesting_c(n)? {
            let lam = pi.partition_type()?;
            classes
                .entry(lam.parts().to_vec())
                .or_insert_with(|| ClassC {
                    partitions: Vec::new(),
                    sgs: Vec::new(),
                    partition_rank: BTreeMap::new(),
                    sg_rank: BTreeMap::new(),
                })
                .partitions
                .push(pi);
        }
        for (parts, class) in &mut classes {
            class.sgs = enumerate_sg_pairs(parts, n);
            if class.sgs.len() != class.partitions.len() {
                return Err(Error::Internal(format!(
                    "type ({}) class sizes differ: {} partitions vs {} pairs",
                    parts.iter().join(","),
                    class.partitions.len(),
                    class.sgs.len()
                )));
            }
            class.partition_rank =
                class.partitions.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
            class.sg_rank = class.sgs.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        }
        Ok(SgTableC { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sg_of_partition(&self, pi: &PartitionC) -> Result<SgPair> {
        if pi.n() != self.n {
            return Err(Error::InvalidPartition(format!("partition is not on [±{}]", self.n)));
        }
        if !pi.is_symmetric() || !pi.is_nonnesting() {
            return Err(Error::InvalidPartition(format!("{pi} is not symmetric nonnesting")));
        }
        let lam = pi.partition_type()?;
        let class = self
            .classes
            .get(lam.parts())
            .ok_or_else(|| Error::Internal(format!("missing type class {lam}")))?;
        let rank = *class
            .partition_rank
            .get(pi)
            .ok_or_else(|| Error::Internal(format!("{pi} missing from its type class")))?;
        Ok(class.sgs[rank].clone())
    }

    pub fn partition_from_sg(&self, sg: &SgPair) -> Result<PartitionC> {
        if sg.total() > self.n || sg.s().last().is_some_and(|&v| v > self.n as i32) {
            return Err(Error::InvalidSg(format!("{sg} out of range for n={}", self.n)));
        }
        let lam = sg.type_of();
        let class = self
            .classes
            .get(lam.parts())
            .ok_or_else(|| Error::InvalidSg(format!("no type class {lam}")))?;
        let rank = *class
            .sg_rank
            .get(sg)
            .ok_or_else(|| Error::InvalidSg(format!("{sg} is not a valid pair")))?;
        Ok(class.partitions[rank].clone())
    }
}

/// All (S, g) pairs of a given type, ordered by (S, g) lexicographically.
fn enumerate_sg_pairs(parts_desc: &[usize], n: usize) -> Vec<SgPair> {
    let d = parts_desc.len();
    let mut assignments = Vec::new();
    let mut asc: Vec<usize> = parts_desc.to_vec();
    asc.sort_unstable();
    loop {
        assignments.push(asc.clone());
        if !next_permutation(&mut asc) {
            break;
        }
    }
    let mut out = Vec::new();
    for s in (1..=n as i32).combinations(d) {
        for g in &assignments {
            out.push(SgPair { s: s.clone(), g: g.clone() });
        }
    }
    out.sort();
    out
}

/// Advance to the next lexicographic permutation in place.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut k = v.len() - 1;
    while k > 0 && v[k - 1] >= v[k] {
        k -= 1;
    }
    if k == 0 {
        return false;
    }
    let mut l = v.len() - 1;
    while v[l] <= v[k - 1] {
        l -= 1;
    }
    v.swap(k - 1, l);
    v[k..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::enumerate_nonnesting_a;

    #[test]
    fn sg_of_partition_examples() {
        let p = PartitionA::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        let sg = sg_of_partition_a(&p).unwrap();
        assert_eq!(sg.s(), &[1, 2]);
        assert_eq!(sg.g(), &[2, 2]);

        let singles = PartitionA::singletons(4);
        let sg = sg_of_partition_a(&singles).unwrap();
        assert_eq!(sg.s(), &[1, 2, 3, 4]);
        assert_eq!(sg.g(), &[1, 1, 1, 1]);

        let p = PartitionA::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        let sg = sg_of_partition_a(&p).unwrap();
        assert_eq!((sg.s(), sg.g()), (&[1, 3][..], &[2, 1][..]));
    }

    #[test]
    fn reconstruction_examples() {
        let sg = SgPair::new(vec![1, 2], vec![2, 2]).unwrap();
        let p = partition_from_sg_a(&sg, 4).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2, 4]]);

        let sg = SgPair::new(vec![1], vec![5]).unwrap();
        let p = partition_from_sg_a(&sg, 5).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2, 3, 4, 5]]);

        // S must contain 1 and respect the prefix bound
        assert!(partition_from_sg_a(&SgPair::new(vec![2, 3], vec![2, 1]).unwrap(), 3).is_err());
        assert!(partition_from_sg_a(&SgPair::new(vec![1, 3], vec![1, 2]).unwrap(), 3).is_err());
    }

    #[test]
    fn sg_is_a_bijection_onto_valid_pairs() {
        // round trip plus brute-force uniqueness, over every nonnesting partition
        for n in 0..=7 {
            let all = enumerate_nonnesting_a(n).unwrap();
            let mut images = std::collections::BTreeSet::new();
            for pi in &all {
                let sg = sg_of_partition_a(pi).unwrap();
                assert!(sg_valid_a(&sg, n));
                assert_eq!(&partition_from_sg_a(&sg, n).unwrap(), pi, "n={n}");
                assert!(images.insert(sg), "duplicate image at n={n}");
            }
            // every valid pair is hit
            for d in 0..=n {
                for s in (1..=n as i32).combinations(d) {
                    for g in compositions_of(n, d) {
                        let sg = SgPair::new(s.clone(), g).unwrap();
                        if sg_valid_a(&sg, n) {
                            assert!(images.contains(&sg), "missed {sg} at n={n}");
                        } else {
                            assert!(partition_from_sg_a(&sg, n).is_err());
                        }
                    }
                }
            }
        }
    }

    fn compositions_of(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 1..=total.saturating_sub(parts - 1) {
            for mut rest in compositions_of(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn c_table_small_classes() {
        let table = SgTableC::new(1).unwrap();
        let singles = PartitionC::singletons(1);
        let sg = table.sg_of_partition(&singles).unwrap();
        assert_eq!((sg.s(), sg.g()), (&[1][..], &[1][..]));
        assert_eq!(table.partition_from_sg(&sg).unwrap(), singles);

        let zero = PartitionC::new(1, vec![vec![-1, 1]]).unwrap();
        let sg = table.sg_of_partition(&zero).unwrap();
        assert_eq!(sg, SgPair::empty());
        assert_eq!(table.partition_from_sg(&SgPair::empty()).unwrap(), zero);
    }

    #[test]
    fn c_table_type_one_class_at_n2() {
        let table = SgTableC::new(2).unwrap();
        let p1 = PartitionC::new(2, vec![vec![-2, 2], vec![-1], vec![1]]).unwrap();
        let p2 = PartitionC::new(2, vec![vec![-1, 1], vec![-2], vec![2]]).unwrap();
        let images: std::collections::BTreeSet<SgPair> =
            [&p1, &p2].iter().map(|p| table.sg_of_partition(p).unwrap()).collect();
        let expected: std::collections::BTreeSet<SgPair> = [
            SgPair::new(vec![1], vec![1]).unwrap(),
            SgPair::new(vec![2], vec![1]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(images, expected);
    }

    #[test]
    fn c_table_is_a_bijection() {
        for n in 0..=5 {
            let table = SgTableC::new(n).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for pi in enumerate_nonnesting_c(n).unwrap() {
                let sg = table.sg_of_partition(&pi).unwrap();
                assert_eq!(sg.type_of(), pi.partition_type().unwrap());
                assert_eq!(table.partition_from_sg(&sg).unwrap(), pi, "n={n}");
                assert!(seen.insert(sg));
            }
        }
    }

    #[test]
    fn next_permutation_order() {
        let mut v = vec![1, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
