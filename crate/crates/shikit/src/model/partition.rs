//! Set partitions of `[n]` and of `[±n]`, their arc diagrams and types.
//!
//! Arcs join consecutive elements of a block. A diagram is nonnesting when no
//! arc lies strictly inside another. Type C partitions live on the ground set
//! `-n, ..., -1, 1, ..., n` and are symmetric: `B` a block implies `-B` a
//! block; the zero block is the block with `B = -B`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// An integer partition recording block sizes, parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionType {
    parts: Vec<usize>,
}

impl PartitionType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part in type".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionType { parts })
    }

    pub fn empty() -> Self {
        PartitionType { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, written `d` throughout.
    pub fn d(&self) -> usize {
        self.parts.len()
    }

    /// `|λ|`, the sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `m_λ = ∏ r_i!` over the part multiplicities.
    pub fn m_lambda(&self) -> u64 {
        let mut m = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            m *= factorial((j - i) as u64);
            i = j;
        }
        m
    }

    /// All partitions of exactly `n`.
    pub fn all_of(n: usize) -> Vec<PartitionType> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionType>) {
            if rem == 0 {
                out.push(PartitionType { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with `|λ| ≤ n`, the empty partition included.
    pub fn all_up_to(n: usize) -> Vec<PartitionType> {
        let mut out = vec![PartitionType::empty()];
        for k in 1..=n {
            out.extend(PartitionType::all_of(k));
        }
        out
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// A set partition of `[n]`; blocks hold ascending elements and are ordered
/// by their minima.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionA {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl PartitionA {
    pub fn new(n: usize, mut blocks: Vec<Vec<i32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &mut blocks {
            block.sort_unstable();
            for &e in block.iter() {
                if e < 1 || e > n as i32 || seen[(e - 1) as usize] {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} repeated or out of range for [{n}]"
                    )));
                }
                seen[(e - 1) as usize] = true;
            }
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidPartition(format!("blocks do not cover [{n}]")));
        }
        blocks.sort();
        Ok(PartitionA { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        PartitionA { n, blocks: (1..=n as i32).map(|e| vec![e]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Arcs joining consecutive elements of each block, sorted.
    pub fn arcs(&self) -> Vec<(i32, i32)> {
        let mut arcs = Vec::new();
        for block in &self.blocks {
            for pair in block.windows(2) {
                arcs.push((pair[0], pair[1]));
            }
        }
        arcs.sort_unstable();
        arcs
    }

    pub fn is_nonnesting(&self) -> bool {
        arcs_nonnesting(&self.arcs())
    }

    /// Block sizes as an integer partition.
    pub fn partition_type(&self) -> PartitionType {
        PartitionType::new(self.blocks.iter().map(|b| b.len()).collect()).expect("nonempty blocks")
    }
}

impl fmt::Display for PartitionA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", encode_blocks(&self.blocks))
    }
}

impl FromStr for PartitionA {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = decode_blocks(s)?;
        let n = blocks.iter().flatten().count();
        PartitionA::new(n, blocks)
    }
}

/// A set partition of `[±n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionC {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl PartitionC {
    pub fn new(n: usize, mut blocks: Vec<Vec<i32>>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for block in &mut blocks {
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e.abs() > n as i32 || !seen.insert(e) {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} repeated or out of range for [±{n}]"
                    )));
                }
            }
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
        }
        if seen.len() != 2 * n {
            return Err(Error::InvalidPartition(format!("blocks do not cover [±{n}]")));
        }
        blocks.sort();
        Ok(PartitionC { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        let blocks = (-(n as i32)..=n as i32).filter(|&e| e != 0).map(|e| vec![e]).collect();
        PartitionC { n, blocks: { let mut b: Vec<Vec<i32>> = blocks; b.sort(); b } }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Closed under negation of blocks.
    pub fn is_symmetric(&self) -> bool {
        self.blocks.iter().all(|b| {
            let mut neg: Vec<i32> = b.iter().map(|&e| -e).collect();
            neg.sort_unstable();
            self.blocks.binary_search(&neg).is_ok()
        })
    }

    /// The block with `B = -B`, if present.
    pub fn zero_block(&self) -> Option<&Vec<i32>> {
        self.blocks.iter().find(|b| {
            let mut neg: Vec<i32> = b.iter().map(|&e| -e).collect();
            neg.sort_unstable();
            neg == **b
        })
    }

    /// The pairs `{B, -B}` of nonzero blocks, one entry per pair. The
    /// representative is the block containing the largest position of the
    /// pair; the rule only looks at positions, never at window labels.
    pub fn nonzero_pairs(&self) -> Vec<BlockPair> {
        let mut used = std::collections::BTreeSet::new();
        let mut pairs = Vec::new();
        for block in &self.blocks {
            if used.contains(block) {
                continue;
            }
            let mut neg: Vec<i32> = block.iter().map(|&e| -e).collect();
            neg.sort_unstable();
            if neg == *block {
                continue; // zero block
            }
            used.insert(block.clone());
            used.insert(neg.clone());
            let top = *block.last().unwrap().max(neg.last().unwrap());
            let (rep, mirror) = if block.contains(&top) {
                (block.clone(), neg)
            } else {
                (neg, block.clone())
            };
            pairs.push(BlockPair { rep, mirror });
        }
        pairs.sort_by(|a, b| (a.rep.len(), &a.rep).cmp(&(b.rep.len(), &b.rep)));
        pairs
    }

    pub fn arcs(&self) -> Vec<(i32, i32)> {
        let mut arcs = Vec::new();
        for block in &self.blocks {
            for pair in block.windows(2) {
                arcs.push((pair[0], pair[1]));
            }
        }
        arcs.sort_unstable();
        arcs
    }

    pub fn is_nonnesting(&self) -> bool {
        arcs_nonnesting(&self.arcs())
    }

    /// One part per pair `{B, -B}` of nonzero blocks; the zero block
    /// contributes no part. Requires a symmetric partition.
    pub fn partition_type(&self) -> Result<PartitionType> {
        if !self.is_symmetric() {
            return Err(Error::InvalidPartition("partition is not symmetric".into()));
        }
        PartitionType::new(self.nonzero_pairs().iter().map(|p| p.rep.len()).collect())
    }
}

impl fmt::Display for PartitionC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", encode_blocks(&self.blocks))
    }
}

impl FromStr for PartitionC {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = decode_blocks(s)?;
        let n = blocks.iter().flatten().count();
        if n % 2 != 0 {
            return Err(Error::InvalidPartition("odd ground set".into()));
        }
        PartitionC::new(n / 2, blocks)
    }
}

/// A nonzero block pair `{B, -B}` with its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPair {
    pub rep: Vec<i32>,
    pub mirror: Vec<i32>,
}

impl BlockPair {
    pub fn size(&self) -> usize {
        self.rep.len()
    }
}

fn encode_blocks(blocks: &[Vec<i32>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().join(",")))
        .join("|")
}

fn decode_blocks(s: &str) -> Result<Vec<Vec<i32>>> {
    let mut blocks = Vec::new();
    for part in s.trim().split('|') {
        let part = part.trim();
        let inner = part
            .strip_prefix('{')
            .and_then(|p| p.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("block `{part}` not brace delimited")))?;
        let mut block = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            block.push(tok.parse::<i32>().map_err(|_| Error::Parse(format!("bad element `{tok}`")))?);
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// No arc strictly inside another.
pub fn arcs_nonnesting(arcs: &[(i32, i32)]) -> bool {
    for (k, &(i, j)) in arcs.iter().enumerate() {
        for &(r, s) in &arcs[k + 1..] {
            if (i < r && s < j) || (r < i && j < s) {
                return false;
            }
        }
    }
    true
}

/// Rebuild a partition of `[n]` from an arc set. Fails when the arcs are not
/// the arc diagram of a partition (for example two arcs sharing an endpoint
/// on the same side).
pub fn partition_from_arcs_a(n: usize, arcs: &[(i32, i32)]) -> Result<PartitionA> {
    let blocks = blocks_from_arcs(arcs, (1..=n as i32).collect())?;
    let partition = PartitionA::new(n, blocks)?;
    if partition.arcs() != { let mut a = arcs.to_vec(); a.sort_unstable(); a } {
        return Err(Error::InvalidAntichain(format!("arcs {arcs:?} are not a partition diagram")));
    }
    Ok(partition)
}

/// Same over the ground set `[±n]`.
pub fn partition_from_arcs_c(n: usize, arcs: &[(i32, i32)]) -> Result<PartitionC> {
    let ground = (-(n as i32)..=n as i32).filter(|&e| e != 0).collect();
    let blocks = blocks_from_arcs(arcs, ground)?;
    let partition = PartitionC::new(n, blocks)?;
    if partition.arcs() != { let mut a = arcs.to_vec(); a.sort_unstable(); a } {
        return Err(Error::InvalidAntichain(format!("arcs {arcs:?} are not a partition diagram")));
    }
    Ok(partition)
}

fn blocks_from_arcs(arcs: &[(i32, i32)], ground: Vec<i32>) -> Result<Vec<Vec<i32>>> {
    use std::collections::BTreeMap;
    let index: BTreeMap<i32, usize> = ground.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let mut parent: Vec<usize> = (0..ground.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &(i, j) in arcs {
        let (&a, &b) = match (index.get(&i), index.get(&j)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InvalidAntichain(format!("arc ({i},{j}) off the ground set"))),
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut groups: BTreeMap<usize, Vec<i32>> = BTreeMap::new();
    for (k, &e) in ground.iter().enumerate() {
        groups.entry(find(&mut parent, k)).or_default().push(e);
    }
    Ok(groups.into_values().collect())
}

/// Stream all set partitions of `{0, ..., k-1}` as restricted-growth strings.
pub(crate) fn for_each_set_partition(k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(k: usize, pos: usize, max: usize, rgs: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if pos == k {
            f(rgs);
            return;
        }
        for v in 0..=max + 1 {
            rgs.push(v);
            rec(k, pos + 1, max.max(v), rgs, f);
            rgs.pop();
        }
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut rgs = vec![0];
    rec(k, 1, 0, &mut rgs, &mut f);
}

const ENUM_MAX_A: usize = 9;
const ENUM_MAX_C: usize = 5;

/// All nonnesting partitions of `[n]`, canonically ordered.
pub fn enumerate_nonnesting_a(n: usize) -> Result<Vec<PartitionA>> {
    if n > ENUM_MAX_A {
        return Err(Error::ResourceLimit(format!("nonnesting enumeration capped at n={ENUM_MAX_A} (got {n})")));
    }
    let mut out = Vec::new();
    for_each_set_partition(n, |rgs| {
        let mut blocks: Vec<Vec<i32>> = Vec::new();
        for (k, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(k as i32 + 1);
        }
        if arcs_nonnesting(&diagram_arcs(&blocks)) {
            blocks.sort();
            out.push(PartitionA { n, blocks });
        }
    });
    out.sort();
    Ok(out)
}

/// All symmetric nonnesting partitions of `[±n]`, canonically ordered.
pub fn enumerate_nonnesting_c(n: usize) -> Result<Vec<PartitionC>> {
    if n > ENUM_MAX_C {
        return Err(Error::ResourceLimit(format!("nonnesting C enumeration capped at n={ENUM_MAX_C} (got {n})")));
    }
    let ground: Vec<i32> = (-(n as i32)..=n as i32).filter(|&e| e != 0).collect();
    let mut out = Vec::new();
    for_each_set_partition(2 * n, |rgs| {
        let mut blocks: Vec<Vec<i32>> = Vec::new();
        for (k, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(ground[k]);
        }
        if !arcs_nonnesting(&diagram_arcs(&blocks)) {
            return;
        }
        blocks.sort();
        let p = PartitionC { n, blocks };
        if p.is_symmetric() {
            out.push(p);
        }
    });
    out.sort();
    Ok(out)
}

fn diagram_arcs(blocks: &[Vec<i32>]) -> Vec<(i32, i32)> {
    let mut arcs = Vec::new();
    for block in blocks {
        for pair in block.windows(2) {
            arcs.push((pair[0], pair[1]));
        }
    }
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_of_c5_example() {
        let p = PartitionC::new(
            5,
            vec![vec![2], vec![-2], vec![-1, -4], vec![1, 4], vec![-5, -3, 3, 5]],
        )
        .unwrap();
        assert_eq!(p.partition_type().unwrap().parts(), &[2, 1]);
        assert_eq!(p.zero_block().unwrap(), &vec![-5, -3, 3, 5]);
    }

    #[test]
    fn type_of_singletons() {
        assert_eq!(PartitionA::singletons(3).partition_type().parts(), &[1, 1, 1]);
    }

    #[test]
    fn type_of_c2_pair() {
        let p = PartitionC::new(2, vec![vec![-2, -1], vec![1, 2]]).unwrap();
        assert_eq!(p.partition_type().unwrap().parts(), &[2]);
    }

    #[test]
    fn nonsymmetric_type_errors() {
        let p = PartitionC::new(2, vec![vec![-2, -1, 1], vec![2]]).unwrap();
        assert!(p.partition_type().is_err());
    }

    #[test]
    fn nonnesting_detection() {
        let crossing = PartitionA::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(crossing.is_nonnesting());
        let nested = PartitionA::new(4, vec![vec![1, 4], vec![2, 3]]).unwrap();
        assert!(!nested.is_nonnesting());
        assert!(PartitionA::singletons(5).is_nonnesting());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_nonnesting_a(1).unwrap().len(), 1);
        assert_eq!(enumerate_nonnesting_a(3).unwrap().len(), 5);
        assert_eq!(enumerate_nonnesting_c(2).unwrap().len(), 6);
    }

    #[test]
    fn catalan_counts_small() {
        // brute-force census against the closed form binom(2n, n)/(n+1)
        let catalan = |n: u64| {
            let b: u64 = (1..=2 * n).product::<u64>() / ((1..=n).product::<u64>().pow(2));
            b / (n + 1)
        };
        for n in 0..=8 {
            assert_eq!(enumerate_nonnesting_a(n).unwrap().len() as u64, catalan(n as u64), "n={n}");
        }
    }

    #[test]
    fn zero_block_size_matches_type() {
        for n in 1..=4 {
            for p in enumerate_nonnesting_c(n).unwrap() {
                let lam = p.partition_type().unwrap();
                let zero = p.zero_block().map_or(0, |b| b.len());
                assert_eq!(zero, 2 * (n - lam.total()));
            }
        }
    }

    #[test]
    fn encode_parse_round_trip() {
        let p = PartitionC::new(
            5,
            vec![vec![2], vec![-2], vec![-1, -4], vec![1, 4], vec![-5, -3, 3, 5]],
        )
        .unwrap();
        assert_eq!(p.to_string(), "{-5,-3,3,5}|{-4,-1}|{-2}|{1,4}|{2}");
        assert_eq!(p.to_string().parse::<PartitionC>().unwrap(), p);
    }

    #[test]
    fn partition_types_enumeration() {
        assert_eq!(PartitionType::all_of(4).len(), 5);
        assert_eq!(PartitionType::all_up_to(2).len(), 4); // (), (1), (2), (1,1)
        let t = PartitionType::new(vec![1, 2, 2, 3]).unwrap();
        assert_eq!(t.parts(), &[3, 2, 2, 1]);
        assert_eq!(t.m_lambda(), 2);
        assert_eq!(t.d(), 4);
    }

    #[test]
    fn arcs_reconstruction() {
        let p = partition_from_arcs_a(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2, 4]]);
        assert!(partition_from_arcs_a(4, &[(1, 2), (1, 3)]).is_err());
        let c = partition_from_arcs_c(2, &[(-1, 2), (-2, 1)]).unwrap();
        assert_eq!(c.blocks(), &[vec![-2, 1], vec![-1, 2]]);
    }

    #[test]
    fn enumeration_guards_trip() {
        assert!(matches!(enumerate_nonnesting_a(10), Err(crate::error::Error::ResourceLimit(_))));
        assert!(matches!(enumerate_nonnesting_c(6), Err(crate::error::Error::ResourceLimit(_))));
    }
}
