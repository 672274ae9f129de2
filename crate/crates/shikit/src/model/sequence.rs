//! Label sequences: `A(n)` with entries in `[n+1]`, parking functions, and
//! the signed family `A^C(n)` with entries in `[±n] ∪ {0}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::perm::parse_int_list;

/// A sequence `a_1 .. a_n` with `a_i ∈ [n+1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceA {
    n: usize,
    entries: Vec<i32>,
}

impl SequenceA {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        for &a in &entries {
            if a < 1 || a > n as i32 + 1 {
                return Err(Error::InvalidSequence(format!("entry {a} outside [1, {}]", n + 1)));
            }
        }
        Ok(SequenceA { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// Number of distinct entries.
    pub fn d_stat(&self) -> usize {
        self.entries.iter().collect::<std::collections::BTreeSet<_>>().len()
    }

    /// The increasing rearrangement `b` satisfies `b_i ≤ i`.
    pub fn is_parking_function(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        sorted.iter().enumerate().all(|(k, &b)| b <= k as i32 + 1)
    }
}

impl fmt::Display for SequenceA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

impl FromStr for SequenceA {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceA::new(parse_int_list(s)?)
    }
}

/// A sequence `a_1 .. a_n` with `a_i ∈ {-n, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceC {
    n: usize,
    entries: Vec<i32>,
}

impl SequenceC {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        for &a in &entries {
            if a.abs() > n as i32 {
                return Err(Error::InvalidSequence(format!("entry {a} outside [-{n}, {n}]")));
            }
        }
        Ok(SequenceC { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// Number of distinct absolute values among the nonzero entries.
    pub fn d_c_stat(&self) -> usize {
        self.entries
            .iter()
            .filter(|&&a| a != 0)
            .map(|a| a.abs())
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }
}

impl fmt::Display for SequenceC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

impl FromStr for SequenceC {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceC::new(parse_int_list(s)?)
    }
}

/// Visit every sequence of `A(n)` in lexicographic order.
pub fn for_each_sequence_a(n: usize, mut f: impl FnMut(&SequenceA)) {
    let mut entries = vec![1i32; n];
    loop {
        f(&SequenceA { n, entries: entries.clone() });
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if entries[k] < n as i32 + 1 {
                entries[k] += 1;
                for e in entries[k + 1..].iter_mut() {
                    *e = 1;
                }
                break;
            }
        }
    }
}

/// Visit every sequence of `A^C(n)` in lexicographic order.
pub fn for_each_sequence_c(n: usize, mut f: impl FnMut(&SequenceC)) {
    let low = -(n as i32);
    let mut entries = vec![low; n];
    loop {
        f(&SequenceC { n, entries: entries.clone() });
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if entries[k] < n as i32 {
                entries[k] += 1;
                for e in entries[k + 1..].iter_mut() {
                    *e = low;
                }
                break;
            }
        }
    }
}

/// All parking functions of length `n`, lexicographically ordered.
pub fn enumerate_parking_functions(n: usize) -> Result<Vec<SequenceA>> {
    if n > 7 {
        return Err(Error::ResourceLimit(format!("parking enumeration capped at n=7 (got {n})")));
    }
    let mut out = Vec::new();
    for_each_sequence_a(n, |s| {
        if s.entries.iter().all(|&a| a <= n as i32) && s.is_parking_function() {
            out.push(s.clone());
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        assert_eq!(SequenceA::new(vec![1, 3, 1]).unwrap().d_stat(), 2);
        assert_eq!(SequenceC::new(vec![0]).unwrap().d_c_stat(), 0);
        assert_eq!(SequenceC::new(vec![3, -3, 1]).unwrap().d_c_stat(), 2);
    }

    #[test]
    fn parking() {
        assert!(SequenceA::new(vec![1, 3, 1]).unwrap().is_parking_function());
        assert!(!SequenceA::new(vec![2, 2]).unwrap().is_parking_function());
        assert!(SequenceA::new(vec![1; 6]).unwrap().is_parking_function());
    }

    #[test]
    fn parking_census_matches_formula() {
        for n in 1..=5u32 {
            let count = enumerate_parking_functions(n as usize).unwrap().len() as u64;
            assert_eq!(count, (n as u64 + 1).pow(n - 1), "n={n}");
        }
    }

    #[test]
    fn sequence_space_sizes() {
        let mut count = 0u64;
        for_each_sequence_a(3, |_| count += 1);
        assert_eq!(count, 64);
        count = 0;
        for_each_sequence_c(2, |_| count += 1);
        assert_eq!(count, 25);
    }

    #[test]
    fn parse_round_trip() {
        let s: SequenceC = "-1,0,2".parse().unwrap();
        assert_eq!(s.entries(), &[-1, 0, 2]);
        assert_eq!(s.to_string(), "-1,0,2");
    }
}
