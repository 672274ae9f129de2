//! The type C labeling map: region addresses (window, antichain) to
//! sequences in `A^C(n)`, and back.
//!
//! The zero block writes 0 into the slots named by the absolute window
//! labels of its positive half. Every nonzero pair drops its bar value into
//! the slots named by the absolute labels of its representative block, signed
//! by the label signs. Pairs are anchored to bar values through position
//! data only, so inversion can replay the matching without knowing the
//! window; labels inside a block always read positives ascending then
//! negatives ascending, which pins the window down.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::biject::sg::{SgPair, SgTableC};
use crate::error::{Error, Result};
use crate::model::{BlockPair, PartitionC, SequenceC, SignedWindow};
use crate::poset::{Antichain, PosetElement, RootPoset};

/// A region of the type C Shi arrangement: cone window plus ceiling
/// antichain (orbit representatives).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegionAddressC {
    pub window: SignedWindow,
    pub antichain: Antichain,
}

impl fmt::Display for RegionAddressC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w={};arcs={}", self.window, self.antichain)
    }
}

impl RegionAddressC {
    pub fn new(window: SignedWindow, antichain: Antichain) -> Result<Self> {
        let addr = RegionAddressC { window, antichain };
        addr.validate()?;
        Ok(addr)
    }

    pub fn validate(&self) -> Result<()> {
        let poset = RootPoset::type_c(&self.window)?;
        if !poset.is_antichain(&self.antichain) {
            return Err(Error::InvalidAntichain(format!(
                "{} is not an antichain of the poset at window {}",
                self.antichain, self.window
            )));
        }
        Ok(())
    }
}

/// Anchor each nonzero pair to its bar value. Pairs come sorted by
/// (size, representative positions); the S-elements sorted by
/// (multiplicity, value) line up with them rank by rank.
fn anchored_pairs(pi: &PartitionC, sg: &SgPair) -> Result<Vec<(BlockPair, i32)>> {
    let pairs = pi.nonzero_pairs();
    let mut values: Vec<(usize, i32)> =
        sg.s().iter().zip(sg.g()).map(|(&s, &g)| (g, s)).collect();
    values.sort_unstable();
    if pairs.len() != values.len() {
        return Err(Error::Internal("pair/value count mismatch".into()));
    }
    pairs
        .into_iter()
        .zip(values)
        .map(|(p, (g, v))| {
            if p.size() != g {
                return Err(Error::Internal("pair size does not match its bar value".into()));
            }
            Ok((p, v))
        })
        .collect()
}

pub fn phi_c(addr: &RegionAddressC, table: &SgTableC) -> Result<SequenceC> {
    addr.validate()?;
    let n = addr.window.n();
    if table.n() != n {
        return Err(Error::Internal(format!("table built for n={}, address has n={n}", table.n())));
    }
    let poset = RootPoset::type_c(&addr.window)?;
    let pi = poset.antichain_to_partition_c(&addr.antichain)?;
    let sg = table.sg_of_partition(&pi)?;

    let mut entries: Vec<Option<i32>> = vec![None; n];
    let mut put = |slot: usize, value: i32| -> Result<()> {
        if entries[slot].replace(value).is_some() {
            return Err(Error::Internal(format!("slot {} written twice", slot + 1)));
        }
        Ok(())
    };
    if let Some(zero) = pi.zero_block() {
        for &p in zero.iter().filter(|&&p| p > 0) {
            let lab = addr.window.value(p);
            put((lab.abs() - 1) as usize, 0)?;
        }
    }
    for (pair, v) in anchored_pairs(&pi, &sg)? {
        for &p in &pair.rep {
            let lab = addr.window.value(p);
            put((lab.abs() - 1) as usize, if lab > 0 { v } else { -v })?;
        }
    }
    let entries: Option<Vec<i32>> = entries.into_iter().collect();
    SequenceC::new(entries.ok_or_else(|| Error::Internal("uncovered sequence slot".into()))?)
}

pub fn phi_c_inverse(s: &SequenceC, table: &SgTableC) -> Result<RegionAddressC> {
    let n = s.n();
    if table.n() != n {
        return Err(Error::Internal(format!("table built for n={}, sequence has n={n}", table.n())));
    }
    let mut mult: BTreeMap<i32, usize> = BTreeMap::new();
    let mut zero_positions: Vec<i32> = Vec::new();
    for (k, &a) in s.entries().iter().enumerate() {
        if a == 0 {
            zero_positions.push(k as i32 + 1);
        } else {
            *mult.entry(a.abs()).or_default() += 1;
        }
    }
    let sg = SgPair::new(mult.keys().copied().collect(), mult.values().copied().collect())?;
    let pi = table.partition_from_sg(&sg)?;

    let mut word: Vec<Option<i32>> = vec![None; n];
    let mut set = |p: i32, lab: i32| -> Result<()> {
        let (idx, val) = if p > 0 { (p, lab) } else { (-p, -lab) };
        if word[(idx - 1) as usize].replace(val).is_some() {
            return Err(Error::Internal(format!("window slot {idx} written twice")));
        }
        Ok(())
    };

    match pi.zero_block() {
        Some(zero) => {
            let half: Vec<i32> = zero.iter().copied().filter(|&p| p > 0).collect();
            if half.len() != zero_positions.len() {
                return Err(Error::Internal("zero block size mismatch".into()));
            }
            // labels on the positive half are negative, largest magnitude first
            for (t, &p) in half.iter().enumerate() {
                set(p, -zero_positions[half.len() - 1 - t])?;
            }
        }
        None if !zero_positions.is_empty() => {
            return Err(Error::Internal("zeros in sequence but no zero block".into()));
        }
        None => {}
    }

    for (pair, v) in anchored_pairs(&pi, &sg)? {
        let mut labels: Vec<i32> = s
            .entries()
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a.abs() == v)
            .map(|(k, &a)| if a > 0 { k as i32 + 1 } else { -(k as i32 + 1) })
            .collect();
        if labels.len() != pair.size() {
            return Err(Error::Internal("label count does not match pair size".into()));
        }
        labels.sort_by_key(|&l| (l < 0, l));
        for (&p, &l) in pair.rep.iter().zip(&labels) {
            set(p, l)?;
        }
    }

    let word: Option<Vec<i32>> = word.into_iter().collect();
    let window =
        SignedWindow::new(word.ok_or_else(|| Error::Internal("uncovered window slot".into()))?)?;
    let orbits: BTreeSet<PosetElement> =
        pi.arcs().into_iter().map(|(i, j)| PosetElement::orbit_rep(i, j)).collect();
    RegionAddressC::new(window, Antichain::new(orbits.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn addr(window: &[i32], arcs: &[(i32, i32)]) -> RegionAddressC {
        RegionAddressC::new(
            SignedWindow::new(window.to_vec()).unwrap(),
            Antichain::new(arcs.iter().map(|&(i, j)| PosetElement::orbit_rep(i, j)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn n1_cases_exhaust_the_sequences() {
        let table = SgTableC::new(1).unwrap();
        assert_eq!(phi_c(&addr(&[1], &[]), &table).unwrap().entries(), &[1]);
        assert_eq!(phi_c(&addr(&[-1], &[]), &table).unwrap().entries(), &[-1]);
        assert_eq!(phi_c(&addr(&[-1], &[(-1, 1)]), &table).unwrap().entries(), &[0]);
    }

    #[test]
    fn n1_inverses() {
        let table = SgTableC::new(1).unwrap();
        let back = phi_c_inverse(&SequenceC::new(vec![0]).unwrap(), &table).unwrap();
        assert_eq!(back, addr(&[-1], &[(-1, 1)]));
        let back = phi_c_inverse(&SequenceC::new(vec![1]).unwrap(), &table).unwrap();
        assert_eq!(back, addr(&[1], &[]));
    }

    fn all_addresses(n: usize) -> Vec<RegionAddressC> {
        let mut out = Vec::new();
        for w in SignedWindow::all(n) {
            let poset = RootPoset::type_c(&w).unwrap();
            for antichain in poset.antichains() {
                out.push(RegionAddressC { window: w.clone(), antichain });
            }
        }
        out
    }

    #[test]
    fn exhaustive_round_trip_small_n() {
        for n in 1..=3 {
            let table = SgTableC::new(n).unwrap();
            let mut images = std::collections::BTreeSet::new();
            for a in all_addresses(n) {
                let s = phi_c(&a, &table).unwrap();
                assert!(images.insert(s.clone()), "collision at {a} -> {s}");
                assert_eq!(phi_c_inverse(&s, &table).unwrap(), a, "s={s}");
            }
            assert_eq!(images.len() as u64, (2 * n as u64 + 1).pow(n as u32), "n={n}");
            let mut count = 0u64;
            crate::model::for_each_sequence_c(n, |s| {
                let back = phi_c_inverse(s, &table).unwrap();
                assert_eq!(&phi_c(&back, &table).unwrap(), s);
                count += 1;
            });
            assert_eq!(count, (2 * n as u64 + 1).pow(n as u32));
        }
    }

    #[test]
    fn statistic_transport() {
        for n in 1..=3 {
            let table = SgTableC::new(n).unwrap();
            for a in all_addresses(n) {
                let s = phi_c(&a, &table).unwrap();
                assert_eq!(n - s.d_c_stat(), a.antichain.len(), "{a}");
            }
        }
    }

    #[test]
    fn image_is_marked_permutation_of_bar() {
        use crate::biject::bars::{bar_multiset_c, marked_permutations};
        let n = 2;
        let table = SgTableC::new(n).unwrap();
        for a in all_addresses(n) {
            let poset = RootPoset::type_c(&a.window).unwrap();
            let pi = poset.antichain_to_partition_c(&a.antichain).unwrap();
            let bar = bar_multiset_c(&pi, &table).unwrap();
            let s = phi_c(&a, &table).unwrap();
            assert!(marked_permutations(&bar).unwrap().contains(&s));
        }
    }
}
