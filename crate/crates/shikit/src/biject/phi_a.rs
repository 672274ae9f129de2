//! The type A labeling map: region addresses (copy, window, antichain) to
//! sequences in `A(n)`, and back.
//!
//! Each block of the partition drops its own minimum, shifted by the copy
//! index modulo `n + 1`, into the sequence slots named by the block's window
//! labels. Copy 1 is unshifted, so its image is exactly the parking
//! functions. Inversion finds the unique parking shift, rebuilds the
//! partition from the distinct values and their multiplicities, and reads
//! the window off the value positions, ascending within each block.

use std::collections::BTreeMap;
use std::fmt;

use crate::biject::sg::{partition_from_sg_a, SgPair};
use crate::error::{Error, Result};
use crate::model::{Permutation, SequenceA};
use crate::poset::{Antichain, PosetElement, RootPoset};

/// A region of one of the `n + 1` copies of the type A Shi arrangement:
/// copy index, cone window, and ceiling antichain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegionAddressA {
    pub copy: usize,
    pub window: Permutation,
    pub antichain: Antichain,
}

impl fmt::Display for RegionAddressA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "copy={};w={};arcs={}", self.copy, self.window, self.antichain)
    }
}

impl RegionAddressA {
    pub fn new(copy: usize, window: Permutation, antichain: Antichain) -> Result<Self> {
        let addr = RegionAddressA { copy, window, antichain };
        addr.validate()?;
        Ok(addr)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.window.n();
        if self.copy < 1 || self.copy > n + 1 {
            return Err(Error::InvalidAntichain(format!(
                "copy index {} outside [1, {}]",
                self.copy,
                n + 1
            )));
        }
        let poset = RootPoset::type_a(&self.window)?;
        if !poset.is_antichain(&self.antichain) {
            return Err(Error::InvalidAntichain(format!(
                "{} is not an antichain of the poset at window {}",
                self.antichain, self.window
            )));
        }
        Ok(())
    }
}

fn shift(v: i32, copy: usize, n: usize) -> i32 {
    (v - 1 + copy as i32 - 1).rem_euclid(n as i32 + 1) + 1
}

fn unshift(v: i32, copy: usize, n: usize) -> i32 {
    (v - 1 - (copy as i32 - 1)).rem_euclid(n as i32 + 1) + 1
}

pub fn phi_a(addr: &RegionAddressA) -> Result<SequenceA> {
    addr.validate()?;
    let n = addr.window.n();
    let poset = RootPoset::type_a(&addr.window)?;
    let pi = poset.antichain_to_partition_a(&addr.antichain)?;
    let mut entries = vec![0i32; n];
    for block in pi.blocks() {
        let value = shift(block[0], addr.copy, n);
        for &p in block {
            entries[(addr.window.value(p) - 1) as usize] = value;
        }
    }
    SequenceA::new(entries)
}

pub fn phi_a_inverse(s: &SequenceA) -> Result<RegionAddressA> {
    let n = s.n();
    let mut found: Option<(usize, Vec<i32>)> = None;
    for copy in 1..=n + 1 {
        let un: Vec<i32> = s.entries().iter().map(|&a| unshift(a, copy, n)).collect();
        if SequenceA::new(un.clone())?.is_parking_function() {
            if found.is_some() {
                return Err(Error::Internal(format!("{s} has two parking shifts")));
            }
            found = Some((copy, un));
        }
    }
    let (copy, parked) =
        found.ok_or_else(|| Error::Internal(format!("{s} has no parking shift")))?;

    let mut mult: BTreeMap<i32, usize> = BTreeMap::new();
    for &a in &parked {
        *mult.entry(a).or_default() += 1;
    }
    let sg = SgPair::new(mult.keys().copied().collect(), mult.values().copied().collect())?;
    let pi = partition_from_sg_a(&sg, n)?;

    let mut word = vec![0i32; n];
    for block in pi.blocks() {
        let v = block[0];
        let labels =
            parked.iter().enumerate().filter(|&(_, &a)| a == v).map(|(k, _)| k as i32 + 1);
        for (&p, l) in block.iter().zip(labels) {
            word[(p - 1) as usize] = l;
        }
    }
    let window = Permutation::new(word)?;
    let antichain =
        Antichain::new(pi.arcs().into_iter().map(|(i, j)| PosetElement::new(i, j)).collect());
    RegionAddressA::new(copy, window, antichain)
}
