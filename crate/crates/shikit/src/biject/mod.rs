//! Bijections between regions, antichains, (S, g) pairs and label sequences.

mod bars;
mod phi_a;
mod phi_c;
mod sg;

pub use bars::{bar_multiset_a, bar_multiset_c, marked_permutations, n_shifted_permutations};
pub use phi_a::{phi_a, phi_a_inverse, RegionAddressA};
pub use phi_c::{phi_c, phi_c_inverse, RegionAddressC};
pub use sg::{
    partition_from_sg_a, sg_of_partition_a, sg_valid_a, CoVectors, SgPair, SgTableC,
};

use crate::error::Result;
use crate::model::{partition_from_arcs_a, PartitionA, PartitionC};
use crate::poset::{Antichain, PosetElement};

/// The (c, o) vectors of a type A antichain: block minima of its partition in
/// ascending order, with the matching block sizes.
pub fn co_of_antichain_a(a: &Antichain, n: usize) -> Result<CoVectors> {
    let pi = partition_from_arcs_a(n, &a.arcs())?;
    sg_of_partition_a(&pi)
}

/// The unique type A antichain with the given (c, o) vectors.
pub fn antichain_from_co_a(co: &CoVectors, n: usize) -> Result<Antichain> {
    let pi = partition_from_sg_a(co, n)?;
    Ok(antichain_of_partition_a(&pi))
}

/// The (c, o) vectors of a type C antichain: the (S, g) pair of its
/// partition.
pub fn co_of_antichain_c(a: &Antichain, table: &SgTableC) -> Result<CoVectors> {
    let mut arcs = std::collections::BTreeSet::new();
    for e in a.elems() {
        arcs.insert((e.i, e.j));
        let m = e.mirror();
        arcs.insert((m.i, m.j));
    }
    let pi =
        crate::model::partition_from_arcs_c(table.n(), &arcs.into_iter().collect::<Vec<_>>())?;
    table.sg_of_partition(&pi)
}

/// The unique type C antichain with the given (c, o) vectors.
pub fn antichain_from_co_c(co: &CoVectors, table: &SgTableC) -> Result<Antichain> {
    let pi = table.partition_from_sg(co)?;
    Ok(antichain_of_partition_c(&pi))
}

/// Arc diagram of a type A partition as an antichain value.
pub fn antichain_of_partition_a(pi: &PartitionA) -> Antichain {
    Antichain::new(pi.arcs().into_iter().map(|(i, j)| PosetElement::new(i, j)).collect())
}

/// Orbit representatives of the arcs of a type C partition.
pub fn antichain_of_partition_c(pi: &PartitionC) -> Antichain {
    let orbits: std::collections::BTreeSet<PosetElement> =
        pi.arcs().into_iter().map(|(i, j)| PosetElement::orbit_rep(i, j)).collect();
    Antichain::new(orbits.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::enumerate_nonnesting_a;

    #[test]
    fn co_examples() {
        let a = Antichain::new(vec![PosetElement::new(1, 3), PosetElement::new(2, 4)]);
        let co = co_of_antichain_a(&a, 4).unwrap();
        assert_eq!((co.s(), co.g()), (&[1, 2][..], &[2, 2][..]));
        assert_eq!(antichain_from_co_a(&co, 4).unwrap(), a);

        // single block: the chain antichain
        let co = CoVectors::new(vec![1], vec![4]).unwrap();
        let a = antichain_from_co_a(&co, 4).unwrap();
        assert_eq!(a.arcs(), vec![(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn co_round_trip_all_partitions() {
        for n in 1..=6 {
            for pi in enumerate_nonnesting_a(n).unwrap() {
                let a = antichain_of_partition_a(&pi);
                let co = co_of_antichain_a(&a, n).unwrap();
                assert_eq!(antichain_from_co_a(&co, n).unwrap(), a);
            }
        }
    }

    #[test]
    fn co_round_trip_c() {
        for n in 1..=4 {
            let table = SgTableC::new(n).unwrap();
            for pi in crate::model::enumerate_nonnesting_c(n).unwrap() {
                let a = antichain_of_partition_c(&pi);
                let co = co_of_antichain_c(&a, &table).unwrap();
                assert_eq!(antichain_from_co_c(&co, &table).unwrap(), a);
            }
        }
    }
}
