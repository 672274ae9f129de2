//! Property-based invariants over randomly drawn inputs.

use proptest::prelude::*;

use shikit::biject::{
    partition_from_sg_a, phi_a, phi_a_inverse, phi_c, phi_c_inverse, sg_of_partition_a, SgTableC,
};
use shikit::model::{PartitionA, PartitionC, SequenceA, SequenceC};
use shikit::poset::RootPoset;

fn sequence_a(n: usize) -> impl Strategy<Value = SequenceA> {
    prop::collection::vec(1..=(n as i32 + 1), n).prop_map(|v| SequenceA::new(v).unwrap())
}

fn sequence_c(n: usize) -> impl Strategy<Value = SequenceC> {
    prop::collection::vec(-(n as i32)..=(n as i32), n).prop_map(|v| SequenceC::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_a_round_trips_any_sequence((_n, raw) in (1usize..=6).prop_flat_map(|n| (Just(n), sequence_a(n)))) {
        let addr = phi_a_inverse(&raw).unwrap();
        let back = phi_a(&addr).unwrap();
        prop_assert_eq!(&back, &raw);
        // the address is internally consistent
        prop_assert_eq!(raw.n() - raw.d_stat(), addr.antichain.len());
    }

    #[test]
    fn phi_c_round_trips_any_sequence((n, raw) in (1usize..=3).prop_flat_map(|n| (Just(n), sequence_c(n)))) {
        let table = SgTableC::new(n).unwrap();
        let addr = phi_c_inverse(&raw, &table).unwrap();
        let back = phi_c(&addr, &table).unwrap();
        prop_assert_eq!(&back, &raw);
        prop_assert_eq!(raw.n() - raw.d_c_stat(), addr.antichain.len());
    }

    #[test]
    fn down_set_of_maxima_round_trips(seed in 0u64..5000, n in 1usize..=5) {
        // pick a window and an antichain pseudo-randomly but reproducibly
        let windows = shikit::model::Permutation::all(n);
        let w = &windows[(seed as usize) % windows.len()];
        let poset = RootPoset::type_a(w).unwrap();
        let antichains = poset.antichains();
        let a = &antichains[(seed as usize / windows.len()) % antichains.len()];
        let down = poset.down_set(a).unwrap();
        prop_assert_eq!(&poset.max_elements(&down), a);
        // ceilings and floors stay disjoint
        let floors = poset.floors_of(a).unwrap();
        for e in floors.elems() {
            prop_assert!(!a.elems().contains(e));
        }
    }

    #[test]
    fn sg_round_trip_from_random_partitions(seed in 0u64..5000, n in 1usize..=7) {
        let all = shikit::model::enumerate_nonnesting_a(n).unwrap();
        let pi = &all[(seed as usize) % all.len()];
        let sg = sg_of_partition_a(pi).unwrap();
        prop_assert_eq!(&partition_from_sg_a(&sg, n).unwrap(), pi);
    }

    #[test]
    fn partition_text_round_trips(seed in 0u64..5000, n in 1usize..=4) {
        let all = shikit::model::enumerate_nonnesting_c(n).unwrap();
        let pi = &all[(seed as usize) % all.len()];
        let parsed: PartitionC = pi.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, pi);
        let a = shikit::model::enumerate_nonnesting_a(n).unwrap();
        let pa = &a[(seed as usize) % a.len()];
        let parsed: PartitionA = pa.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, pa);
    }
}
