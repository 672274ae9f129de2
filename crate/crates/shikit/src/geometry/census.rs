//! The geometric census: enumerate a Shi arrangement, label every region,
//! and certify that region ↦ (window, antichain) is a bijection onto the
//! combinatorial model.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geometry::regions::{enumerate_regions, label_region, GeoRegion, RegionLabel};
use crate::geometry::{build_arrangement, Arrangement, Family};
use crate::model::{Permutation, SignedWindow};
use crate::poset::{RootPoset, Window};

/// Region list with labels and the summary tables read off them.
#[derive(Debug)]
pub struct Census {
    pub arrangement: Arrangement,
    pub regions: Vec<GeoRegion>,
    pub labels: Vec<RegionLabel>,
    pub per_window: BTreeMap<String, u64>,
    pub ceiling_histogram: BTreeMap<usize, u64>,
    pub floor_histogram: BTreeMap<usize, u64>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.regions.len() as u64
    }
}

/// Runs the enumeration and asserts the labeling is a bijection onto all
/// (window, antichain) pairs; the error message names the offending region.
pub fn geometric_census(family: Family, n: usize) -> Result<Census> {
    if !family.is_shi() {
        return Err(Error::Internal("census is defined for Shi arrangements".into()));
    }
    let arrangement = build_arrangement(family, n)?;
    let regions = enumerate_regions(&arrangement)?;
    let mut labels = Vec::with_capacity(regions.len());
    let mut seen: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut per_window: BTreeMap<String, u64> = BTreeMap::new();
    let mut ceiling_histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut floor_histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for (k, region) in regions.iter().enumerate() {
        let label = label_region(&arrangement, region)?;
        let key = (label.window.to_string(), label.ceilings.to_string());
        if let Some(&other) = seen.get(&key) {
            return Err(Error::Internal(format!(
                "regions {} and {} share the label ({}; {})",
                regions[other].sign_string(),
                region.sign_string(),
                key.0,
                key.1
            )));
        }
        seen.insert(key, k);
        *per_window.entry(label.window.to_string()).or_default() += 1;
        *ceiling_histogram.entry(region.ceilings.len()).or_default() += 1;
        *floor_histogram.entry(region.floors.len()).or_default() += 1;
        labels.push(label);
    }
    // surjectivity onto the combinatorial model
    let mut expected: BTreeSet<(String, String)> = BTreeSet::new();
    let windows: Vec<Window> = match family.root_family() {
        crate::poset::Family::A => Permutation::all(n).into_iter().map(Window::A).collect(),
        crate::poset::Family::C => SignedWindow::all(n).into_iter().map(Window::C).collect(),
    };
    for w in windows {
        let poset = RootPoset::for_window(&w)?;
        for antichain in poset.antichains() {
            expected.insert((w.to_string(), antichain.to_string()));
        }
    }
    let got: BTreeSet<(String, String)> = seen.keys().cloned().collect();
    if got != expected {
        let missing: Vec<_> = expected.difference(&got).take(3).collect();
        let extra: Vec<_> = got.difference(&expected).take(3).collect();
        return Err(Error::Internal(format!(
            "label table is not onto the combinatorial model; missing {missing:?}, extra {extra:?}"
        )));
    }
    Ok(Census { arrangement, regions, labels, per_window, ceiling_histogram, floor_histogram })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_shi_a3() {
        let census = geometric_census(Family::ShiA, 3).unwrap();
        assert_eq!(census.total(), 16);
        let counts: Vec<u64> = census.per_window.values().copied().collect();
        // windows in lexicographic order 123, 132, 213, 231, 312, 321
        assert_eq!(counts, vec![5, 3, 3, 2, 2, 1]);
    }

    #[test]
    fn census_shi_c2() {
        let census = geometric_census(Family::ShiC, 2).unwrap();
        assert_eq!(census.total(), 25);
        assert_eq!(census.per_window["-2,-1"], 6);
        assert_eq!(census.per_window["2,1"], 1);
        assert_eq!(census.per_window["1,2"], 2);
    }

    #[test]
    fn census_histograms_shi_a2() {
        let census = geometric_census(Family::ShiA, 2).unwrap();
        assert_eq!(census.ceiling_histogram, [(0usize, 2u64), (1, 1)].into_iter().collect());
        assert_eq!(census.floor_histogram, [(0usize, 2u64), (1, 1)].into_iter().collect());
    }
}
