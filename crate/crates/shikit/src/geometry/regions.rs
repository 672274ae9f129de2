//! Region enumeration by flood fill over wall flips, wall / ceiling / floor
//! detection, and the (window, antichain) labeling of Shi regions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::feasible::{dot, feasible_interior, Rat, StrictIneq};
use crate::geometry::{Arrangement, Family};
use crate::model::{Permutation, SignedWindow};
use crate::poset::{Antichain, PosetElement, RootPoset, Window};

/// One open region: the side taken of every hyperplane, an exact interior
/// witness, and its wall / ceiling / floor hyperplane ids.
#[derive(Debug, Clone)]
pub struct GeoRegion {
    /// `true` means `normal · x > offset`.
    pub signs: Vec<bool>,
    pub witness: Vec<Rat>,
    pub walls: Vec<usize>,
    pub ceilings: Vec<usize>,
    pub floors: Vec<usize>,
}

impl GeoRegion {
    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
    }
}

/// A Shi region named combinatorially: cone window plus ceiling antichain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegionLabel {
    pub window: Window,
    pub ceilings: Antichain,
}

fn region_constraints(arr: &Arrangement, signs: &[bool]) -> Vec<StrictIneq> {
    arr.hyperplanes
        .iter()
        .zip(signs)
        .map(|(h, &s)| {
            let coeffs = h.normal.iter().map(|&c| crate::geometry::feasible::rat_from_i64(c)).collect();
            if s {
                StrictIneq::greater(coeffs, h.offset.clone())
            } else {
                StrictIneq::less(coeffs, h.offset.clone())
            }
        })
        .collect()
}

/// Is hyperplane `h` a wall of the region with the given signs? Relax its
/// strict constraint to equality (by substitution) and ask whether the rest
/// stays feasible.
fn is_wall(arr: &Arrangement, signs: &[bool], h: usize) -> bool {
    let n = arr.n;
    let wall = &arr.hyperplanes[h];
    let pivot = wall
        .normal
        .iter()
        .rposition(|&c| c != 0)
        .expect("nonzero normal");
    let pc = crate::geometry::feasible::rat_from_i64(wall.normal[pivot]);
    let mut reduced = Vec::new();
    for (k, other) in arr.hyperplanes.iter().enumerate() {
        if k == h {
            continue;
        }
        // substitute x_pivot = (offset - Σ_{m≠pivot} a_m x_m) / a_pivot
        let oc = crate::geometry::feasible::rat_from_i64(other.normal[pivot]);
        let factor = oc / &pc;
        let mut coeffs = Vec::with_capacity(n - 1);
        for m in 0..n {
            if m == pivot {
                continue;
            }
            let om = crate::geometry::feasible::rat_from_i64(other.normal[m]);
            let wm = crate::geometry::feasible::rat_from_i64(wall.normal[m]);
            coeffs.push(om - &factor * wm);
        }
        let rhs = other.offset.clone() - &factor * &wall.offset;
        reduced.push(if signs[k] {
            StrictIneq::greater(coeffs, rhs)
        } else {
            StrictIneq::less(coeffs, rhs)
        });
    }
    feasible_interior(n - 1, &reduced).is_some()
}

fn classify_region(arr: &Arrangement, signs: Vec<bool>, witness: Vec<Rat>) -> GeoRegion {
    let mut walls = Vec::new();
    let mut ceilings = Vec::new();
    let mut floors = Vec::new();
    for (k, h) in arr.hyperplanes.iter().enumerate() {
        if !is_wall(arr, &signs, k) {
            continue;
        }
        walls.push(k);
        if h.contains_origin() {
            continue;
        }
        // level-one offsets are positive, so the origin side is `<`
        if signs[k] {
            floors.push(k);
        } else {
            ceilings.push(k);
        }
    }
    GeoRegion { signs, witness, walls, ceilings, floors }
}

fn sign_vector(arr: &Arrangement, point: &[Rat]) -> Result<Vec<bool>> {
    arr.hyperplanes
        .iter()
        .map(|h| {
            let v = dot(&h.normal, point);
            if v == h.offset {
                return Err(Error::Internal(format!("point lies on {h}")));
            }
            Ok(v > h.offset)
        })
        .collect()
}

/// A generic start point: coordinates `3^-1, 3^-2, ...` miss every
/// hyperplane of all four families.
fn generic_point(n: usize) -> Vec<Rat> {
    (1..=n)
        .map(|k| Rat::new(1.into(), num::BigInt::from(3u32).pow(k as u32)))
        .collect()
}

fn enumeration_guard(family: Family, n: usize) -> Result<()> {
    let max = match family {
        Family::ShiA => 4,
        Family::CoxA => 5,
        Family::ShiC => 3,
        Family::CoxC => 4,
    };
    if n > max {
        return Err(Error::ResourceLimit(format!(
            "geometric enumeration for {family} capped at n={max} (got {n})"
        )));
    }
    Ok(())
}

/// Every region, discovered by breadth-first search over wall flips from a
/// generic start region, returned sorted by sign vector. Witnesses are
/// re-checked against their sign vectors before returning.
pub fn enumerate_regions(arr: &Arrangement) -> Result<Vec<GeoRegion>> {
    enumeration_guard(arr.family, arr.n)?;
    let start_point = generic_point(arr.n);
    let start_signs = sign_vector(arr, &start_point)?;
    let mut visited: BTreeMap<Vec<bool>, GeoRegion> = BTreeMap::new();
    let mut queue = VecDeque::new();
    visited.insert(start_signs.clone(), classify_region(arr, start_signs.clone(), start_point));
    queue.push_back(start_signs);
    while let Some(signs) = queue.pop_front() {
        let walls = visited[&signs].walls.clone();
        for wall in walls {
            let mut flipped = signs.clone();
            flipped[wall] = !flipped[wall];
            if visited.contains_key(&flipped) {
                continue;
            }
            let witness = feasible_interior(arr.n, &region_constraints(arr, &flipped))
                .ok_or_else(|| {
                    Error::Internal(format!("wall flip on {} left an empty region", wall))
                })?;
            visited.insert(flipped.clone(), classify_region(arr, flipped.clone(), witness));
            queue.push_back(flipped);
        }
    }
    let regions: Vec<GeoRegion> = visited.into_values().collect();
    for r in &regions {
        let check = sign_vector(arr, &r.witness)?;
        if check != r.signs {
            return Err(Error::Internal(format!(
                "witness of region {} fails its sign vector",
                r.sign_string()
            )));
        }
    }
    Ok(regions)
}

/// Slow cross-check: try every sign vector. Exponential in the number of
/// hyperplanes; only for very small instances.
pub fn enumerate_regions_sweep(arr: &Arrangement) -> Result<Vec<GeoRegion>> {
    let m = arr.hyperplanes.len();
    if m > 10 {
        return Err(Error::ResourceLimit(format!("sign sweep capped at 10 hyperplanes (got {m})")));
    }
    let mut out = Vec::new();
    for mask in 0..(1u32 << m) {
        let signs: Vec<bool> = (0..m).map(|k| mask & (1 << k) != 0).collect();
        if let Some(witness) = feasible_interior(arr.n, &region_constraints(arr, &signs)) {
            out.push(classify_region(arr, signs, witness));
        }
    }
    out.sort_by(|a, b| a.signs.cmp(&b.signs));
    Ok(out)
}

/// Read the cone window off the witness and map each ceiling hyperplane to
/// its poset element.
pub fn label_region(arr: &Arrangement, region: &GeoRegion) -> Result<RegionLabel> {
    if !arr.family.is_shi() {
        return Err(Error::Internal("labels are defined for Shi arrangements".into()));
    }
    match arr.family.root_family() {
        crate::poset::Family::A => label_region_a(arr, region),
        crate::poset::Family::C => label_region_c(arr, region),
    }
}

fn label_region_a(arr: &Arrangement, region: &GeoRegion) -> Result<RegionLabel> {
    let n = arr.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| region.witness[b].cmp(&region.witness[a]));
    let window = Window::A(Permutation::new(order.iter().map(|&k| k as i32 + 1).collect())?);
    label_with_window(arr, region, window)
}

fn label_region_c(arr: &Arrangement, region: &GeoRegion) -> Result<RegionLabel> {
    let n = arr.n;
    // sort the 2n signed values ±x_i descending; the lower half is the window
    let mut signed: Vec<(Rat, i32)> = Vec::with_capacity(2 * n);
    for k in 0..n {
        signed.push((region.witness[k].clone(), k as i32 + 1));
        signed.push((-region.witness[k].clone(), -(k as i32 + 1)));
    }
    signed.sort_by(|a, b| b.0.cmp(&a.0));
    let window =
        Window::C(SignedWindow::new(signed[n..].iter().map(|(_, idx)| *idx).collect())?);
    label_with_window(arr, region, window)
}

fn label_with_window(arr: &Arrangement, region: &GeoRegion, window: Window) -> Result<RegionLabel> {
    let poset = RootPoset::for_window(&window)?;
    let mut elems = Vec::new();
    for &c in &region.ceilings {
        let h = &arr.hyperplanes[c];
        match hyperplane_element(&window, &poset, h)? {
            Some(e) => elems.push(e),
            None => {
                return Err(Error::Internal(format!("ceiling {h} missing from the poset")));
            }
        }
    }
    let ceilings = Antichain::new(elems);
    if !poset.is_antichain(&ceilings) {
        return Err(Error::Internal(format!("ceilings {ceilings} are not an antichain")));
    }
    Ok(RegionLabel { window, ceilings })
}

/// Express a type C hyperplane as `x_u - x_v = 1` over signed indices:
/// differences give `(i, j)`, sums `(i, -j)`, doubled coordinates `(k, -k)`.
fn signed_value_pair(h: &crate::geometry::Hyperplane) -> Result<(i32, i32)> {
    let nz: Vec<(usize, i64)> =
        h.normal.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect();
    match nz.as_slice() {
        [(k, 1)] => Ok((*k as i32 + 1, -(*k as i32 + 1))),
        [(i, 1), (j, -1)] => Ok((*i as i32 + 1, *j as i32 + 1)),
        [(i, 1), (j, 1)] => Ok((*i as i32 + 1, -(*j as i32 + 1))),
        _ => Err(Error::Internal(format!("unrecognized normal on {h}"))),
    }
}

/// The poset element a level-one hyperplane corresponds to inside a given
/// cone, or `None` when the hyperplane misses the cone.
pub fn hyperplane_element(
    window: &Window,
    poset: &RootPoset,
    h: &crate::geometry::Hyperplane,
) -> Result<Option<PosetElement>> {
    let elem = match window {
        Window::A(w) => {
            let a = h.normal.iter().position(|&v| v == 1).unwrap() as i32 + 1;
            let b = h.normal.iter().position(|&v| v == -1).unwrap() as i32 + 1;
            let (i, j) = (w.position_of(a), w.position_of(b));
            if i < j {
                PosetElement::new(i, j)
            } else {
                return Ok(None);
            }
        }
        Window::C(w) => {
            let (u, v) = signed_value_pair(h)?;
            let (pi, pj) = (w.position_of(u), w.position_of(v));
            let pair = if pi < pj { (pi, pj) } else { (-pj, -pi) };
            PosetElement::orbit_rep(pair.0, pair.1)
        }
    };
    Ok(poset.index_of(&elem).map(|_| elem))
}

/// Level-one hyperplanes the region sees on the origin side, as poset
/// elements of its own cone. Used to check the down-set picture.
pub fn origin_side_elements(
    arr: &Arrangement,
    region: &GeoRegion,
    label: &RegionLabel,
) -> Result<BTreeSet<PosetElement>> {
    let poset = RootPoset::for_window(&label.window)?;
    let mut out = BTreeSet::new();
    for (k, h) in arr.hyperplanes.iter().enumerate() {
        if h.contains_origin() {
            continue;
        }
        match hyperplane_element(&label.window, &poset, h)? {
            Some(e) => {
                if !region.signs[k] {
                    out.insert(e);
                }
            }
            // a level-one hyperplane avoiding the cone must lie on the origin side
            None => {
                if region.signs[k] {
                    return Err(Error::Internal(format!(
                        "{h} avoids the cone of {} yet sits on the far side",
                        label.window
                    )));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_arrangement;
    use crate::geometry::feasible::rat_from_i64;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(p.into(), q.into())
    }

    #[test]
    fn region_counts_small() {
        let counts = [
            (Family::ShiA, 2, 3u64),
            (Family::ShiA, 3, 16),
            (Family::CoxA, 3, 6),
            (Family::ShiC, 1, 3),
            (Family::ShiC, 2, 25),
            (Family::CoxC, 2, 8),
        ];
        for (family, n, want) in counts {
            let arr = build_arrangement(family, n).unwrap();
            let regions = enumerate_regions(&arr).unwrap();
            assert_eq!(regions.len() as u64, want, "{family} n={n}");
        }
    }

    #[test]
    fn sweep_agrees_with_flood_fill() {
        for (family, n) in [(Family::ShiA, 2), (Family::ShiA, 3), (Family::ShiC, 2)] {
            let arr = build_arrangement(family, n).unwrap();
            let bfs: Vec<String> =
                enumerate_regions(&arr).unwrap().iter().map(|r| r.sign_string()).collect();
            let sweep: Vec<String> =
                enumerate_regions_sweep(&arr).unwrap().iter().map(|r| r.sign_string()).collect();
            assert_eq!(bfs, sweep, "{family} n={n}");
        }
    }

    #[test]
    fn label_of_dominant_far_region_a3() {
        let arr = build_arrangement(Family::ShiA, 3).unwrap();
        let witness = vec![rat(3, 4), rat(1, 2), rat(1, 4)];
        let signs = sign_vector(&arr, &witness).unwrap();
        let region = classify_region(&arr, signs, witness);
        let label = label_region(&arr, &region).unwrap();
        assert_eq!(label.window.to_string(), "1,2,3");
        assert_eq!(label.ceilings.arcs(), vec![(1, 3)]);
        // only the wide level-one hyperplane is a wall among the translates
        assert_eq!(region.floors.len(), 0);
    }

    #[test]
    fn labels_of_shi_c1() {
        let arr = build_arrangement(Family::ShiC, 1).unwrap();
        let witness = vec![rat(1, 4)];
        let signs = sign_vector(&arr, &witness).unwrap();
        let region = classify_region(&arr, signs, witness);
        let label = label_region(&arr, &region).unwrap();
        assert_eq!(label.window.to_string(), "-1");
        assert_eq!(label.ceilings.arcs(), vec![(-1, 1)]);

        let witness = vec![rat_from_i64(-1)];
        let signs = sign_vector(&arr, &witness).unwrap();
        let region = classify_region(&arr, signs, witness);
        let label = label_region(&arr, &region).unwrap();
        assert_eq!(label.window.to_string(), "1");
        assert!(label.ceilings.is_empty());
    }

    #[test]
    fn ceiling_histogram_shi_a2() {
        let arr = build_arrangement(Family::ShiA, 2).unwrap();
        let mut hist = std::collections::BTreeMap::new();
        for r in enumerate_regions(&arr).unwrap() {
            *hist.entry(r.ceilings.len()).or_insert(0u64) += 1;
        }
        assert_eq!(hist, [(0usize, 2u64), (1, 1)].into_iter().collect());
    }

    #[test]
    fn generic_point_misses_hyperplanes() {
        for (family, n) in [(Family::ShiA, 4), (Family::ShiC, 3)] {
            let arr = build_arrangement(family, n).unwrap();
            assert!(sign_vector(&arr, &generic_point(n)).is_ok());
        }
    }
}
