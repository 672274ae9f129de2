//! Exact-arithmetic geometry of the Coxeter and Shi arrangements of types A
//! and C: hyperplanes, regions with rational witnesses, walls, ceilings and
//! floors, and the labeling of regions by (window, antichain) pairs.

mod census;
pub mod feasible;
mod regions;

pub use census::{geometric_census, Census};
pub use feasible::{feasible_interior, Rat, Sense, StrictIneq};
pub use regions::{
    enumerate_regions, enumerate_regions_sweep, hyperplane_element, label_region,
    origin_side_elements, GeoRegion, RegionLabel,
};

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::error::{Error, Result};
use crate::poset;

/// The four arrangement families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    CoxA,
    ShiA,
    CoxC,
    ShiC,
}

impl Family {
    pub fn root_family(&self) -> poset::Family {
        match self {
            Family::CoxA | Family::ShiA => poset::Family::A,
            Family::CoxC | Family::ShiC => poset::Family::C,
        }
    }

    pub fn is_shi(&self) -> bool {
        matches!(self, Family::ShiA | Family::ShiC)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::CoxA => "cox-a",
            Family::ShiA => "shi-a",
            Family::CoxC => "cox-c",
            Family::ShiC => "shi-c",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cox-a" => Ok(Family::CoxA),
            "shi-a" => Ok(Family::ShiA),
            "cox-c" => Ok(Family::CoxC),
            "shi-c" => Ok(Family::ShiC),
            _ => Err(Error::Parse(format!(
                "unknown family `{s}` (expected cox-a, shi-a, cox-c or shi-c)"
            ))),
        }
    }
}

/// An affine hyperplane `normal · x = offset` with a primitive integer
/// normal whose first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
    pub offset: Rat,
    pub id: usize,
}

impl Hyperplane {
    fn new(normal: Vec<i64>, offset: Rat, id: usize) -> Self {
        debug_assert!(normal.iter().any(|&c| c != 0));
        debug_assert!(normal.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0));
        Hyperplane { normal, offset, id }
    }

    pub fn contains_origin(&self) -> bool {
        self.offset.is_zero()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.normal.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "x{}", k + 1)?;
            first = false;
        }
        write!(f, "={}", feasible::rat_to_string(&self.offset))
    }
}

/// A full arrangement: family tag, ambient dimension, hyperplane list.
#[derive(Debug, Clone)]
pub struct Arrangement {
    pub family: Family,
    pub n: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

/// The exact hyperplane lists. Type A uses `x_i - x_j = 0, 1` for `i < j`;
/// type C adds sums and doubled coordinates: `x_i ± x_j = 0, 1` and
/// `2x_k = 0, 1` (stored primitively as `x_k = 0, 1/2`). Central hyperplanes
/// come first, then the level-one translates in the same order.
pub fn build_arrangement(family: Family, n: usize) -> Result<Arrangement> {
    if n < 1 {
        return Err(Error::ResourceLimit("arrangements need n >= 1".into()));
    }
    let mut normals: Vec<(Vec<i64>, Rat)> = Vec::new();
    let e = |i: usize, j: usize, si: i64, sj: i64| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i] += si;
        v[j] += sj;
        v
    };
    match family.root_family() {
        poset::Family::A => {
            for level in [0i64, 1] {
                for i in 0..n {
                    for j in (i + 1)..n {
                        normals.push((e(i, j, 1, -1), Rat::from_integer(level.into())));
                    }
                }
            }
        }
        poset::Family::C => {
            for level in [0i64, 1] {
                for i in 0..n {
                    for j in (i + 1)..n {
                        normals.push((e(i, j, 1, -1), Rat::from_integer(level.into())));
                    }
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        normals.push((e(i, j, 1, 1), Rat::from_integer(level.into())));
                    }
                }
                for k in 0..n {
                    // 2x_k = level, stored as x_k = level/2
                    let mut v = vec![0i64; n];
                    v[k] = 1;
                    normals.push((v, Rat::from_integer(level.into()) / Rat::from_integer(2.into())));
                }
            }
        }
    }
    if !family.is_shi() {
        normals.retain(|(_, b)| b.is_zero());
    }
    let hyperplanes = normals
        .into_iter()
        .enumerate()
        .map(|(id, (normal, offset))| Hyperplane::new(normal, offset, id))
        .collect();
    Ok(Arrangement { family, n, hyperplanes })
}

impl Arrangement {
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }
}
