//! Exact integer q-polynomials and the ceiling / floor / distinct-value
//! statistics they summarize.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{self, Family as GeoFamily};
use crate::model::{
    enumerate_parking_functions, for_each_sequence_a, for_each_sequence_c, Permutation,
    SignedWindow,
};
use crate::poset::{RootPoset, Window};

/// A polynomial in `q` with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add_term(&mut self, degree: usize, count: u64) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += count;
    }

    /// Evaluation at `q = 1`: the total object count.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Exact coefficientwise division; fails on a non-divisible coefficient.
    pub fn div_exact(&self, k: u64) -> Result<QPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                if c % k == 0 {
                    Ok(c / k)
                } else {
                    Err(Error::Internal(format!("coefficient {c} not divisible by {k}")))
                }
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Ceilings,
    Floors,
    SequenceDistinct,
}

impl std::str::FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ceilings" => Ok(Statistic::Ceilings),
            "floors" => Ok(Statistic::Floors),
            "sequence-distinct" => Ok(Statistic::SequenceDistinct),
            _ => Err(Error::Parse(format!("unknown statistic `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Geometric,
    Combinatorial,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geometric" => Ok(Mode::Geometric),
            "combinatorial" => Ok(Mode::Combinatorial),
            _ => Err(Error::Parse(format!("unknown mode `{s}`"))),
        }
    }
}

const COMB_MAX_A: usize = 7;
const COMB_MAX_C: usize = 5;

/// `Σ q^stat` over the regions of a Shi arrangement (for ceilings/floors) or
/// over the matching sequence family (`q^{n - d}` over parking functions for
/// type A, `q^{n - d^C}` over all signed sequences for type C).
pub fn gf_statistic(
    family: GeoFamily,
    n: usize,
    statistic: Statistic,
    mode: Mode,
) -> Result<QPolynomial> {
    if !family.is_shi() {
        return Err(Error::ResourceLimit("statistics are defined for Shi arrangements".into()));
    }
    match statistic {
        Statistic::SequenceDistinct => sequence_distinct_poly(family, n),
        Statistic::Ceilings | Statistic::Floors => match mode {
            Mode::Geometric => {
                let arr = geometry::build_arrangement(family, n)?;
                let regions = geometry::enumerate_regions(&arr)?;
                let mut poly = QPolynomial::zero();
                for r in &regions {
                    let deg = match statistic {
                        Statistic::Ceilings => r.ceilings.len(),
                        _ => r.floors.len(),
                    };
                    poly.add_term(deg, 1);
                }
                Ok(poly)
            }
            Mode::Combinatorial => combinatorial_poly(family, n, statistic),
        },
    }
}

fn combinatorial_poly(family: GeoFamily, n: usize, statistic: Statistic) -> Result<QPolynomial> {
    let windows: Vec<Window> = match family.root_family() {
        crate::poset::Family::A => {
            if n > COMB_MAX_A {
                return Err(Error::ResourceLimit(format!(
                    "combinatorial statistics capped at n={COMB_MAX_A} for type A (got {n})"
                )));
            }
            Permutation::all(n).into_iter().map(Window::A).collect()
        }
        crate::poset::Family::C => {
            if n > COMB_MAX_C {
                return Err(Error::ResourceLimit(format!(
                    "combinatorial statistics capped at n={COMB_MAX_C} for type C (got {n})"
                )));
            }
            SignedWindow::all(n).into_iter().map(Window::C).collect()
        }
    };
    let mut poly = QPolynomial::zero();
    for w in windows {
        let poset = RootPoset::for_window(&w)?;
        for antichain in poset.antichains() {
            let deg = match statistic {
                Statistic::Ceilings => antichain.len(),
                _ => poset.floors_of(&antichain)?.len(),
            };
            poly.add_term(deg, 1);
        }
    }
    Ok(poly)
}

fn sequence_distinct_poly(family: GeoFamily, n: usize) -> Result<QPolynomial> {
    let mut poly = QPolynomial::zero();
    match family.root_family() {
        crate::poset::Family::A => {
            if n > COMB_MAX_A {
                return Err(Error::ResourceLimit(format!(
                    "sequence statistics capped at n={COMB_MAX_A} for type A (got {n})"
                )));
            }
            for s in enumerate_parking_functions(n)? {
                poly.add_term(n - s.d_stat(), 1);
            }
        }
        crate::poset::Family::C => {
            if n > COMB_MAX_C {
                return Err(Error::ResourceLimit(format!(
                    "sequence statistics capped at n={COMB_MAX_C} for type C (got {n})"
                )));
            }
            for_each_sequence_c(n, |s| poly.add_term(n - s.d_c_stat(), 1));
        }
    }
    Ok(poly)
}

/// `(1/(n+1)) Σ_{a ∈ A(n)} q^{n - d(a)}`, with the division checked exact.
pub fn scaled_full_sequence_poly_a(n: usize) -> Result<QPolynomial> {
    if n > COMB_MAX_A {
        return Err(Error::ResourceLimit(format!(
            "sequence statistics capped at n={COMB_MAX_A} for type A (got {n})"
        )));
    }
    let mut poly = QPolynomial::zero();
    for_each_sequence_a(n, |s| poly.add_term(n - s.d_stat(), 1));
    poly.div_exact(n as u64 + 1)
}
