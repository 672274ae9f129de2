//! Exact feasibility of systems of strict rational inequalities by
//! Fourier–Motzkin elimination, with a rational interior witness on success.
//!
//! Variables are eliminated from the highest index down; each level keeps the
//! system over the remaining prefix of variables. Back substitution walks the
//! levels upward, choosing the midpoint of the open interval each variable is
//! confined to (or stepping one unit inside an unbounded end). No floating
//! point anywhere.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Rat = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Less,
    Greater,
}

/// One strict inequality `coeffs · x  <  rhs` (or `>`).
#[derive(Debug, Clone)]
pub struct StrictIneq {
    pub coeffs: Vec<Rat>,
    pub sense: Sense,
    pub rhs: Rat,
}

impl StrictIneq {
    pub fn less(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        StrictIneq { coeffs, sense: Sense::Less, rhs }
    }

    pub fn greater(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        StrictIneq { coeffs, sense: Sense::Greater, rhs }
    }
}

/// Integer-normalized row `c · x < d`.
#[derive(Debug, Clone)]
struct Row {
    c: Vec<BigInt>,
    d: Rat,
}

fn int_rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Scale to integer coefficients with positive gcd one. Returns `None` for an
/// all-zero coefficient vector (the caller decides feasibility from `d`).
fn normalize(c: Vec<BigInt>, d: Rat) -> Option<Row> {
    let mut g = BigInt::zero();
    for x in &c {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    let c = c.into_iter().map(|x| x / &g).collect();
    let d = d / Rat::from_integer(g);
    Some(Row { c, d })
}

fn dedupe(rows: Vec<Row>) -> Vec<Row> {
    let mut best: BTreeMap<Vec<BigInt>, Rat> = BTreeMap::new();
    for row in rows {
        match best.get_mut(&row.c) {
            Some(d) if *d <= row.d => {}
            Some(d) => *d = row.d,
            None => {
                best.insert(row.c, row.d);
            }
        }
    }
    best.into_iter().map(|(c, d)| Row { c, d }).collect()
}

/// An exact rational interior point of the open polyhedron, or `None` when
/// the system is infeasible. The empty system yields the origin.
pub fn feasible_interior(nvars: usize, constraints: &[StrictIneq]) -> Option<Vec<Rat>> {
    let mut rows = Vec::new();
    for con in constraints {
        assert_eq!(con.coeffs.len(), nvars, "constraint arity mismatch");
        let (coeffs, rhs): (Vec<Rat>, Rat) = match con.sense {
            Sense::Less => (con.coeffs.clone(), con.rhs.clone()),
            Sense::Greater => (con.coeffs.iter().map(|c| -c).collect(), -con.rhs.clone()),
        };
        // clear denominators
        let mut lcm = BigInt::one();
        for c in coeffs.iter().chain(std::iter::once(&rhs)) {
            lcm = lcm.lcm(c.denom());
        }
        let scale = Rat::from_integer(lcm);
        let c: Vec<BigInt> = coeffs.iter().map(|x| (x * &scale).to_integer()).collect();
        let d = rhs * scale;
        match normalize(c, d.clone()) {
            Some(row) => rows.push(row),
            // all-zero coefficients: 0 < d must hold outright
            None => {
                if d <= Rat::zero() {
                    return None;
                }
            }
        }
    }
    let mut levels: Vec<Vec<Row>> = Vec::with_capacity(nvars + 1);
    levels.push(dedupe(rows));
    for var in (0..nvars).rev() {
        let cur = levels.last().unwrap();
        let mut next: Vec<Row> = Vec::new();
        let mut lowers: Vec<&Row> = Vec::new();
        let mut uppers: Vec<&Row> = Vec::new();
        for row in cur {
            match row.c[var].sign() {
                num::bigint::Sign::NoSign => next.push(row.clone()),
                num::bigint::Sign::Minus => lowers.push(row),
                num::bigint::Sign::Plus => uppers.push(row),
            }
        }
        for lo in &lowers {
            for up in &uppers {
                let a = &lo.c[var]; // negative
                let b = &up.c[var]; // positive
                let c: Vec<BigInt> = lo
                    .c
                    .iter()
                    .zip(&up.c)
                    .map(|(lc, uc)| b * lc - a * uc)
                    .collect();
                let d = Rat::from_integer(b.clone()) * &lo.d - Rat::from_integer(a.clone()) * &up.d;
                match normalize(c, d.clone()) {
                    Some(row) => next.push(row),
                    None => {
                        if d <= Rat::zero() {
                            return None;
                        }
                    }
                }
            }
        }
        levels.push(dedupe(next));
    }
    // levels[k] is the system after eliminating k variables; the last one has
    // no variables left and was checked on the fly.
    let mut x = vec![Rat::zero(); nvars];
    for var in 0..nvars {
        let system = &levels[nvars - 1 - var];
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for row in system {
            if row.c[var].is_zero() {
                continue;
            }
            let mut rest = Rat::zero();
            for (k, c) in row.c.iter().enumerate().take(var) {
                if !c.is_zero() {
                    rest += Rat::from_integer(c.clone()) * &x[k];
                }
            }
            let bound = (row.d.clone() - rest) / Rat::from_integer(row.c[var].clone());
            if row.c[var].is_positive() {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            } else {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            }
        }
        x[var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                assert!(l < u, "elimination left an empty interval");
                (l + u) / int_rat(2)
            }
            (Some(l), None) => l + Rat::one(),
            (None, Some(u)) => u - Rat::one(),
            (None, None) => Rat::zero(),
        };
    }
    Some(x)
}

/// Evaluate `coeffs · x` exactly.
pub fn dot(coeffs: &[i64], x: &[Rat]) -> Rat {
    coeffs
        .iter()
        .zip(x)
        .filter(|(c, _)| **c != 0)
        .map(|(&c, v)| int_rat(c) * v)
        .fold(Rat::zero(), |acc, t| acc + t)
}

pub fn rat_from_i64(v: i64) -> Rat {
    int_rat(v)
}

/// Render as `p/q` (or plain `p` for integers).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rat {
        rat_from_i64(v)
    }

    fn check(nvars: usize, cons: &[StrictIneq]) -> Option<Vec<Rat>> {
        let x = feasible_interior(nvars, cons)?;
        for con in cons {
            let lhs: Rat = con
                .coeffs
                .iter()
                .zip(&x)
                .map(|(c, v)| c.clone() * v)
                .fold(Rat::zero(), |a, t| a + t);
            match con.sense {
                Sense::Less => assert!(lhs < con.rhs, "witness violates {con:?}"),
                Sense::Greater => assert!(lhs > con.rhs, "witness violates {con:?}"),
            }
        }
        Some(x)
    }

    #[test]
    fn band_in_two_vars() {
        // 0 < x1 - x2 < 1
        let cons = [
            StrictIneq::greater(vec![r(1), r(-1)], r(0)),
            StrictIneq::less(vec![r(1), r(-1)], r(1)),
        ];
        assert!(check(2, &cons).is_some());
    }

    #[test]
    fn contradiction() {
        let cons = [
            StrictIneq::greater(vec![r(1)], r(1)),
            StrictIneq::less(vec![r(1)], r(0)),
        ];
        assert!(feasible_interior(1, &cons).is_none());
    }

    #[test]
    fn empty_system_gives_origin() {
        assert_eq!(feasible_interior(3, &[]), Some(vec![r(0), r(0), r(0)]));
    }

    #[test]
    fn degenerate_zero_rows() {
        // 0·x < 1 is vacuous, 0·x < 0 is false
        let ok = [StrictIneq::less(vec![r(0)], r(1))];
        assert!(feasible_interior(1, &ok).is_some());
        let bad = [StrictIneq::less(vec![r(0)], r(0))];
        assert!(feasible_interior(1, &bad).is_none());
    }

    #[test]
    fn needs_elimination_chain() {
        // x1 < x2 < x3 < x1 + 1/2, x1 > 7
        let cons = [
            StrictIneq::less(vec![r(1), r(-1), r(0)], r(0)),
            StrictIneq::less(vec![r(0), r(1), r(-1)], r(0)),
            StrictIneq::less(vec![r(-1), r(0), r(1)], Rat::new(BigInt::from(1), BigInt::from(2))),
            StrictIneq::greater(vec![r(1), r(0), r(0)], r(7)),
        ];
        assert!(check(3, &cons).is_some());
    }

    #[test]
    fn rational_strings() {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rat_to_string(&half), "1/2");
        assert_eq!(rat_from_string("1/2"), Some(half));
        assert_eq!(rat_from_string("-3"), Some(r(-3)));
        assert_eq!(rat_from_string("1/0"), None);
    }
}
