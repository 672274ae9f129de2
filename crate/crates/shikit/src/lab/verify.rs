//! Verification suites: every counting statement, bijection and statistic
//! identity checked by independent computation, with counterexamples carried
//! in the report on failure.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::biject::{
    phi_a, phi_a_inverse, phi_c, phi_c_inverse, sg_of_partition_a, RegionAddressA, RegionAddressC,
    SgTableC,
};
use crate::error::{Error, Result};
use crate::geometry::{
    self, enumerate_regions, enumerate_regions_sweep, geometric_census, hyperplane_element,
    origin_side_elements, Family as GeoFamily,
};
use crate::lab::counts::{
    census_class_a, census_class_c, census_type_a, census_type_c, class_size_a, class_size_c,
    class_size_co_a, class_size_co_c, identity_term_a, identity_term_c, kreweras_count,
    type_count_c,
};
use crate::lab::qpoly::{gf_statistic, scaled_full_sequence_poly_a, Mode, QPolynomial, Statistic};
use crate::lab::skmk::{class_tables_a, class_tables_c, sk_mk_a, sk_mk_c};
use crate::model::{
    enumerate_nonnesting_a, enumerate_nonnesting_c, enumerate_parking_functions,
    for_each_sequence_a, for_each_sequence_c, PartitionType, Permutation, SignedWindow,
};
use crate::poset::{antichain_count_total, Family, RootPoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Theorem2,
    Theorem4,
    Bijectivity,
    Classes,
    Identities,
    GeometryCrossCheck,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "counts" => Ok(Suite::Counts),
            "theorem2" => Ok(Suite::Theorem2),
            "theorem4" => Ok(Suite::Theorem4),
            "bijectivity" => Ok(Suite::Bijectivity),
            "classes" => Ok(Suite::Classes),
            "identities" => Ok(Suite::Identities),
            "geometry-cross-check" => Ok(Suite::GeometryCrossCheck),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Counts => "counts",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem4 => "theorem4",
            Suite::Bijectivity => "bijectivity",
            Suite::Classes => "classes",
            Suite::Identities => "identities",
            Suite::GeometryCrossCheck => "geometry-cross-check",
            Suite::All => "all",
        };
        write!(f, "{name}")
    }
}

/// One assertion; failures carry a reproducible witness in `detail`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (max n = {})", self.suite, self.max_n)?;
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            writeln!(f, "  [{status}] {:<38} {:<12} {}", c.name, c.params, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

type CheckResult = std::result::Result<String, String>;

struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    fn run(&mut self, name: &str, params: String, f: impl FnOnce() -> CheckResult) {
        let (pass, detail) = match f() {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.checks.push(Check { name: name.to_string(), params, pass, detail });
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

/// Run one suite with every check capped at `max_n` (each check also has its
/// own built-in ceiling). Failures are data, not errors.
pub fn verify(suite: Suite, max_n: usize) -> VerificationReport {
    let mut runner = Runner { checks: Vec::new() };
    match suite {
        Suite::Counts => counts_suite(&mut runner, max_n),
        Suite::Theorem2 => theorem2_suite(&mut runner, max_n),
        Suite::Theorem4 => theorem4_suite(&mut runner, max_n),
        Suite::Bijectivity => bijectivity_suite(&mut runner, max_n),
        Suite::Classes => classes_suite(&mut runner, max_n),
        Suite::Identities => identities_suite(&mut runner, max_n),
        Suite::GeometryCrossCheck => geometry_suite(&mut runner, max_n),
        Suite::All => {
            counts_suite(&mut runner, max_n);
            theorem2_suite(&mut runner, max_n);
            theorem4_suite(&mut runner, max_n);
            bijectivity_suite(&mut runner, max_n);
            classes_suite(&mut runner, max_n);
            identities_suite(&mut runner, max_n);
            geometry_suite(&mut runner, max_n);
        }
    }
    VerificationReport { suite: suite.to_string(), max_n, checks: runner.checks }
}

fn shi_a_count(n: usize) -> u64 {
    (n as u64 + 1).pow(n as u32 - 1)
}

fn shi_c_count(n: usize) -> u64 {
    (2 * n as u64 + 1).pow(n as u32)
}

fn counts_suite(r: &mut Runner, max_n: usize) {
    for n in 1..=max_n.min(4) {
        r.run("geometric region count", format!("shi-a n={n}"), || {
            let got = enumerate_regions(&geometry::build_arrangement(GeoFamily::ShiA, n).map_err(err_str)?)
                .map_err(err_str)?
                .len() as u64;
            let want = shi_a_count(n);
            if got == want {
                Ok(format!("{got} regions"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(3) {
        r.run("geometric region count", format!("shi-c n={n}"), || {
            let got = enumerate_regions(&geometry::build_arrangement(GeoFamily::ShiC, n).map_err(err_str)?)
                .map_err(err_str)?
                .len() as u64;
            let want = shi_c_count(n);
            if got == want {
                Ok(format!("{got} regions"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("coxeter region count", format!("cox-a n={n}"), || {
            let got = enumerate_regions(&geometry::build_arrangement(GeoFamily::CoxA, n).map_err(err_str)?)
                .map_err(err_str)?
                .len() as u64;
            let want = crate::model::factorial(n as u64);
            if got == want {
                Ok(format!("{got} regions"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(3) {
        r.run("coxeter region count", format!("cox-c n={n}"), || {
            let got = enumerate_regions(&geometry::build_arrangement(GeoFamily::CoxC, n).map_err(err_str)?)
                .map_err(err_str)?
                .len() as u64;
            let want = (1u64 << n) * crate::model::factorial(n as u64);
            if got == want {
                Ok(format!("{got} regions"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(7) {
        r.run("antichain total", format!("type A n={n}"), || {
            let got = antichain_count_total(Family::A, n).map_err(err_str)?;
            let want = shi_a_count(n);
            if got == want {
                Ok(format!("sum {got}"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(5) {
        r.run("antichain total", format!("type C n={n}"), || {
            let got = antichain_count_total(Family::C, n).map_err(err_str)?;
            let want = shi_c_count(n);
            if got == want {
                Ok(format!("sum {got}"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(7) {
        r.run("parking function census", format!("n={n}"), || {
            let got = enumerate_parking_functions(n).map_err(err_str)?.len() as u64;
            let want = shi_a_count(n);
            if got == want {
                Ok(format!("{got} parking functions"))
            } else {
                Err(format!("got {got}, want {want}"))
            }
        });
    }
}

fn poly_chain_check(polys: &[(&str, QPolynomial)]) -> CheckResult {
    for pair in polys.windows(2) {
        if pair[0].1 != pair[1].1 {
            return Err(format!(
                "{} = {} but {} = {}",
                pair[0].0, pair[0].1, pair[1].0, pair[1].1
            ));
        }
    }
    Ok(format!("all equal to {}", polys[0].1))
}

fn theorem2_suite(r: &mut Runner, max_n: usize) {
    for n in 1..=max_n.min(4) {
        r.run("ceiling/floor statistic identity", format!("shi-a n={n} geometric"), || {
            let c = gf_statistic(GeoFamily::ShiA, n, Statistic::Ceilings, Mode::Geometric)
                .map_err(err_str)?;
            let f = gf_statistic(GeoFamily::ShiA, n, Statistic::Floors, Mode::Geometric)
                .map_err(err_str)?;
            let scaled = scaled_full_sequence_poly_a(n).map_err(err_str)?;
            let pf = gf_statistic(GeoFamily::ShiA, n, Statistic::SequenceDistinct, Mode::Combinatorial)
                .map_err(err_str)?;
            poly_chain_check(&[
                ("ceilings", c),
                ("floors", f),
                ("sequences/(n+1)", scaled),
                ("parking", pf),
            ])
        });
    }
    for n in 1..=max_n.min(6) {
        r.run("ceiling/floor statistic identity", format!("shi-a n={n} combinatorial"), || {
            let c = gf_statistic(GeoFamily::ShiA, n, Statistic::Ceilings, Mode::Combinatorial)
                .map_err(err_str)?;
            let f = gf_statistic(GeoFamily::ShiA, n, Statistic::Floors, Mode::Combinatorial)
                .map_err(err_str)?;
            let scaled = scaled_full_sequence_poly_a(n).map_err(err_str)?;
            let pf = gf_statistic(GeoFamily::ShiA, n, Statistic::SequenceDistinct, Mode::Combinatorial)
                .map_err(err_str)?;
            poly_chain_check(&[
                ("ceilings", c),
                ("floors", f),
                ("sequences/(n+1)", scaled),
                ("parking", pf),
            ])
        });
    }
    if max_n >= 2 {
        r.run("spot value", "shi-a n=2 gives 2 + q".into(), || {
            let got = gf_statistic(GeoFamily::ShiA, 2, Statistic::Ceilings, Mode::Geometric)
                .map_err(err_str)?;
            let want = QPolynomial::from_coeffs(vec![2, 1]);
            if got == want {
                Ok(got.to_string())
            } else {
                Err(format!("got {got}"))
            }
        });
    }
}

fn theorem4_suite(r: &mut Runner, max_n: usize) {
    for n in 1..=max_n.min(3) {
        r.run("ceiling/floor statistic identity", format!("shi-c n={n} geometric"), || {
            let c = gf_statistic(GeoFamily::ShiC, n, Statistic::Ceilings, Mode::Geometric)
                .map_err(err_str)?;
            let f = gf_statistic(GeoFamily::ShiC, n, Statistic::Floors, Mode::Geometric)
                .map_err(err_str)?;
            let seq = gf_statistic(GeoFamily::ShiC, n, Statistic::SequenceDistinct, Mode::Combinatorial)
                .map_err(err_str)?;
            poly_chain_check(&[("ceilings", c), ("floors", f), ("sequences", seq)])
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("ceiling/floor statistic identity", format!("shi-c n={n} combinatorial"), || {
            let c = gf_statistic(GeoFamily::ShiC, n, Statistic::Ceilings, Mode::Combinatorial)
                .map_err(err_str)?;
            let f = gf_statistic(GeoFamily::ShiC, n, Statistic::Floors, Mode::Combinatorial)
                .map_err(err_str)?;
            let seq = gf_statistic(GeoFamily::ShiC, n, Statistic::SequenceDistinct, Mode::Combinatorial)
                .map_err(err_str)?;
            poly_chain_check(&[("ceilings", c), ("floors", f), ("sequences", seq)])
        });
    }
    r.run("spot value", "shi-c n=1 gives 2 + q".into(), || {
        let got = gf_statistic(GeoFamily::ShiC, 1, Statistic::Ceilings, Mode::Geometric)
            .map_err(err_str)?;
        let want = QPolynomial::from_coeffs(vec![2, 1]);
        if got == want {
            Ok(got.to_string())
        } else {
            Err(format!("got {got}"))
        }
    });
}

pub(crate) fn all_addresses_a(n: usize) -> Result<Vec<RegionAddressA>> {
    let mut out = Vec::new();
    for copy in 1..=n + 1 {
        for w in Permutation::all(n) {
            let poset = RootPoset::type_a(&w)?;
            for antichain in poset.antichains() {
                out.push(RegionAddressA { copy, window: w.clone(), antichain });
            }
        }
    }
    Ok(out)
}

pub(crate) fn all_addresses_c(n: usize) -> Result<Vec<RegionAddressC>> {
    let mut out = Vec::new();
    for w in SignedWindow::all(n) {
        let poset = RootPoset::type_c(&w)?;
        for antichain in poset.antichains() {
            out.push(RegionAddressC { window: w.clone(), antichain });
        }
    }
    Ok(out)
}

fn bijectivity_suite(r: &mut Runner, max_n: usize) {
    for n in 1..=max_n.min(5) {
        r.run("labeling map bijective", format!("type A n={n}"), || {
            let mut images = BTreeSet::new();
            for addr in all_addresses_a(n).map_err(err_str)? {
                let s = phi_a(&addr).map_err(err_str)?;
                if !images.insert(s.clone()) {
                    return Err(format!("collision at {addr} -> {s}"));
                }
                let back = phi_a_inverse(&s).map_err(err_str)?;
                if back != addr {
                    return Err(format!("round trip {addr} -> {s} -> {back}"));
                }
                if n - s.d_stat() != addr.antichain.len() {
                    return Err(format!("statistic transport broken at {addr}"));
                }
            }
            let want = (n as u64 + 1).pow(n as u32);
            if images.len() as u64 != want {
                return Err(format!("image size {} != {want}", images.len()));
            }
            let mut bad = None;
            for_each_sequence_a(n, |s| {
                if bad.is_none() && !images.contains(s) {
                    bad = Some(s.clone());
                }
            });
            if let Some(s) = bad {
                return Err(format!("sequence {s} not reached"));
            }
            Ok(format!("{want} addresses"))
        });
        r.run("copy one restricts to parking", format!("type A n={n}"), || {
            let mut image = BTreeSet::new();
            for addr in all_addresses_a(n).map_err(err_str)? {
                if addr.copy != 1 {
                    continue;
                }
                let s = phi_a(&addr).map_err(err_str)?;
                if !s.is_parking_function() {
                    return Err(format!("{addr} gives non-parking {s}"));
                }
                image.insert(s);
            }
            let parking: BTreeSet<_> =
                enumerate_parking_functions(n).map_err(err_str)?.into_iter().collect();
            if image == parking {
                Ok(format!("{} parking functions", parking.len()))
            } else {
                Err("copy-one image differs from the parking functions".into())
            }
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("labeling map bijective", format!("type C n={n}"), || {
            let table = SgTableC::new(n).map_err(err_str)?;
            let mut images = BTreeSet::new();
            for addr in all_addresses_c(n).map_err(err_str)? {
                let s = phi_c(&addr, &table).map_err(err_str)?;
                if !images.insert(s.clone()) {
                    return Err(format!("collision at {addr} -> {s}"));
                }
                let back = phi_c_inverse(&s, &table).map_err(err_str)?;
                if back != addr {
                    return Err(format!("round trip {addr} -> {s} -> {back}"));
                }
                if n - s.d_c_stat() != addr.antichain.len() {
                    return Err(format!("statistic transport broken at {addr}"));
                }
            }
            let want = shi_c_count(n);
            if images.len() as u64 != want {
                return Err(format!("image size {} != {want}", images.len()));
            }
            let mut bad = None;
            for_each_sequence_c(n, |s| {
                if bad.is_none() && !images.contains(s) {
                    bad = Some(s.clone());
                }
            });
            if let Some(s) = bad {
                return Err(format!("sequence {s} not reached"));
            }
            Ok(format!("{want} addresses"))
        });
    }
    for n in 1..=max_n.min(7) {
        r.run("(S,g) round trip", format!("type A n={n}"), || {
            for pi in enumerate_nonnesting_a(n).map_err(err_str)? {
                let sg = sg_of_partition_a(&pi).map_err(err_str)?;
                let back = crate::biject::partition_from_sg_a(&sg, n).map_err(err_str)?;
                if back != pi {
                    return Err(format!("{pi} -> {sg} -> {back}"));
                }
            }
            Ok("all partitions".into())
        });
    }
    for n in 1..=max_n.min(5) {
        r.run("(S,g) round trip", format!("type C n={n}"), || {
            let table = SgTableC::new(n).map_err(err_str)?;
            let mut seen = BTreeSet::new();
            for pi in enumerate_nonnesting_c(n).map_err(err_str)? {
                let sg = table.sg_of_partition(&pi).map_err(err_str)?;
                if sg.type_of() != pi.partition_type().map_err(err_str)? {
                    return Err(format!("type not preserved at {pi}"));
                }
                let back = table.partition_from_sg(&sg).map_err(err_str)?;
                if back != pi {
                    return Err(format!("{pi} -> {sg} -> {back}"));
                }
                if !seen.insert(sg.clone()) {
                    return Err(format!("duplicate image {sg}"));
                }
            }
            Ok("all partitions".into())
        });
    }
}

fn classes_suite(r: &mut Runner, max_n: usize) {
    for n in 1..=max_n.min(7) {
        r.run("type census vs closed form", format!("type A n={n}"), || {
            for lam in PartitionType::all_of(n) {
                let census = census_type_a(&lam, n).map_err(err_str)?;
                let formula = kreweras_count(&lam, n).map_err(err_str)?;
                if census != formula {
                    return Err(format!("λ={lam}: census {census}, formula {formula}"));
                }
            }
            Ok("all types".into())
        });
    }
    for n in 1..=max_n.min(5) {
        r.run("type census vs closed form", format!("type C n={n}"), || {
            for lam in PartitionType::all_up_to(n) {
                let census = census_type_c(&lam, n).map_err(err_str)?;
                let formula = type_count_c(&lam, n).map_err(err_str)?;
                if census != formula {
                    return Err(format!("λ={lam}: census {census}, formula {formula}"));
                }
            }
            Ok("all types".into())
        });
    }
    for n in 1..=max_n.min(5) {
        r.run("class size vs window census", format!("type A n={n}"), || {
            for pi in enumerate_nonnesting_a(n).map_err(err_str)? {
                let census = census_class_a(&pi);
                let formula = class_size_a(&pi.partition_type(), n).map_err(err_str)?;
                if census != formula {
                    return Err(format!("{pi}: census {census}, formula {formula}"));
                }
            }
            Ok("all partitions".into())
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("class size vs window census", format!("type C n={n}"), || {
            for pi in enumerate_nonnesting_c(n).map_err(err_str)? {
                let census = census_class_c(&pi);
                let formula =
                    class_size_c(&pi.partition_type().map_err(err_str)?, n).map_err(err_str)?;
                if census != formula {
                    return Err(format!("{pi}: census {census}, formula {formula}"));
                }
            }
            Ok("all partitions".into())
        });
    }
    for n in 1..=max_n.min(6) {
        r.run("coarse duality S_k = M_(n-k)", format!("type A n={n}"), || {
            let t = sk_mk_a(n).map_err(err_str)?;
            if t.duality_holds() {
                Ok(format!("S = {:?}", t.s))
            } else {
                Err(format!("S = {:?}, M = {:?}", t.s, t.m))
            }
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("coarse duality S_k = M_(n-k)", format!("type C n={n}"), || {
            let t = sk_mk_c(n).map_err(err_str)?;
            if t.duality_holds() {
                Ok(format!("S = {:?}", t.s))
            } else {
                Err(format!("S = {:?}, M = {:?}", t.s, t.m))
            }
        });
    }
    for n in 1..=max_n.min(6) {
        r.run("per-class duality and size", format!("type A n={n}"), || {
            for (key, counts) in class_tables_a(n).map_err(err_str)? {
                let formula = class_size_co_a(&key.1, n).map_err(err_str)?;
                if counts[0] != counts[1] || counts[0] != formula {
                    return Err(format!(
                        "class {key:?}: sequences {}, antichains {}, formula {formula}",
                        counts[0], counts[1]
                    ));
                }
            }
            Ok("all classes".into())
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("per-class duality and size", format!("type C n={n}"), || {
            for (key, counts) in class_tables_c(n).map_err(err_str)? {
                let formula = class_size_co_c(&key.1, n).map_err(err_str)?;
                if counts[0] != counts[1] || counts[0] != formula {
                    return Err(format!(
                        "class {key:?}: sequences {}, antichains {}, formula {formula}",
                        counts[0], counts[1]
                    ));
                }
            }
            Ok("all classes".into())
        });
    }
}

fn identities_suite(r: &mut Runner, max_n: usize) {
    for n in 1..=max_n.min(7) {
        r.run("summation identity", format!("type A n={n}"), || {
            let total: u64 = PartitionType::all_of(n)
                .iter()
                .map(|lam| identity_term_a(lam, n).map_err(err_str))
                .sum::<std::result::Result<u64, String>>()?;
            let want = (n as u64 + 1).pow(n as u32);
            if total == want {
                Ok(format!("sum {total}"))
            } else {
                Err(format!("sum {total}, want {want}"))
            }
        });
    }
    for n in 1..=max_n.min(5) {
        r.run("summation identity", format!("type C n={n}"), || {
            let total: u64 = PartitionType::all_up_to(n)
                .iter()
                .map(|lam| identity_term_c(lam, n).map_err(err_str))
                .sum::<std::result::Result<u64, String>>()?;
            let want = shi_c_count(n);
            if total == want {
                Ok(format!("sum {total}"))
            } else {
                Err(format!("sum {total}, want {want}"))
            }
        });
    }
    if max_n >= 3 {
        r.run("term split", "type A n=3 is 4+36+24".into(), || {
            let mut terms: Vec<u64> = PartitionType::all_of(3)
                .iter()
                .map(|l| identity_term_a(l, 3).map_err(err_str))
                .collect::<std::result::Result<_, String>>()?;
            terms.sort_unstable();
            if terms == [4, 24, 36] {
                Ok("4 + 36 + 24 = 64".into())
            } else {
                Err(format!("terms {terms:?}"))
            }
        });
    }
    if max_n >= 2 {
        r.run("term split", "type C n=2 is 1+8+8+8".into(), || {
            let mut terms: Vec<u64> = PartitionType::all_up_to(2)
                .iter()
                .map(|l| identity_term_c(l, 2).map_err(err_str))
                .collect::<std::result::Result<_, String>>()?;
            terms.sort_unstable();
            if terms == [1, 8, 8, 8] {
                Ok("1 + 8 + 8 + 8 = 25".into())
            } else {
                Err(format!("terms {terms:?}"))
            }
        });
    }
}

fn geometry_suite(r: &mut Runner, max_n: usize) {
    let targets: Vec<(GeoFamily, usize)> = (1..=max_n.min(4))
        .map(|n| (GeoFamily::ShiA, n))
        .chain((1..=max_n.min(3)).map(|n| (GeoFamily::ShiC, n)))
        .collect();
    for (family, n) in targets {
        r.run("labeling is bijective", format!("{family} n={n}"), || {
            let census = geometric_census(family, n).map_err(err_str)?;
            Ok(format!("{} regions labeled", census.total()))
        });
        r.run("floors and down-sets agree", format!("{family} n={n}"), || {
            let census = geometric_census(family, n).map_err(err_str)?;
            for (region, label) in census.regions.iter().zip(&census.labels) {
                let poset = RootPoset::for_window(&label.window).map_err(err_str)?;
                let combinatorial = poset.floors_of(&label.ceilings).map_err(err_str)?;
                let mut geometric = Vec::new();
                for &fl in &region.floors {
                    let h = &census.arrangement.hyperplanes[fl];
                    match hyperplane_element(&label.window, &poset, h).map_err(err_str)? {
                        Some(e) => geometric.push(e),
                        None => return Err(format!("floor {h} missing from poset")),
                    }
                }
                let geometric = crate::poset::Antichain::new(geometric);
                if geometric != combinatorial {
                    return Err(format!(
                        "region {}: geometric floors {geometric}, combinatorial {combinatorial}",
                        region.sign_string()
                    ));
                }
                let origin = origin_side_elements(&census.arrangement, region, label)
                    .map_err(err_str)?;
                let down: BTreeSet<_> = poset
                    .down_set(&label.ceilings)
                    .map_err(err_str)?
                    .into_iter()
                    .map(|k| poset.elements()[k])
                    .collect();
                if origin != down {
                    return Err(format!(
                        "region {}: origin side is not the down-set of its ceilings",
                        region.sign_string()
                    ));
                }
                if poset.max_elements(&poset.down_set(&label.ceilings).map_err(err_str)?)
                    != label.ceilings
                {
                    return Err(format!(
                        "region {}: ceilings are not the down-set maxima",
                        region.sign_string()
                    ));
                }
            }
            Ok(format!("{} regions checked", census.total()))
        });
    }
    let sweeps: Vec<(GeoFamily, usize)> = (1..=max_n.min(3))
        .map(|n| (GeoFamily::ShiA, n))
        .chain((1..=max_n.min(2)).map(|n| (GeoFamily::ShiC, n)))
        .collect();
    for (family, n) in sweeps {
        r.run("flood fill matches sign sweep", format!("{family} n={n}"), || {
            let arr = geometry::build_arrangement(family, n).map_err(err_str)?;
            let bfs: Vec<String> =
                enumerate_regions(&arr).map_err(err_str)?.iter().map(|r| r.sign_string()).collect();
            let sweep: Vec<String> = enumerate_regions_sweep(&arr)
                .map_err(err_str)?
                .iter()
                .map(|r| r.sign_string())
                .collect();
            if bfs == sweep {
                Ok(format!("{} regions", bfs.len()))
            } else {
                Err("region lists differ".into())
            }
        });
    }
    for n in 1..=max_n.min(4) {
        r.run("order axioms", format!("both families n={n}"), || {
            for w in Permutation::all(n) {
                RootPoset::type_a(&w).map_err(err_str)?;
            }
            if n <= 4 {
                for w in SignedWindow::all(n) {
                    RootPoset::type_c(&w).map_err(err_str)?;
                }
            }
            Ok("reflexive, antisymmetric, transitive".into())
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_n() {
        for suite in [
            Suite::Counts,
            Suite::Theorem2,
            Suite::Theorem4,
            Suite::Bijectivity,
            Suite::Classes,
            Suite::Identities,
            Suite::GeometryCrossCheck,
        ] {
            let report = verify(suite, 2);
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn report_serializes() {
        let report = verify(Suite::Identities, 2);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"suite\""));
        assert!(report.to_string().contains("pass"));
    }

    #[test]
    fn suite_names_round_trip() {
        for name in [
            "counts",
            "theorem2",
            "theorem4",
            "bijectivity",
            "classes",
            "identities",
            "geometry-cross-check",
            "all",
        ] {
            let suite: Suite = name.parse().unwrap();
            assert_eq!(suite.to_string(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
