//! Record building and text output for the command-line surface.

use serde::{Deserialize, Serialize};

use crate::biject::{phi_a, phi_a_inverse, phi_c, phi_c_inverse, RegionAddressA, RegionAddressC, SgTableC};
use crate::error::{Error, Result};
use crate::geometry::{feasible, geometric_census, Family as GeoFamily};
use crate::model::{factorial, Permutation, SequenceA, SequenceC, SignedWindow};
use crate::poset::{antichain_count_total, Antichain, RootPoset, Window};

/// One region as seen by the `regions` and `bijection` commands. The
/// `sequence` is the labeling-map image of the address; geometric fields are
/// present only when the record came from the region enumerator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionRecord {
    pub schema: u32,
    pub family: String,
    pub n: usize,
    pub copy: Option<usize>,
    pub window: String,
    pub antichain: String,
    pub ceilings: String,
    pub floors: String,
    pub partition: String,
    pub sequence: String,
    pub sign_vector: Option<String>,
    pub witness: Option<Vec<String>>,
}

pub const SCHEMA_VERSION: u32 = 1;

fn record_for_address(
    family: GeoFamily,
    window: &Window,
    antichain: &Antichain,
    copy: Option<usize>,
    table: Option<&SgTableC>,
) -> Result<RegionRecord> {
    let poset = RootPoset::for_window(window)?;
    let floors = poset.floors_of(antichain)?;
    let (partition, sequence) = match window {
        Window::A(w) => {
            let partition = poset.antichain_to_partition_a(antichain)?.to_string();
            let addr = RegionAddressA::new(copy.unwrap_or(1), w.clone(), antichain.clone())?;
            (partition, phi_a(&addr)?.to_string())
        }
        Window::C(w) => {
            let partition = poset.antichain_to_partition_c(antichain)?.to_string();
            let table = table.ok_or_else(|| Error::Internal("missing type C table".into()))?;
            let addr = RegionAddressC::new(w.clone(), antichain.clone())?;
            (partition, phi_c(&addr, table)?.to_string())
        }
    };
    Ok(RegionRecord {
        schema: SCHEMA_VERSION,
        family: family.to_string(),
        n: window.n(),
        copy,
        window: window.to_string(),
        antichain: antichain.to_string(),
        ceilings: antichain.to_string(),
        floors: floors.to_string(),
        partition,
        sequence,
        sign_vector: None,
        witness: None,
    })
}

fn copies_for(family: GeoFamily, n: usize, copy: Option<usize>) -> Result<Vec<Option<usize>>> {
    match family {
        GeoFamily::ShiA => match copy {
            Some(k) if k >= 1 && k <= n + 1 => Ok(vec![Some(k)]),
            Some(k) => Err(Error::Parse(format!("copy {k} outside [1, {}]", n + 1))),
            None => Ok((1..=n + 1).map(Some).collect()),
        },
        GeoFamily::ShiC => match copy {
            Some(_) => Err(Error::Parse("--copy applies to shi-a only".into())),
            None => Ok(vec![None]),
        },
        _ => Err(Error::Parse(format!("records are defined for Shi families, not {family}"))),
    }
}

/// Records for every (copy ×) window × antichain, in canonical order.
pub fn bijection_records(
    family: GeoFamily,
    n: usize,
    copy: Option<usize>,
) -> Result<Vec<RegionRecord>> {
    let copies = copies_for(family, n, copy)?;
    let table = match family {
        GeoFamily::ShiC => Some(SgTableC::new(n)?),
        _ => None,
    };
    let windows: Vec<Window> = match family {
        GeoFamily::ShiA => Permutation::all(n).into_iter().map(Window::A).collect(),
        _ => SignedWindow::all(n).into_iter().map(Window::C).collect(),
    };
    let mut out = Vec::new();
    for copy in copies {
        for window in &windows {
            let poset = RootPoset::for_window(window)?;
            for antichain in poset.antichains() {
                out.push(record_for_address(family, window, &antichain, copy, table.as_ref())?);
            }
        }
    }
    Ok(out)
}

/// Records from the geometric enumeration, ordered by (window, antichain),
/// with sign vectors and witnesses attached.
pub fn region_records(
    family: GeoFamily,
    n: usize,
    copy: Option<usize>,
) -> Result<Vec<RegionRecord>> {
    let single_copy = match family {
        GeoFamily::ShiA => Some(copy.unwrap_or(1)),
        GeoFamily::ShiC if copy.is_some() => {
            return Err(Error::Parse("--copy applies to shi-a only".into()));
        }
        GeoFamily::ShiC => None,
        _ => return Err(Error::Parse(format!("records are defined for Shi families, not {family}"))),
    };
    if let (GeoFamily::ShiA, Some(k)) = (family, single_copy) {
        if k < 1 || k > n + 1 {
            return Err(Error::Parse(format!("copy {k} outside [1, {}]", n + 1)));
        }
    }
    let table = match family {
        GeoFamily::ShiC => Some(SgTableC::new(n)?),
        _ => None,
    };
    let census = geometric_census(family, n)?;
    let mut keyed: Vec<(Window, Antichain, usize)> = census
        .labels
        .iter()
        .enumerate()
        .map(|(k, label)| (label.window.clone(), label.ceilings.clone(), k))
        .collect();
    keyed.sort();
    let mut out = Vec::new();
    for (window, antichain, k) in keyed {
        let mut record =
            record_for_address(family, &window, &antichain, single_copy, table.as_ref())?;
        let region = &census.regions[k];
        record.sign_vector = Some(region.sign_string());
        record.witness =
            Some(region.witness.iter().map(feasible::rat_to_string).collect());
        out.push(record);
    }
    Ok(out)
}

/// Re-parse the textual fields of a record and re-derive the sequence;
/// used to keep serialized output honest.
pub fn validate_record(record: &RegionRecord) -> Result<()> {
    if record.schema != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unknown schema {}", record.schema)));
    }
    let family: GeoFamily = record.family.parse()?;
    let antichain: Antichain = record.antichain.parse()?;
    let derived = match family {
        GeoFamily::ShiA => {
            let w: Permutation = record.window.parse()?;
            let addr = RegionAddressA::new(record.copy.unwrap_or(1), w, antichain)?;
            phi_a(&addr)?.to_string()
        }
        GeoFamily::ShiC => {
            let w: SignedWindow = record.window.parse()?;
            let table = SgTableC::new(record.n)?;
            let addr = RegionAddressC::new(w, antichain)?;
            phi_c(&addr, &table)?.to_string()
        }
        _ => return Err(Error::Parse(format!("bad record family {family}"))),
    };
    if derived != record.sequence {
        return Err(Error::Internal(format!(
            "record sequence {} does not match its address (expected {derived})",
            record.sequence
        )));
    }
    Ok(())
}

pub fn records_to_json(records: &[RegionRecord]) -> Result<String> {
    serde_json::to_string_pretty(records)
        .map(|s| s + "\n")
        .map_err(|e| Error::Internal(format!("json encoding failed: {e}")))
}

/// Fixed column order; fields containing commas or quotes are quoted, the
/// witness column joins entries with spaces.
pub fn records_to_csv(records: &[RegionRecord]) -> String {
    let mut out = String::from(
        "schema,family,n,copy,window,antichain,ceilings,floors,partition,sequence,sign_vector,witness\n",
    );
    for r in records {
        let fields = [
            r.schema.to_string(),
            r.family.clone(),
            r.n.to_string(),
            r.copy.map(|c| c.to_string()).unwrap_or_default(),
            r.window.clone(),
            r.antichain.clone(),
            r.ceilings.clone(),
            r.floors.clone(),
            r.partition.clone(),
            r.sequence.clone(),
            r.sign_vector.clone().unwrap_or_default(),
            r.witness.as_ref().map(|w| w.join(" ")).unwrap_or_default(),
        ];
        let quoted: Vec<String> = fields
            .into_iter()
            .map(|f| {
                if f.contains(',') || f.contains('"') {
                    format!("\"{}\"", f.replace('"', "\"\""))
                } else {
                    f
                }
            })
            .collect();
        out.push_str(&quoted.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Geometric,
    Combinatorial,
}

impl std::str::FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geometric" => Ok(CountMethod::Geometric),
            "combinatorial" => Ok(CountMethod::Combinatorial),
            _ => Err(Error::Parse(format!("unknown method `{s}`"))),
        }
    }
}

pub struct CountOutcome {
    pub value: u64,
    pub mismatch: Option<(u64, u64)>,
}

fn combinatorial_count(family: GeoFamily, n: usize) -> Result<u64> {
    match family {
        GeoFamily::CoxA => Ok(factorial(n as u64)),
        GeoFamily::CoxC => Ok((1u64 << n) * factorial(n as u64)),
        GeoFamily::ShiA | GeoFamily::ShiC => antichain_count_total(family.root_family(), n),
    }
}

fn geometric_count(family: GeoFamily, n: usize) -> Result<u64> {
    let arr = crate::geometry::build_arrangement(family, n)?;
    Ok(crate::geometry::enumerate_regions(&arr)?.len() as u64)
}

/// Region count by the requested method; with no method given, both are
/// computed when feasible and compared.
pub fn count(family: GeoFamily, n: usize, method: Option<CountMethod>) -> Result<CountOutcome> {
    if n < 1 {
        return Err(Error::Parse("counts need n >= 1".into()));
    }
    match method {
        Some(CountMethod::Geometric) => {
            Ok(CountOutcome { value: geometric_count(family, n)?, mismatch: None })
        }
        Some(CountMethod::Combinatorial) => {
            Ok(CountOutcome { value: combinatorial_count(family, n)?, mismatch: None })
        }
        None => {
            let comb = combinatorial_count(family, n)?;
            match geometric_count(family, n) {
                Ok(geo) if geo != comb => {
                    Ok(CountOutcome { value: comb, mismatch: Some((geo, comb)) })
                }
                Ok(_) | Err(Error::ResourceLimit(_)) => {
                    Ok(CountOutcome { value: comb, mismatch: None })
                }
                Err(other) => Err(other),
            }
        }
    }
}

/// Invert a sequence back to its region address; the output lists the
/// address and the partition labeling the region.
pub fn invert(family: GeoFamily, n: usize, sequence: &str) -> Result<String> {
    match family {
        GeoFamily::ShiA => {
            let s: SequenceA = sequence.parse().map_err(widen_range_error)?;
            if s.n() != n {
                return Err(Error::Parse(format!("sequence has length {}, want {n}", s.n())));
            }
            let addr = phi_a_inverse(&s)?;
            let poset = RootPoset::type_a(&addr.window)?;
            let partition = poset.antichain_to_partition_a(&addr.antichain)?;
            Ok(format!("{addr}\npartition={partition}\n"))
        }
        GeoFamily::ShiC => {
            let s: SequenceC = sequence.parse().map_err(widen_range_error)?;
            if s.n() != n {
                return Err(Error::Parse(format!("sequence has length {}, want {n}", s.n())));
            }
            let table = SgTableC::new(n)?;
            let addr = phi_c_inverse(&s, &table)?;
            let poset = RootPoset::type_c(&addr.window)?;
            let partition = poset.antichain_to_partition_c(&addr.antichain)?;
            Ok(format!("{addr}\npartition={partition}\n"))
        }
        _ => Err(Error::Parse(format!("invert is defined for Shi families, not {family}"))),
    }
}

/// Out-of-range sequences are a usage error at the CLI boundary.
fn widen_range_error(e: Error) -> Error {
    match e {
        Error::InvalidSequence(msg) => Error::Parse(msg),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_records_shi_c1() {
        let records = bijection_records(GeoFamily::ShiC, 1, None).unwrap();
        let sequences: Vec<&str> = records.iter().map(|r| r.sequence.as_str()).collect();
        assert_eq!(sequences, vec!["-1", "0", "1"]);
    }

    #[test]
    fn bijection_copy_one_is_parking() {
        let records = bijection_records(GeoFamily::ShiA, 3, Some(1)).unwrap();
        assert_eq!(records.len(), 16);
        for r in &records {
            let s: SequenceA = r.sequence.parse().unwrap();
            assert!(s.is_parking_function(), "{}", r.sequence);
        }
    }

    #[test]
    fn region_records_carry_geometry_and_validate() {
        let records = region_records(GeoFamily::ShiA, 2, None).unwrap();
        assert_eq!(records.len(), 3);
        for r in &records {
            assert!(r.sign_vector.is_some() && r.witness.is_some());
            validate_record(r).unwrap();
        }
        let json = records_to_json(&records).unwrap();
        let back: Vec<RegionRecord> = serde_json::from_str(&json).unwrap();
        for r in &back {
            validate_record(r).unwrap();
        }
    }

    #[test]
    fn csv_has_fixed_header_and_quoting() {
        let records = region_records(GeoFamily::ShiA, 2, None).unwrap();
        let csv = records_to_csv(&records);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "schema,family,n,copy,window,antichain,ceilings,floors,partition,sequence,sign_vector,witness"
        );
        assert!(csv.contains("\"1,2\""));
    }

    #[test]
    fn count_outcomes() {
        let out = count(GeoFamily::ShiA, 3, None).unwrap();
        assert_eq!(out.value, 16);
        assert!(out.mismatch.is_none());
        let out = count(GeoFamily::ShiA, 7, Some(CountMethod::Combinatorial)).unwrap();
        assert_eq!(out.value, 262144);
        let out = count(GeoFamily::CoxC, 2, Some(CountMethod::Combinatorial)).unwrap();
        assert_eq!(out.value, 8);
    }

    #[test]
    fn invert_examples() {
        let out = invert(GeoFamily::ShiA, 3, "1,3,1").unwrap();
        assert!(out.contains("copy=1;w=1,3,2;arcs=(1,2)"), "{out}");
        assert!(out.contains("partition={1,2}|{3}"));
        let out = invert(GeoFamily::ShiC, 1, "0").unwrap();
        assert!(out.contains("w=-1;arcs=(-1,1)"), "{out}");
        let out = invert(GeoFamily::ShiA, 3, "2,4,2").unwrap();
        assert!(out.contains("copy=2;w=1,3,2;arcs=(1,2)"));
        // out-of-range sequences surface as usage errors
        assert!(matches!(invert(GeoFamily::ShiA, 3, "9,1,1"), Err(Error::Parse(_))));
    }
}
