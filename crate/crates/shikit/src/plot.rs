//! Static SVG pictures of the small arrangements: hyperplanes as lines,
//! regions as shaded cells labeled by partition and sequence.
//!
//! Supported: shi-a at n = 2 (the plane itself), shi-a at n = 3 (projected
//! to the sum-zero plane) and shi-c at n = 2. Presentation only; cell
//! clipping runs in floating point while all region data comes from the
//! exact pipeline.

use num::ToPrimitive;

use crate::biject::{phi_a, phi_c, RegionAddressA, RegionAddressC, SgTableC};
use crate::error::{Error, Result};
use crate::geometry::{geometric_census, Family};
use crate::poset::Window;

const VIEW: f64 = 2.4; // world half-width
const SIZE: f64 = 760.0; // svg edge in px

type Pt = (f64, f64);

/// Map a world normal/offset into plot coordinates. Type A at n = 3 projects
/// onto the orthonormal basis of the sum-zero plane; the 2-dimensional
/// families draw coordinates directly.
struct Projection {
    basis: Vec<Vec<f64>>,
}

impl Projection {
    fn for_family(family: Family, n: usize) -> Result<Projection> {
        match (family, n) {
            (Family::ShiA, 2) | (Family::ShiC, 2) => {
                Ok(Projection { basis: vec![vec![1.0, 0.0], vec![0.0, 1.0]] })
            }
            (Family::ShiA, 3) => {
                let s2 = 2.0f64.sqrt();
                let s6 = 6.0f64.sqrt();
                Ok(Projection {
                    basis: vec![
                        vec![1.0 / s2, -1.0 / s2, 0.0],
                        vec![1.0 / s6, 1.0 / s6, -2.0 / s6],
                    ],
                })
            }
            _ => Err(Error::ResourceLimit(format!(
                "plots are drawn for shi-a n=2,3 and shi-c n=2 (got {family} n={n})"
            ))),
        }
    }

    fn normal(&self, world: &[i64]) -> Pt {
        let dot = |b: &[f64]| world.iter().zip(b).map(|(&c, &v)| c as f64 * v).sum();
        (dot(&self.basis[0]), dot(&self.basis[1]))
    }
}

fn to_px(p: Pt) -> Pt {
    let scale = SIZE / (2.0 * VIEW);
    ((p.0 + VIEW) * scale, (VIEW - p.1) * scale)
}

/// Clip a convex polygon by the half-plane `a·x (cmp) c`.
fn clip(poly: &[Pt], a: Pt, c: f64, keep_greater: bool) -> Vec<Pt> {
    let side = |p: &Pt| {
        let v = a.0 * p.0 + a.1 * p.1 - c;
        if keep_greater {
            v
        } else {
            -v
        }
    };
    let mut out = Vec::new();
    for k in 0..poly.len() {
        let (p, q) = (poly[k], poly[(k + 1) % poly.len()]);
        let (sp, sq) = (side(&p), side(&q));
        if sp >= 0.0 {
            out.push(p);
        }
        if (sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0) {
            let t = sp / (sp - sq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn centroid(poly: &[Pt]) -> Pt {
    let n = poly.len() as f64;
    let (sx, sy) = poly.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.0, acc.1 + p.1));
    (sx / n, sy / n)
}

fn polygon_area(poly: &[Pt]) -> f64 {
    let mut a = 0.0;
    for k in 0..poly.len() {
        let (p, q) = (poly[k], poly[(k + 1) % poly.len()]);
        a += p.0 * q.1 - q.0 * p.1;
    }
    a.abs() / 2.0
}

/// Render the arrangement as an SVG document string.
pub fn render_svg(family: Family, n: usize) -> Result<String> {
    let proj = Projection::for_family(family, n)?;
    let census = geometric_census(family, n)?;
    let table = match family {
        Family::ShiC => Some(SgTableC::new(n)?),
        _ => None,
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    ));

    let box_poly =
        vec![(-VIEW, -VIEW), (VIEW, -VIEW), (VIEW, VIEW), (-VIEW, VIEW)];

    // shaded cells
    for (k, (region, label)) in census.regions.iter().zip(&census.labels).enumerate() {
        let mut poly = box_poly.clone();
        for (h, &greater) in census.arrangement.hyperplanes.iter().zip(&region.signs) {
            let a = proj.normal(&h.normal);
            let c = h.offset.to_f64().unwrap_or(0.0);
            poly = clip(&poly, a, c, greater);
            if poly.len() < 3 {
                break;
            }
        }
        if poly.len() < 3 {
            continue;
        }
        let hue = (k * 137) % 360;
        let path: String = poly
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let (x, y) = to_px(p);
                format!("{}{x:.2},{y:.2}", if i == 0 { "M" } else { "L" })
            })
            .collect::<Vec<_>>()
            .join(" ");
        svg.push_str(&format!(
            "<path d=\"{path} Z\" fill=\"hsl({hue},60%,88%)\" stroke=\"none\"/>\n"
        ));
        if polygon_area(&poly) > 0.04 {
            let (cx, cy) = to_px(centroid(&poly));
            let (partition, sequence) = region_labels(&census, label, table.as_ref())?;
            svg.push_str(&format!(
                "<text x=\"{cx:.2}\" y=\"{cy:.2}\" font-size=\"9\" text-anchor=\"middle\" \
                 fill=\"#222\"><tspan x=\"{cx:.2}\" dy=\"0\">{partition}</tspan>\
                 <tspan x=\"{cx:.2}\" dy=\"10\">{sequence}</tspan></text>\n"
            ));
        }
    }

    // hyperplane lines, clipped to the viewing box
    for h in &census.arrangement.hyperplanes {
        let a = proj.normal(&h.normal);
        let c = h.offset.to_f64().unwrap_or(0.0);
        if let Some(((x1, y1), (x2, y2))) = line_in_box(a, c) {
            let (p1, p2) = (to_px((x1, y1)), to_px((x2, y2)));
            svg.push_str(&format!(
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" \
                 stroke=\"#333\" stroke-width=\"1\"/>\n",
                p1.0, p1.1, p2.0, p2.1
            ));
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn region_labels(
    census: &crate::geometry::Census,
    label: &crate::geometry::RegionLabel,
    table: Option<&SgTableC>,
) -> Result<(String, String)> {
    match &label.window {
        Window::A(w) => {
            let poset = crate::poset::RootPoset::type_a(w)?;
            let partition = poset.antichain_to_partition_a(&label.ceilings)?;
            let addr =
                RegionAddressA::new(1, w.clone(), label.ceilings.clone())?;
            Ok((partition.to_string(), phi_a(&addr)?.to_string()))
        }
        Window::C(w) => {
            let poset = crate::poset::RootPoset::type_c(w)?;
            let partition = poset.antichain_to_partition_c(&label.ceilings)?;
            let table = table.ok_or_else(|| {
                Error::Internal(format!("missing table for {}", census.arrangement.family))
            })?;
            let addr = RegionAddressC::new(w.clone(), label.ceilings.clone())?;
            Ok((partition.to_string(), phi_c(&addr, table)?.to_string()))
        }
    }
}

/// Intersect the line `a·x = c` with the viewing box.
fn line_in_box(a: Pt, c: f64) -> Option<(Pt, Pt)> {
    let mut pts: Vec<Pt> = Vec::new();
    let eps = 1e-9;
    // vertical box edges x = ±VIEW
    for x in [-VIEW, VIEW] {
        if a.1.abs() > eps {
            let y = (c - a.0 * x) / a.1;
            if (-VIEW - eps..=VIEW + eps).contains(&y) {
                pts.push((x, y));
            }
        }
    }
    // horizontal box edges y = ±VIEW
    for y in [-VIEW, VIEW] {
        if a.0.abs() > eps {
            let x = (c - a.1 * y) / a.0;
            if (-VIEW - eps..=VIEW + eps).contains(&x) {
                pts.push((x, y));
            }
        }
    }
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < eps && (p.1 - q.1).abs() < eps);
    if pts.len() >= 2 {
        Some((pts[0], pts[pts.len() - 1]))
    } else {
        None
    }
}
