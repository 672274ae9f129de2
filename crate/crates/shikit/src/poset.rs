//! Root posets attached to (signed) permutation windows, and their antichains
//! and down-sets.
//!
//! For a window `w` the elements stand for the level-one hyperplanes crossing
//! the cone named by `w`: position pairs `(i, j)`, `i < j`, with `w(i) < w(j)`
//! in type A, and `0 < w(i) ≤ |w(j)|` (up to mirror) in type C. The order is
//! reverse interval containment, `(i, j) ≤ (r, s)` iff `r ≤ i < j ≤ s`, so
//! that the hyperplanes a region sees on the origin side always form a
//! down-set. In type C a pair and its mirror `(-j, -i)` name the same
//! hyperplane and are identified into a single element.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{
    partition_from_arcs_a, partition_from_arcs_c, PartitionA, PartitionC, Permutation,
    SignedWindow,
};

/// Which reflection family a poset (or a purely combinatorial computation)
/// belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    C,
}

/// A type A or type C window naming a cone.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Window {
    A(Permutation),
    C(SignedWindow),
}

impl Window {
    pub fn n(&self) -> usize {
        match self {
            Window::A(w) => w.n(),
            Window::C(w) => w.n(),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Window::A(_) => Family::A,
            Window::C(_) => Family::C,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Window::A(w) => write!(f, "{w}"),
            Window::C(w) => write!(f, "{w}"),
        }
    }
}

/// A poset element: a position pair `(i, j)` with `i < j`. For type C this is
/// the canonical representative of the orbit `{(i, j), (-j, -i)}` — the pair
/// with the smaller first coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetElement {
    pub i: i32,
    pub j: i32,
}

impl PosetElement {
    pub fn new(i: i32, j: i32) -> Self {
        PosetElement { i, j }
    }

    /// Canonical orbit representative under `(i, j) ↦ (-j, -i)`.
    pub fn orbit_rep(i: i32, j: i32) -> Self {
        if (i, j) <= (-j, -i) {
            PosetElement { i, j }
        } else {
            PosetElement { i: -j, j: -i }
        }
    }

    pub fn mirror(&self) -> Self {
        PosetElement { i: -self.j, j: -self.i }
    }

    pub fn is_self_mirror(&self) -> bool {
        self.i == -self.j
    }
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A pairwise incomparable element set, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Antichain {
    elems: Vec<PosetElement>,
}

impl Antichain {
    pub fn new(mut elems: Vec<PosetElement>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        Antichain { elems }
    }

    pub fn empty() -> Self {
        Antichain { elems: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[PosetElement] {
        &self.elems
    }

    pub fn arcs(&self) -> Vec<(i32, i32)> {
        self.elems.iter().map(|e| (e.i, e.j)).collect()
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.elems {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Antichain {
    type Err = Error;

    /// Parses `(1,2)(2,3)`; the empty string is the empty antichain.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut elems = Vec::new();
        if s.is_empty() {
            return Ok(Antichain::empty());
        }
        for tok in s.split(')') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let inner = tok
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("bad arc list `{s}`")))?;
            let (a, b) = inner
                .split(',')
                .map(str::trim)
                .collect_tuple()
                .ok_or_else(|| Error::Parse(format!("bad arc `{tok})`")))?;
            let i = a.parse().map_err(|_| Error::Parse(format!("bad arc `{tok})`")))?;
            let j = b.parse().map_err(|_| Error::Parse(format!("bad arc `{tok})`")))?;
            elems.push(PosetElement::new(i, j));
        }
        Ok(Antichain::new(elems))
    }
}

/// The poset of level-one hyperplanes crossing the cone of one window.
#[derive(Debug, Clone)]
pub struct RootPoset {
    window: Window,
    elements: Vec<PosetElement>,
    leq: Vec<Vec<bool>>,
}

impl RootPoset {
    /// `Q_w` for a permutation `w`.
    pub fn type_a(w: &Permutation) -> Result<Self> {
        let n = w.n() as i32;
        let mut elements = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if w.value(i) < w.value(j) {
                    elements.push(PosetElement::new(i, j));
                }
            }
        }
        elements.sort_unstable();
        let leq = containment_matrix(&elements, false);
        let poset = RootPoset { window: Window::A(w.clone()), elements, leq };
        poset.verify_order_axioms()?;
        Ok(poset)
    }

    /// The mirror-identified `Q^C_w` for a signed window `w`.
    pub fn type_c(w: &SignedWindow) -> Result<Self> {
        let n = w.n() as i32;
        let ground: Vec<i32> = (-n..=n).filter(|&e| e != 0).collect();
        let mut reps = BTreeSet::new();
        for (a, &i) in ground.iter().enumerate() {
            for &j in &ground[a + 1..] {
                let wi = w.value(i);
                let wj = w.value(j);
                if wi > 0 && wi <= wj.abs() {
                    reps.insert(PosetElement::orbit_rep(i, j));
                }
            }
        }
        let elements: Vec<PosetElement> = reps.into_iter().collect();
        let leq = containment_matrix(&elements, true);
        let poset = RootPoset { window: Window::C(w.clone()), elements, leq };
        poset.verify_order_axioms()?;
        Ok(poset)
    }

    pub fn for_window(w: &Window) -> Result<Self> {
        match w {
            Window::A(p) => RootPoset::type_a(p),
            Window::C(s) => RootPoset::type_c(s),
        }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn family(&self) -> Family {
        self.window.family()
    }

    pub fn n(&self) -> usize {
        self.window.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn index_of(&self, e: &PosetElement) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    /// The orbit identification could in principle break the order axioms, so
    /// they are checked at construction time.
    fn verify_order_axioms(&self) -> Result<()> {
        let m = self.elements.len();
        for a in 0..m {
            if !self.leq[a][a] {
                return Err(Error::Internal(format!("order not reflexive at {}", self.elements[a])));
            }
            for b in 0..m {
                if a != b && self.leq[a][b] && self.leq[b][a] {
                    return Err(Error::Internal(format!(
                        "order not antisymmetric at {}, {}",
                        self.elements[a], self.elements[b]
                    )));
                }
                for c in 0..m {
                    if self.leq[a][b] && self.leq[b][c] && !self.leq[a][c] {
                        return Err(Error::Internal(format!(
                            "order not transitive at {}, {}, {}",
                            self.elements[a], self.elements[b], self.elements[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// All antichains, the empty one included, in lexicographic order of
    /// their element index sequences.
    pub fn antichains(&self) -> Vec<Antichain> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.antichain_rec(0, &mut current, &mut |idxs| {
            out.push(Antichain {
                elems: idxs.iter().map(|&k| self.elements[k]).collect(),
            });
        });
        out
    }

    /// `j(Q)`, the number of antichains.
    pub fn antichain_count(&self) -> u64 {
        let mut count = 0u64;
        let mut current = Vec::new();
        self.antichain_rec(0, &mut current, &mut |_| count += 1);
        count
    }

    fn antichain_rec(&self, start: usize, current: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        f(current);
        for e in start..self.elements.len() {
            if current.iter().all(|&c| !self.comparable(c, e)) {
                current.push(e);
                self.antichain_rec(e + 1, current, f);
                current.pop();
            }
        }
    }

    pub fn is_antichain(&self, a: &Antichain) -> bool {
        let Some(idxs) = a.elems.iter().map(|e| self.index_of(e)).collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        idxs.iter()
            .tuple_combinations()
            .all(|(&x, &y)| !self.comparable(x, y))
    }

    /// Element indices lying below some member of the antichain.
    pub fn down_set(&self, a: &Antichain) -> Result<BTreeSet<usize>> {
        if !self.is_antichain(a) {
            return Err(Error::InvalidAntichain(format!("{a} is not an antichain here")));
        }
        let tops: Vec<usize> = a.elems.iter().map(|e| self.index_of(e).unwrap()).collect();
        Ok((0..self.elements.len())
            .filter(|&e| tops.iter().any(|&t| self.leq[e][t]))
            .collect())
    }

    /// Maximal elements of a downward-closed index set.
    pub fn max_elements(&self, set: &BTreeSet<usize>) -> Antichain {
        Antichain::new(
            set.iter()
                .filter(|&&e| set.iter().all(|&f| f == e || !self.leq[e][f]))
                .map(|&e| self.elements[e])
                .collect(),
        )
    }

    /// The floors of the region whose ceilings are `a`: the minimal elements
    /// of the complement of `down_set(a)`.
    pub fn floors_of(&self, a: &Antichain) -> Result<Antichain> {
        let down = self.down_set(a)?;
        let complement: Vec<usize> =
            (0..self.elements.len()).filter(|e| !down.contains(e)).collect();
        Ok(Antichain::new(
            complement
                .iter()
                .filter(|&&e| complement.iter().all(|&f| f == e || !self.leq[f][e]))
                .map(|&e| self.elements[e])
                .collect(),
        ))
    }

    /// The partition of `[n]` whose arc diagram is the antichain.
    pub fn antichain_to_partition_a(&self, a: &Antichain) -> Result<PartitionA> {
        if self.family() != Family::A {
            return Err(Error::Internal("type A partition requested from a type C poset".into()));
        }
        if !self.is_antichain(a) {
            return Err(Error::InvalidAntichain(format!("{a} is not an antichain here")));
        }
        partition_from_arcs_a(self.n(), &a.arcs())
    }

    /// The symmetric partition of `[±n]` whose arcs are the antichain orbits
    /// together with their mirrors.
    pub fn antichain_to_partition_c(&self, a: &Antichain) -> Result<PartitionC> {
        if self.family() != Family::C {
            return Err(Error::Internal("type C partition requested from a type A poset".into()));
        }
        if !self.is_antichain(a) {
            return Err(Error::InvalidAntichain(format!("{a} is not an antichain here")));
        }
        let mut arcs = BTreeSet::new();
        for e in a.elems() {
            arcs.insert((e.i, e.j));
            let m = e.mirror();
            arcs.insert((m.i, m.j));
        }
        partition_from_arcs_c(self.n(), &arcs.into_iter().collect::<Vec<_>>())
    }

    /// Debug dump: elements, then cover relations, one per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for e in &self.elements {
            out.push_str(&format!("element {e}\n"));
        }
        let m = self.elements.len();
        for a in 0..m {
            for b in 0..m {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let covered = (0..m).any(|c| {
                    c != a && c != b && self.leq[a][c] && self.leq[c][b]
                });
                if !covered {
                    out.push_str(&format!("cover {} < {}\n", self.elements[a], self.elements[b]));
                }
            }
        }
        out
    }
}

/// `leq[a][b]` iff some representative interval of `a` sits inside one of
/// `b`. For type A only the stored pair exists; for type C the mirror
/// interval is also tried.
fn containment_matrix(elements: &[PosetElement], mirrored: bool) -> Vec<Vec<bool>> {
    let m = elements.len();
    let inside = |inner: &PosetElement, outer: &PosetElement| -> bool {
        outer.i <= inner.i && inner.j <= outer.j
    };
    (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let (ea, eb) = (&elements[a], &elements[b]);
                    inside(ea, eb) || (mirrored && inside(ea, &eb.mirror()))
                })
                .collect()
        })
        .collect()
}

const TOTAL_MAX_A: usize = 8;
const TOTAL_MAX_C: usize = 6;

/// `Σ_w j(Q_w)` over every window of the family. Windows are processed in
/// canonical order; chunks may run on worker threads (capped by the
/// `SHI_THREADS` environment variable) and are reduced in order.
pub fn antichain_count_total(family: Family, n: usize) -> Result<u64> {
    Ok(per_window_antichain_counts(family, n)?.into_iter().map(|(_, c)| c).sum())
}

/// Per-window antichain counts in canonical window order.
pub fn per_window_antichain_counts(family: Family, n: usize) -> Result<Vec<(Window, u64)>> {
    let windows: Vec<Window> = match family {
        Family::A => {
            if n > TOTAL_MAX_A {
                return Err(Error::ResourceLimit(format!(
                    "type A antichain totals capped at n={TOTAL_MAX_A} (got {n})"
                )));
            }
            Permutation::all(n).into_iter().map(Window::A).collect()
        }
        Family::C => {
            if n > TOTAL_MAX_C {
                return Err(Error::ResourceLimit(format!(
                    "type C antichain totals capped at n={TOTAL_MAX_C} (got {n})"
                )));
            }
            SignedWindow::all(n).into_iter().map(Window::C).collect()
        }
    };
    let workers = worker_count().min(windows.len().max(1));
    let chunk_size = windows.len().div_ceil(workers.max(1)).max(1);
    let counts: Result<Vec<Vec<u64>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = windows
            .chunks(chunk_size)
            .map(|chunk| {
                scope.spawn(move || {
                    chunk
                        .iter()
                        .map(|w| RootPoset::for_window(w).map(|p| p.antichain_count()))
                        .collect::<Result<Vec<u64>>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    Ok(windows.into_iter().zip(counts?.into_iter().flatten()).collect())
}

pub(crate) fn worker_count() -> usize {
    std::env::var("SHI_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}
