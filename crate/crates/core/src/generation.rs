//! Isomorphism-free enumeration of small families, census counts, random
//! instances and the non-Hamiltonian constructions.
//!
//! Every 2-digraph whose cycles have `2k` arcs is obtained from `m`
//! disjoint clean cycles by splicing entry/exit pairs, since splitting all
//! saturated vertices undoes the splices without touching the cycles. The
//! enumerator therefore builds the family level by level, one splice per
//! level, keeping one representative per canonical code.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, graph_from_code, Code};
use crate::certificate::{certify, CertifyOptions, Verdict};
use crate::error::{Error, Result};
use crate::factor::{is_closed, is_hamiltonian_bruteforce, is_minimally_closed, open_routes, parity_class, ParityClass, DEFAULT_CAP};
use crate::graph::{TwoDigraph, UnionFind, VertexId};
use crate::split::{certify_by_splitting, SplitOutcome};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Clean,
    Dirty,
    /// Every cycle has odd half-length.
    Odd,
    /// Every cycle has even half-length.
    Even,
    Connected,
    Saturated,
}

impl Constraint {
    pub fn as_str(self) -> &'static str {
        match self {
            Constraint::Clean => "clean",
            Constraint::Dirty => "dirty",
            Constraint::Odd => "odd",
            Constraint::Even => "even",
            Constraint::Connected => "connected",
            Constraint::Saturated => "saturated",
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "clean" => Constraint::Clean,
            "dirty" => Constraint::Dirty,
            "odd" => Constraint::Odd,
            "even" => Constraint::Even,
            "connected" => Constraint::Connected,
            "saturated" => Constraint::Saturated,
            _ => return Err(Error::InvalidFamily(format!("unknown constraint {s:?}"))),
        })
    }
}

/// Cycles of `2k` arcs, `m` of them, plus constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub k: usize,
    pub m: usize,
    pub constraints: BTreeSet<Constraint>,
}

impl FamilySpec {
    pub fn new(k: usize, m: usize, constraints: impl IntoIterator<Item = Constraint>) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::InvalidFamily(format!("k = {k} and m = {m} must both be positive")));
        }
        Ok(FamilySpec {
            k,
            m,
            constraints: constraints.into_iter().collect(),
        })
    }

    pub fn has(&self, c: Constraint) -> bool {
        self.constraints.contains(&c)
    }

    /// No graph can satisfy the constraints.
    pub fn is_empty_family(&self) -> bool {
        (self.has(Constraint::Clean) && self.has(Constraint::Dirty))
            || (self.has(Constraint::Odd) && self.k.is_multiple_of(2))
            || (self.has(Constraint::Even) && self.k % 2 == 1)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `B<2k>_<m>` is the saturated family; `P<2k>_<m>` allows unsaturated
    /// vertices. Constraints may follow after commas, as in `B6_4,clean`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("expected B<2k>_<m> or P<2k>_<m>, found {s:?}"));
        let mut parts = s.split(',');
        let head = parts.next().ok_or_else(bad)?;
        let saturated = match head.chars().next() {
            Some('B') | Some('F') => true,
            Some('P') => false,
            _ => return Err(bad()),
        };
        let (len, m) = head[1..].split_once('_').ok_or_else(bad)?;
        let len: usize = len.parse().map_err(|_| bad())?;
        let m: usize = m.parse().map_err(|_| bad())?;
        if !len.is_multiple_of(2) {
            return Err(Error::InvalidFamily(format!("cycle length {len} is odd")));
        }
        let mut constraints = parts.map(str::parse).collect::<Result<BTreeSet<Constraint>>>()?;
        if saturated {
            constraints.insert(Constraint::Saturated);
        }
        FamilySpec::new(len / 2, m, constraints)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.has(Constraint::Saturated) { 'B' } else { 'P' };
        write!(f, "{head}{}_{}", 2 * self.k, self.m)?;
        for c in self.constraints.iter().filter(|&&c| c != Constraint::Saturated) {
            write!(f, ",{}", c.as_str())?;
        }
        Ok(())
    }
}

/// A graph on vertices `0..n` with each arc's cycle index.
#[derive(Debug, Clone)]
struct Raw {
    n: usize,
    arcs: Vec<(u32, u32)>,
    arc_ac: Vec<u32>,
}

impl Raw {
    /// `m` disjoint clean cycles of `2k` arcs: cycle `j` has entries
    /// `2jk..2jk+k` and exits after them; entry `i` feeds exits `i` and
    /// `i-1`.
    fn crowns(m: usize, k: usize) -> Raw {
        let mut arcs = Vec::with_capacity(2 * m * k);
        let mut arc_ac = Vec::with_capacity(2 * m * k);
        for j in 0..m {
            let base = (2 * j * k) as u32;
            let k32 = k as u32;
            for i in 0..k32 {
                arcs.push((base + i, base + k32 + i));
                arcs.push((base + (i + 1) % k32, base + k32 + i));
                arc_ac.extend([j as u32, j as u32]);
            }
        }
        Raw {
            n: 2 * m * k,
            arcs,
            arc_ac,
        }
    }

    fn degrees(&self) -> (Vec<u8>, Vec<u8>) {
        let mut indeg = vec![0u8; self.n];
        let mut outdeg = vec![0u8; self.n];
        for &(t, h) in &self.arcs {
            outdeg[t as usize] += 1;
            indeg[h as usize] += 1;
        }
        (indeg, outdeg)
    }

    /// Entry/exit pairs whose splice is allowed; with `clean`, only pairs
    /// from different cycles, which keep the merged vertex off the
    /// interior of any cycle.
    fn splice_pairs(&self, clean: bool) -> Vec<(u32, u32)> {
        let (indeg, outdeg) = self.degrees();
        let mut out_ac = vec![u32::MAX; self.n];
        let mut in_ac = vec![u32::MAX; self.n];
        for (&(t, h), &c) in self.arcs.iter().zip(&self.arc_ac) {
            out_ac[t as usize] = c;
            in_ac[h as usize] = c;
        }
        let entries = (0..self.n).filter(|&v| indeg[v] == 0);
        let exits: Vec<usize> = (0..self.n).filter(|&v| outdeg[v] == 0).collect();
        let mut pairs = Vec::new();
        for u in entries {
            for &v in &exits {
                if !clean || out_ac[u] != in_ac[v] {
                    pairs.push((u as u32, v as u32));
                }
            }
        }
        pairs
    }

    /// Identifies entry `u` with exit `v`; the merged vertex takes `v`'s
    /// place and vertices above `u` shift down.
    fn splice(&self, u: u32, v: u32) -> Raw {
        let fix = |x: u32| {
            let x = if x == u { v } else { x };
            if x > u {
                x - 1
            } else {
                x
            }
        };
        Raw {
            n: self.n - 1,
            arcs: self.arcs.iter().map(|&(t, h)| (fix(t), fix(h))).collect(),
            arc_ac: self.arc_ac.clone(),
        }
    }

    fn code(&self) -> Code {
        canonical_form(self.n, &self.arcs).0
    }

    fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for &(t, h) in &self.arcs {
            uf.union(t as usize, h as usize);
        }
        uf.count() == 1
    }

    fn to_graph(&self) -> TwoDigraph {
        let pairs: Vec<(u32, u32)> = self.arcs.iter().map(|&(t, h)| (t + 1, h + 1)).collect();
        TwoDigraph::from_pairs(&pairs).expect("splices of clean cycles are valid")
    }
}

/// Isomorphism classes by number of splices: entry `j` holds every class
/// of 2-digraphs with `m` cycles of `2k` arcs and exactly `j` saturated
/// vertices, sorted by canonical code.
fn levels(k: usize, m: usize, clean: bool, saturated_only: bool, budget: u64) -> Result<Vec<Vec<(Code, Raw)>>> {
    let start = Raw::crowns(m, k);
    let mut out = vec![vec![(start.code(), start)]];
    let mut spent = 0u64;
    for _ in 0..m * k {
        let prev = out.last().expect("nonempty");
        let candidates: u64 = prev.iter().map(|(_, r)| r.splice_pairs(clean).len() as u64).sum();
        spent = spent.saturating_add(candidates);
        if spent > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let mut next: HashMap<Code, Raw> = HashMap::new();
        for (_, r) in prev {
            for (u, v) in r.splice_pairs(clean) {
                let s = r.splice(u, v);
                next.entry(s.code()).or_insert(s);
            }
        }
        if next.is_empty() {
            break;
        }
        let mut level: Vec<(Code, Raw)> = next.into_iter().collect();
        level.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        if saturated_only {
            // earlier levels are only needed to build the next one
            out.clear();
        }
        out.push(level);
    }
    if saturated_only {
        out.retain(|l| l.first().is_some_and(|(_, r)| r.n == m * k));
    }
    Ok(out)
}

/// One representative per isomorphism class of the family, in canonical
/// form (vertices `1..=n`, arcs numbered in code order), ordered by number
/// of saturated vertices and then by canonical code.
pub fn enumerate_family(spec: &FamilySpec, budget: u64) -> Result<Vec<TwoDigraph>> {
    if spec.is_empty_family() {
        return Ok(Vec::new());
    }
    let clean = spec.has(Constraint::Clean);
    let levels = levels(spec.k, spec.m, clean, spec.has(Constraint::Saturated), budget)?;
    let mut graphs = Vec::new();
    for (code, raw) in levels.iter().flatten() {
        if spec.has(Constraint::Connected) && !raw.is_connected() {
            continue;
        }
        let g = graph_from_code(code)?;
        if spec.has(Constraint::Dirty) && g.is_clean() {
            continue;
        }
        graphs.push(g);
    }
    Ok(graphs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub family: FamilySpec,
    pub total: u64,
    pub connected: u64,
    pub clean_odd_nonham: u64,
    pub split_decided: u64,
}

/// Counts the family (ignoring a `connected` constraint), its connected
/// members, the connected clean odd non-Hamiltonian 2-dds among them, and
/// how many of those the splice-parity procedure decides.
pub fn census(spec: &FamilySpec, budget: u64) -> Result<CensusRow> {
    let mut base = spec.clone();
    base.constraints.remove(&Constraint::Connected);
    let graphs = enumerate_family(&base, budget)?;
    let mut row = CensusRow {
        family: spec.clone(),
        total: graphs.len() as u64,
        connected: 0,
        clean_odd_nonham: 0,
        split_decided: 0,
    };
    for g in graphs.iter().filter(|g| g.is_connected()) {
        row.connected += 1;
        if !g.is_saturated() || !g.is_clean() || parity_class(g, false, DEFAULT_CAP)? != ParityClass::Odd {
            continue;
        }
        if is_hamiltonian_bruteforce(g, 63)?.is_some() {
            continue;
        }
        row.clean_odd_nonham += 1;
        let odd_acs = g.acs().iter().all(|x| x.parity() == crate::perm::Parity::Odd);
        if odd_acs && matches!(certify_by_splitting(g)?, SplitOutcome::NonHamiltonian(_)) {
            row.split_decided += 1;
        }
    }
    Ok(row)
}

/// Splices every entry of `h` with an exit of `g` and every exit of `h`
/// with an entry of `g`; the pairing is shuffled by `seed`. When `h` is
/// closed its cycles form a closed proper subset of the resulting 2-dd.
pub fn construct_closed_splice(h: &TwoDigraph, g: &TwoDigraph, seed: u64) -> Result<TwoDigraph> {
    if h.entry_count() != g.exit_count() || h.exit_count() != g.entry_count() {
        return Err(Error::CountMismatch(format!(
            "H has {} entries and {} exits, G has {} entries and {} exits",
            h.entry_count(),
            h.exit_count(),
            g.entry_count(),
            g.exit_count()
        )));
    }
    if h.entry_count() == 0 {
        return Err(Error::CountMismatch("H has no unsaturated vertices".into()));
    }
    if !h.is_connected() || !g.is_connected() {
        return Err(Error::PreconditionViolated("both graphs must be connected".into()));
    }
    if !is_closed(h, DEFAULT_CAP)? {
        return Err(Error::PreconditionViolated("H is not closed".into()));
    }
    let shift = h.max_label().0;
    let u = h.disjoint_union(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g_exits: Vec<VertexId> = g.exits().iter().map(|v| VertexId(v.0 + shift)).collect();
    let mut g_entries: Vec<VertexId> = g.entries().iter().map(|v| VertexId(v.0 + shift)).collect();
    g_exits.shuffle(&mut rng);
    g_entries.shuffle(&mut rng);
    let mut out = u;
    for (&a, &b) in h.entries().iter().zip(&g_exits) {
        out = out.splice(a, b)?;
    }
    for (&a, &b) in g_entries.iter().zip(&h.exits()) {
        out = out.splice(a, b)?;
    }
    Ok(out)
}

/// For `g1` with a unique open route `r` and a non-Hamiltonian 2-dd `g2`:
/// splits `|r|` saturated vertices of `g2` (chosen by `seed`) and, for each
/// entry `u` of `g1`, splices `u` with one in-half and `r(u)` with the
/// matching out-half. The result is Hamiltonian-equivalent to `g2`.
pub fn construct_unique_route_splice(g1: &TwoDigraph, g2: &TwoDigraph, seed: u64) -> Result<TwoDigraph> {
    if !g1.is_connected() || g1.entry_count() == 0 {
        return Err(Error::PreconditionViolated("G1 must be a connected 2-digraph with unsaturated vertices".into()));
    }
    let routes = open_routes(g1, DEFAULT_CAP)?;
    if routes.len() != 1 {
        return Err(Error::RouteNotUnique(routes.len()));
    }
    let r = &routes[0];
    if !g2.is_saturated() || !g2.is_connected() {
        return Err(Error::PreconditionViolated("G2 must be a connected 2-dd".into()));
    }
    if certify(g2, &CertifyOptions::default()).verdict != Verdict::NonHamiltonian {
        return Err(Error::NotNonHamiltonian);
    }
    if g2.vertex_count() < r.len() {
        return Err(Error::PreconditionViolated(format!(
            "G2 has {} vertices, fewer than the {} route pairs",
            g2.vertex_count(),
            r.len()
        )));
    }
    let shift = g1.max_label().0;
    let mut chosen: Vec<VertexId> = g2.vertices().iter().map(|v| VertexId(v.0 + shift)).collect();
    chosen.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    chosen.truncate(r.len());
    let mut out = g1.disjoint_union(g2);
    for (&(u, ru), &w) in r.mapping.iter().zip(&chosen) {
        let (split, fresh) = out.split_with_label(w)?;
        out = split.splice(u, w)?.splice(fresh, ru)?;
    }
    Ok(out)
}

/// Number of boundary (saturated, non-internal) vertices on each cycle.
pub fn boundary_counts(g: &TwoDigraph) -> Vec<usize> {
    g.acs()
        .iter()
        .map(|x| {
            x.vertices()
                .iter()
                .filter(|&&v| g.kind(v) == Some(crate::graph::VertexKind::Saturated))
                .count()
                - x.internal_vertices().len()
        })
        .collect()
}

/// For a minimally closed, connected, clean 2-digraph with six-arc cycles:
/// every cycle has at least four boundary vertices and there are at least
/// twice as many saturated vertices as cycles.
pub fn check_saturation_bound(g: &TwoDigraph) -> Result<bool> {
    let fail = |why: &str| Err(Error::NotInC6(why.into()));
    if g.acs().iter().any(|x| x.len() != 6) {
        return fail("some cycle does not have six arcs");
    }
    if !g.is_connected() {
        return fail("graph is disconnected");
    }
    if !g.is_clean() {
        return fail("graph is dirty");
    }
    match is_minimally_closed(g, DEFAULT_CAP) {
        Ok(true) => {}
        Ok(false) => return fail("graph is not minimally closed"),
        Err(Error::NotClosed) => return fail("graph is open"),
        Err(e) => return Err(e),
    }
    let boundary_ok = boundary_counts(g).iter().all(|&b| b >= 4);
    Ok(boundary_ok && g.saturated_count() >= 2 * g.ac_count())
}

fn random_raw(m: usize, k: usize, splices: usize, seed: u64) -> Raw {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = Raw::crowns(m, k);
    let mut entries: Vec<u32> = Vec::new();
    let mut exits: Vec<u32> = Vec::new();
    for j in 0..m {
        let base = (2 * j * k) as u32;
        entries.extend(base..base + k as u32);
        exits.extend(base + k as u32..base + 2 * k as u32);
    }
    entries.shuffle(&mut rng);
    exits.shuffle(&mut rng);
    let mut pairs: Vec<(u32, u32)> = entries.into_iter().zip(exits).take(splices.min(m * k)).collect();
    // splice from the highest entry down so earlier indices stay valid
    pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    for i in 0..pairs.len() {
        let (u, v) = pairs[i];
        raw = raw.splice(u, v);
        for p in &mut pairs[i + 1..] {
            if p.1 > u {
                p.1 -= 1;
            }
        }
    }
    raw
}

/// A random 2-dd with `m` cycles of `2k` arcs: disjoint clean cycles with
/// every entry spliced to a uniformly random exit. Deterministic in `seed`.
pub fn random_2dd(m: usize, k: usize, seed: u64) -> TwoDigraph {
    random_raw(m.max(1), k.max(1), m.max(1) * k.max(1), seed).to_graph()
}

/// Like [`random_2dd`] but with only `splices` random splices, so some
/// vertices stay unsaturated.
pub fn random_2digraph(m: usize, k: usize, splices: usize, seed: u64) -> TwoDigraph {
    random_raw(m.max(1), k.max(1), splices, seed).to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ac6::classify_ac6;
    use crate::fixtures;

    #[test]
    fn single_six_arc_family() {
        let all = enumerate_family(&FamilySpec::new(3, 1, []).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 10);
        let names: BTreeSet<_> = all.iter().map(|g| classify_ac6(g).unwrap().name).collect();
        assert_eq!(names.len(), 10);
        let sat = enumerate_family(&"B6_1".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(sat.len(), 3);
    }

    #[test]
    fn small_families() {
        // one cycle of two arcs: a double arc, or a double loop
        let f = enumerate_family(&FamilySpec::new(1, 1, []).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(f.len(), 2);
        let clean_sat = enumerate_family(&"B6_1,clean".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(clean_sat.is_empty());
        let impossible = FamilySpec::new(2, 2, [Constraint::Odd]).unwrap();
        assert!(enumerate_family(&impossible, DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let spec: FamilySpec = "B6_6".parse().unwrap();
        assert_eq!(enumerate_family(&spec, 1000).unwrap_err(), Error::BudgetExceeded { budget: 1000 });
    }

    #[test]
    fn spec_names() {
        let spec: FamilySpec = "B6_4,clean,connected".parse().unwrap();
        assert_eq!((spec.k, spec.m), (3, 4));
        assert_eq!(spec.to_string(), "B6_4,clean,connected");
        assert!("B5_2".parse::<FamilySpec>().is_err());
        assert!("X6_2".parse::<FamilySpec>().is_err());
        assert!("B6_0".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn census_of_single_cycle() {
        let row = census(&"B6_1".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!((row.total, row.connected, row.clean_odd_nonham, row.split_decided), (3, 3, 0, 0));
        let empty = census(&"B6_1,clean".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!((empty.total, empty.connected, empty.clean_odd_nonham, empty.split_decided), (0, 0, 0, 0));
    }

    #[test]
    fn random_graphs_are_deterministic_and_valid() {
        for seed in 0..50 {
            let g = random_2dd(4, 3, seed);
            assert_eq!(g, random_2dd(4, 3, seed));
            assert!(g.is_saturated());
            assert_eq!(g.ac_count(), 4);
            assert!(g.acs().iter().all(|x| x.len() == 6));
            let h = random_2digraph(3, 2, 4, seed);
            assert_eq!(h.saturated_count(), 4);
            assert_eq!(h.arc_count(), 12);
        }
    }

    #[test]
    fn closed_splice_example() {
        let g = construct_closed_splice(&fixtures::xc_2l(), &fixtures::x_2s(), 0).unwrap();
        assert!(g.is_saturated() && g.is_connected());
        let c = certify(&g, &CertifyOptions::default());
        assert_eq!(c.verdict, Verdict::NonHamiltonian);
        assert!(is_hamiltonian_bruteforce(&g, DEFAULT_CAP).unwrap().is_none());
        assert!(matches!(
            construct_closed_splice(&fixtures::xc_2l(), &fixtures::x_clean(), 0),
            Err(Error::CountMismatch(_))
        ));
    }

    #[test]
    fn unique_route_splice_example() {
        let g = construct_unique_route_splice(&fixtures::x_2s(), &fixtures::split_example(), 7).unwrap();
        assert!(g.is_saturated() && g.is_connected());
        assert_eq!(g.ac_count(), 5);
        assert!(is_hamiltonian_bruteforce(&g, DEFAULT_CAP).unwrap().is_none());
        assert_eq!(
            construct_unique_route_splice(&fixtures::x_clean(), &fixtures::split_example(), 0).unwrap_err(),
            Error::RouteNotUnique(2)
        );
        assert_eq!(
            construct_unique_route_splice(&fixtures::x_2s(), &fixtures::doubled_digon(), 0).unwrap_err(),
            Error::NotNonHamiltonian
        );
    }

    #[test]
    fn saturation_bound_membership() {
        assert!(matches!(check_saturation_bound(&fixtures::x_clean()), Err(Error::NotInC6(_))));
        assert!(matches!(check_saturation_bound(&fixtures::closed_example()), Err(Error::NotInC6(_))));
    }
}
