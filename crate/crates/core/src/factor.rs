//! Factors, indices, routes and the open/closed and odd/even status of
//! 2-digraphs.
//!
//! A factor is fixed by choosing the forward or backward half of every
//! alternating cycle, so a graph with `m` cycles has exactly `2^m` factors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ArcId, TwoDigraph, VertexId, VertexKind};
use crate::perm::{self, Parity};

/// Default ceiling on the number of alternating cycles for exhaustive
/// factor enumeration.
pub const DEFAULT_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    Forward,
    Backward,
}

impl Half {
    pub fn other(self) -> Half {
        match self {
            Half::Forward => Half::Backward,
            Half::Backward => Half::Forward,
        }
    }

    fn offset(self) -> usize {
        match self {
            Half::Forward => 0,
            Half::Backward => 1,
        }
    }
}

/// One half per alternating cycle, in canonical cycle order.
///
/// Serialized as a string of `0` (forward) and `1` (backward) characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Selection {
    bits: Vec<bool>,
}

impl Selection {
    pub fn all_forward(len: usize) -> Self {
        Selection { bits: vec![false; len] }
    }

    /// Bit `i` of `index` picks the half of cycle `i`.
    pub fn from_index(len: usize, index: u64) -> Self {
        Selection {
            bits: (0..len).map(|i| i < 64 && index >> i & 1 == 1).collect(),
        }
    }

    pub fn from_halves(halves: impl IntoIterator<Item = Half>) -> Self {
        Selection {
            bits: halves.into_iter().map(|h| h == Half::Backward).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn half(&self, ac: usize) -> Half {
        if self.bits[ac] {
            Half::Backward
        } else {
            Half::Forward
        }
    }

    pub fn halves(&self) -> impl Iterator<Item = Half> + '_ {
        (0..self.bits.len()).map(|i| self.half(i))
    }

    pub fn complement(&self) -> Selection {
        Selection {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn to_index(&self) -> Option<u64> {
        (self.bits.len() <= 64).then(|| {
            self.bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i)
        })
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl From<Selection> for String {
    fn from(s: Selection) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Selection {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid selection character {other:?}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(|bits| Selection { bits })
    }
}

/// A spanning 1-digraph: disjoint simple cycles and simple paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    selection: Selection,
    arcs: Vec<ArcId>,
    cycles: Vec<Vec<VertexId>>,
    paths: Vec<Vec<VertexId>>,
    vertex_count: usize,
    permutation_parity: Option<Parity>,
}

impl Factor {
    pub fn selection(&self) -> &Selection {
        &self.selection
    }

    /// Arc ids of the factor, sorted.
    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    /// Each cycle as a vertex sequence starting at its smallest label.
    pub fn cycles(&self) -> &[Vec<VertexId>] {
        &self.cycles
    }

    /// Each path as a vertex sequence from its entry vertex to its exit vertex.
    pub fn paths(&self) -> &[Vec<VertexId>] {
        &self.paths
    }

    /// `i(F)`, the number of cycles.
    pub fn index(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_open(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Number of components of the factor (cycles plus paths).
    pub fn component_count(&self) -> usize {
        self.cycles.len() + self.paths.len()
    }

    /// Parity of the factor viewed as a permutation of the vertices; only
    /// defined when there are no paths.
    pub fn permutation_parity(&self) -> Option<Parity> {
        self.permutation_parity
    }

    pub fn is_hamiltonian_cycle(&self) -> bool {
        self.paths.is_empty() && self.cycles.len() == 1 && self.cycles[0].len() == self.vertex_count
    }

    pub fn route(&self) -> Option<Route> {
        if self.paths.is_empty() {
            return None;
        }
        let mapping = self
            .paths
            .iter()
            .map(|p| (p[0], *p.last().expect("nonempty path")))
            .collect();
        Some(Route {
            mapping,
            open: self.is_open(),
        })
    }
}

/// The entry-to-exit bijection induced by a factor's paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Route {
    /// Pairs `(entry, exit)`, sorted by entry.
    pub mapping: Vec<(VertexId, VertexId)>,
    pub open: bool,
}

impl Route {
    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn image(&self, entry: VertexId) -> Option<VertexId> {
        self.mapping
            .binary_search_by_key(&entry, |&(u, _)| u)
            .ok()
            .map(|i| self.mapping[i].1)
    }

    pub fn preimage(&self, exit: VertexId) -> Option<VertexId> {
        self.mapping.iter().find(|&&(_, v)| v == exit).map(|&(u, _)| u)
    }

    /// The route as a permutation of `0..n`, with entry and exit vertices
    /// each numbered in ascending label order.
    pub fn permutation(&self) -> Vec<usize> {
        let mut exits: Vec<VertexId> = self.mapping.iter().map(|&(_, v)| v).collect();
        exits.sort_unstable();
        self.mapping
            .iter()
            .map(|&(_, v)| exits.binary_search(&v).expect("exit present"))
            .collect()
    }

    pub fn parity(&self) -> Parity {
        perm::sign(&self.permutation())
    }

    pub fn same_mapping(&self, other: &Route) -> bool {
        self.mapping == other.mapping
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (u, v)) in self.mapping.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityClass {
    Odd,
    Even,
    Mixed,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::Odd => "odd",
            ParityClass::Even => "even",
            ParityClass::Mixed => "mixed",
        })
    }
}

/// Arc endpoints of each half of each alternating cycle, as vertex indices,
/// for tight enumeration loops that never build a [`Factor`].
pub(crate) struct Kernel {
    n: usize,
    halves: Vec<[Vec<(u32, u32)>; 2]>,
}

pub(crate) struct Scratch {
    succ: Vec<u32>,
    has_pred: Vec<bool>,
    seen: Vec<bool>,
    touched: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Kernel {
    pub(crate) fn new(g: &TwoDigraph) -> Self {
        let ends = g.arc_ends();
        let halves = (0..g.ac_count())
            .map(|c| {
                let seq = g.ac_arc_indices(c);
                let pick = |off: usize| seq.iter().skip(off).step_by(2).map(|&e| ends[e as usize]).collect();
                [pick(0), pick(1)]
            })
            .collect();
        Kernel {
            n: g.vertex_count(),
            halves,
        }
    }

    pub(crate) fn scratch(&self) -> Scratch {
        Scratch {
            succ: vec![NONE; self.n],
            has_pred: vec![false; self.n],
            seen: vec![false; self.n],
            touched: Vec::with_capacity(self.n),
        }
    }

    /// Number of cycles of the partial factor choosing, for each `acs[i]`,
    /// the backward half when bit `i` of `mask` is set. With `stop_at_first`
    /// the count is capped at 1.
    pub(crate) fn cycles(&self, acs: &[usize], mask: u64, s: &mut Scratch, stop_at_first: bool) -> usize {
        for (i, &c) in acs.iter().enumerate() {
            for &(t, h) in &self.halves[c][(mask >> i & 1) as usize] {
                s.succ[t as usize] = h;
                s.has_pred[h as usize] = true;
                s.touched.push(t);
                s.touched.push(h);
            }
        }
        // walk paths from their starts; what remains unseen lies on cycles
        for k in 0..s.touched.len() {
            let v = s.touched[k] as usize;
            if !s.has_pred[v] && !s.seen[v] {
                let mut w = v;
                loop {
                    s.seen[w] = true;
                    match s.succ[w] {
                        NONE => break,
                        next => w = next as usize,
                    }
                }
            }
        }
        let mut cycles = 0;
        for k in 0..s.touched.len() {
            let v = s.touched[k] as usize;
            if !s.seen[v] {
                cycles += 1;
                if stop_at_first {
                    break;
                }
                let mut w = v;
                while !s.seen[w] {
                    s.seen[w] = true;
                    w = s.succ[w] as usize;
                }
            }
        }
        for &v in &s.touched {
            s.succ[v as usize] = NONE;
            s.has_pred[v as usize] = false;
            s.seen[v as usize] = false;
        }
        s.touched.clear();
        cycles
    }
}

fn check_cap(g: &TwoDigraph, cap: usize) -> Result<()> {
    if g.ac_count() > cap || g.ac_count() > 63 {
        return Err(Error::TooManyAcs {
            acs: g.ac_count(),
            cap: cap.min(63),
        });
    }
    Ok(())
}

/// The factor made of the chosen half of every alternating cycle.
pub fn factor(g: &TwoDigraph, sel: &Selection) -> Result<Factor> {
    if sel.len() != g.ac_count() {
        return Err(Error::LengthMismatch {
            expected: g.ac_count(),
            found: sel.len(),
        });
    }
    let n = g.vertex_count();
    let ends = g.arc_ends();
    let mut succ = vec![NONE; n];
    let mut succ_arc = vec![NONE; n];
    let mut arcs = Vec::with_capacity(n);
    for (c, half) in sel.halves().enumerate() {
        for &e in g.ac_arc_indices(c).iter().skip(half.offset()).step_by(2) {
            let (t, h) = ends[e as usize];
            succ[t as usize] = h;
            succ_arc[t as usize] = e;
            arcs.push(g.arcs()[e as usize].id);
        }
    }
    arcs.sort_unstable();

    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for v in 0..n {
        if g.kind_at(v) == VertexKind::Entry {
            let mut path = Vec::new();
            let mut w = v;
            loop {
                seen[w] = true;
                path.push(g.label(w));
                match succ[w] {
                    NONE => break,
                    next => w = next as usize,
                }
            }
            paths.push(path);
        }
    }
    let mut cycles = Vec::new();
    for v in 0..n {
        if !seen[v] {
            let mut cycle = Vec::new();
            let mut w = v;
            while !seen[w] {
                seen[w] = true;
                cycle.push(g.label(w));
                w = succ[w] as usize;
            }
            cycles.push(cycle);
        }
    }

    let permutation_parity = paths.is_empty().then(|| {
        let p: Vec<usize> = succ.iter().map(|&s| s as usize).collect();
        perm::sign(&p)
    });
    Ok(Factor {
        selection: sel.clone(),
        arcs,
        cycles,
        paths,
        vertex_count: n,
        permutation_parity,
    })
}

/// All `2^|C|` factors, in selection-index order.
pub fn enumerate_factors(g: &TwoDigraph, cap: usize) -> Result<impl Iterator<Item = Factor> + '_> {
    check_cap(g, cap)?;
    let m = g.ac_count();
    Ok((0..1u64 << m).map(move |i| factor(g, &Selection::from_index(m, i)).expect("selection length matches")))
}

/// `i(G)`, the smallest factor index.
pub fn index_of(g: &TwoDigraph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    let acs: Vec<usize> = (0..g.ac_count()).collect();
    let mut best = usize::MAX;
    for mask in 0..1u64 << acs.len() {
        best = best.min(kernel.cycles(&acs, mask, &mut s, false));
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

fn require_saturated(g: &TwoDigraph) -> Result<()> {
    match g.vertices().iter().find(|&&v| g.kind(v) != Some(VertexKind::Saturated)) {
        Some(&v) => Err(Error::NotSaturated(v)),
        None => Ok(()),
    }
}

/// Exhaustive Hamiltonicity test for a 2-dd: returns a factor that is a
/// single spanning cycle, or `None`.
pub fn is_hamiltonian_bruteforce(g: &TwoDigraph, cap: usize) -> Result<Option<Factor>> {
    require_saturated(g)?;
    check_cap(g, cap)?;
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    let acs: Vec<usize> = (0..g.ac_count()).collect();
    for mask in 0..1u64 << acs.len() {
        if kernel.cycles(&acs, mask, &mut s, false) == 1 {
            let f = factor(g, &Selection::from_index(acs.len(), mask))?;
            return Ok(f.is_hamiltonian_cycle().then_some(f));
        }
    }
    Ok(None)
}

/// True when the subgraph on `acs` has a factor without cycles.
pub(crate) fn subset_is_open(kernel: &Kernel, acs: &[usize], s: &mut Scratch) -> bool {
    (0..1u64 << acs.len()).any(|mask| kernel.cycles(acs, mask, s, true) == 0)
}

/// Every factor has a cycle.
pub fn is_closed(g: &TwoDigraph, cap: usize) -> Result<bool> {
    is_open(g, cap).map(|open| !open)
}

/// Some factor has no cycle.
pub fn is_open(g: &TwoDigraph, cap: usize) -> Result<bool> {
    check_cap(g, cap)?;
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    let acs: Vec<usize> = (0..g.ac_count()).collect();
    Ok(subset_is_open(&kernel, &acs, &mut s))
}

/// Closed, and splitting any single saturated vertex opens it.
pub fn is_minimally_closed(g: &TwoDigraph, cap: usize) -> Result<bool> {
    if is_open(g, cap)? {
        return Err(Error::NotClosed);
    }
    for v in g.saturated() {
        if is_closed(&g.split(v)?, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index parity across all factors of a 2-dd.
///
/// When every alternating cycle is odd the class is decided from the
/// all-forward factor alone, since toggling an odd cycle's half preserves
/// the index parity; `exhaustive` enumerates every factor regardless.
pub fn parity_class(g: &TwoDigraph, exhaustive: bool, cap: usize) -> Result<ParityClass> {
    require_saturated(g)?;
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    let acs: Vec<usize> = (0..g.ac_count()).collect();
    let all_odd = g.acs().iter().all(|x| x.parity() == Parity::Odd);
    let class_of = |p: Parity| match p {
        Parity::Odd => ParityClass::Odd,
        Parity::Even => ParityClass::Even,
    };
    if all_odd && !exhaustive {
        let i = kernel.cycles(&acs, 0, &mut s, false);
        return Ok(class_of(Parity::of(i)));
    }
    check_cap(g, cap)?;
    let first = Parity::of(kernel.cycles(&acs, 0, &mut s, false));
    for mask in 1..1u64 << acs.len() {
        if Parity::of(kernel.cycles(&acs, mask, &mut s, false)) != first {
            return Ok(ParityClass::Mixed);
        }
    }
    Ok(class_of(first))
}

/// The route of a factor; fails on a factor of a saturated graph.
pub fn route_of(f: &Factor) -> Result<Route> {
    f.route().ok_or(Error::SaturatedGraph)
}

/// Distinct open routes, sorted by mapping.
pub fn open_routes(g: &TwoDigraph, cap: usize) -> Result<Vec<Route>> {
    Ok(open_routes_with_selections(g, cap)?.into_keys().collect())
}

/// Each distinct open route with the first selection (in index order)
/// defining it.
pub(crate) fn open_routes_with_selections(g: &TwoDigraph, cap: usize) -> Result<BTreeMap<Route, Selection>> {
    if g.entry_count() == 0 {
        return Err(Error::SaturatedGraph);
    }
    check_cap(g, cap)?;
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    let m = g.ac_count();
    let acs: Vec<usize> = (0..m).collect();
    let mut routes = BTreeMap::new();
    for mask in 0..1u64 << m {
        if kernel.cycles(&acs, mask, &mut s, true) == 0 {
            let sel = Selection::from_index(m, mask);
            let r = factor(g, &sel)?.route().expect("unsaturated graph");
            routes.entry(r).or_insert(sel);
        }
    }
    Ok(routes)
}

/// For a 2-digraph whose alternating cycles are all odd: checks that routes
/// of odd-index and even-index factors never coincide and that each group
/// has uniform permutation parity. Returns the parity of each group, or
/// `None` for an empty group.
pub fn route_parity_partition(g: &TwoDigraph, cap: usize) -> Result<(Option<Parity>, Option<Parity>)> {
    if g.acs().iter().any(|x| x.parity() == Parity::Even) {
        return Err(Error::PreconditionViolated("some alternating cycle is even".into()));
    }
    if g.entry_count() == 0 {
        return Err(Error::SaturatedGraph);
    }
    let mut by_index_parity: [BTreeSet<Vec<(VertexId, VertexId)>>; 2] = Default::default();
    let mut perm_parity: [Option<Parity>; 2] = [None, None];
    for f in enumerate_factors(g, cap)? {
        let r = f.route().expect("unsaturated graph");
        let slot = f.index() % 2;
        let p = r.parity();
        match perm_parity[slot] {
            None => perm_parity[slot] = Some(p),
            Some(q) if q != p => return Err(Error::MixedParityFound),
            Some(_) => {}
        }
        by_index_parity[slot].insert(r.mapping);
    }
    if by_index_parity[0].intersection(&by_index_parity[1]).next().is_some() {
        return Err(Error::MixedParityFound);
    }
    Ok((perm_parity[1], perm_parity[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn doubled_digon() -> TwoDigraph {
        TwoDigraph::from_pairs(&[(1, 2), (1, 2), (2, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn doubled_digon_factors_by_hand() {
        let g = doubled_digon();
        let fs: Vec<Factor> = enumerate_factors(&g, DEFAULT_CAP).unwrap().collect();
        assert_eq!(fs.len(), 4);
        // every factor is one 2-cycle u->v->u
        for f in &fs {
            assert_eq!(f.index(), 1);
            assert!(f.is_hamiltonian_cycle());
            assert_eq!(f.permutation_parity(), Some(Parity::Odd));
        }
        assert_eq!(fs[0].arcs(), &[ArcId(0), ArcId(2)]);
        assert_eq!(index_of(&g, DEFAULT_CAP).unwrap(), 1);
        assert_eq!(parity_class(&g, true, DEFAULT_CAP).unwrap(), ParityClass::Odd);
        let w = is_hamiltonian_bruteforce(&g, DEFAULT_CAP).unwrap().unwrap();
        assert_eq!(w.arcs(), &[ArcId(0), ArcId(2)]);
    }

    #[test]
    fn xclean_routes() {
        let g = fixtures::x_clean();
        let fwd = factor(&g, &Selection::all_forward(1)).unwrap();
        assert_eq!(fwd.paths().len(), 3);
        assert!(fwd.is_open());
        let r = route_of(&fwd).unwrap();
        let v = |x| VertexId(x);
        assert_eq!(r.mapping, vec![(v(1), v(2)), (v(3), v(4)), (v(5), v(6))]);
        assert_eq!(r.permutation(), vec![0, 1, 2]);
        assert_eq!(r.parity(), Parity::Even);

        let bwd = factor(&g, &Selection::from_index(1, 1)).unwrap();
        let r = route_of(&bwd).unwrap();
        assert_eq!(r.mapping, vec![(v(1), v(6)), (v(3), v(2)), (v(5), v(4))]);
        assert_eq!(r.permutation(), vec![2, 0, 1]);
        assert_eq!(r.parity(), Parity::Even);

        assert_eq!(index_of(&g, DEFAULT_CAP).unwrap(), 0);
        assert_eq!(open_routes(&g, DEFAULT_CAP).unwrap().len(), 2);
        assert_eq!(
            route_parity_partition(&g, DEFAULT_CAP).unwrap(),
            (None, Some(Parity::Even))
        );
    }

    #[test]
    fn xc3s_factors_are_three_cycles() {
        let g = fixtures::xc_3s();
        for f in enumerate_factors(&g, DEFAULT_CAP).unwrap() {
            assert_eq!(f.index(), 1);
            assert_eq!(f.cycles()[0].len(), 3);
        }
        assert!(is_closed(&g, DEFAULT_CAP).unwrap());
        assert!(is_minimally_closed(&g, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn open_and_closed_single_cycles() {
        assert!(is_closed(&fixtures::xc_2l(), DEFAULT_CAP).unwrap());
        assert!(is_open(&fixtures::x_1s(), DEFAULT_CAP).unwrap());
        assert_eq!(open_routes(&fixtures::x_2s(), DEFAULT_CAP).unwrap().len(), 1);
        assert_eq!(
            is_minimally_closed(&fixtures::x_clean(), DEFAULT_CAP).unwrap_err(),
            Error::NotClosed
        );
    }

    #[test]
    fn saturated_graph_has_no_routes() {
        assert_eq!(open_routes(&doubled_digon(), 30).unwrap_err(), Error::SaturatedGraph);
        let f = factor(&doubled_digon(), &Selection::all_forward(2)).unwrap();
        assert_eq!(route_of(&f).unwrap_err(), Error::SaturatedGraph);
    }

    #[test]
    fn errors() {
        let g = doubled_digon();
        assert_eq!(
            factor(&g, &Selection::all_forward(3)).unwrap_err(),
            Error::LengthMismatch { expected: 2, found: 3 }
        );
        assert_eq!(index_of(&g, 1).unwrap_err(), Error::TooManyAcs { acs: 2, cap: 1 });
        assert!(matches!(
            is_hamiltonian_bruteforce(&fixtures::x_clean(), 30),
            Err(Error::NotSaturated(_))
        ));
    }

    #[test]
    fn selection_serializes_as_bit_string() {
        let s = Selection::from_index(4, 0b0110);
        assert_eq!(s.to_string(), "0110");
        assert_eq!(Selection::try_from("0110".to_string()).unwrap(), s);
        assert_eq!(s.to_index(), Some(6));
        assert_eq!(s.complement().to_string(), "1001");
    }
}
