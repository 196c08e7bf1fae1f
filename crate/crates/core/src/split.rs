//! Split sets, split components and the splice-parity certification of odd
//! 2-dds.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{factor, parity_class, ParityClass, Selection, DEFAULT_CAP};
use crate::graph::{Arc, TwoDigraph, UnionFind, VertexId, VertexKind};
use crate::perm::Parity;

pub const DEFAULT_MAX_SPLIT_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SplitSet {
    pub vertices: Vec<VertexId>,
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub split_set: SplitSet,
    pub components: Vec<TwoDigraph>,
    pub spliced: Vec<TwoDigraph>,
    pub parities: Vec<ParityClass>,
}

fn require_saturated_members(g: &TwoDigraph, set: &[VertexId]) -> Result<Vec<usize>> {
    set.iter()
        .map(|&v| match g.kind(v) {
            None => Err(Error::UnknownVertex(v)),
            Some(VertexKind::Saturated) => Ok(g.vertex_index(v).expect("present")),
            Some(_) => Err(Error::NotSaturated(v)),
        })
        .collect()
}

/// Weak component count after splitting the vertices at `idx` (vertex
/// indices), without building the split graph. The out-half of the `j`-th
/// split vertex is node `n + j`.
fn components_after_split(g: &TwoDigraph, idx: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut out_node: Vec<usize> = (0..n).collect();
    for (j, &v) in idx.iter().enumerate() {
        out_node[v] = n + j;
    }
    let mut uf = UnionFind::new(n + idx.len());
    for &(t, h) in g.arc_ends() {
        uf.union(out_node[t as usize], h as usize);
    }
    uf.count()
}

/// Splitting every vertex of `set` increases the number of weak components.
pub fn is_split_set(g: &TwoDigraph, set: &[VertexId]) -> Result<bool> {
    let idx = require_saturated_members(g, set)?;
    let mut uniq = idx.clone();
    uniq.sort_unstable();
    uniq.dedup();
    Ok(!uniq.is_empty() && components_after_split(g, &uniq) > g.component_count())
}

/// All inclusion-minimal split sets with at most `max_size` vertices, by
/// increasing size and then lexicographically by label.
pub fn minimal_split_sets(g: &TwoDigraph, max_size: usize) -> Vec<SplitSet> {
    let sat: Vec<usize> = (0..g.vertex_count()).filter(|&i| g.kind_at(i) == VertexKind::Saturated).collect();
    let base = g.component_count();
    let splits = |idx: &[usize]| components_after_split(g, idx) > base;
    let mut found = Vec::new();
    for size in 1..=max_size.min(sat.len()) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let idx: Vec<usize> = pick.iter().map(|&p| sat[p]).collect();
            // splitting more vertices never merges components, so checking
            // the subsets one smaller settles minimality
            if splits(&idx)
                && (size == 1
                    || (0..size).all(|skip| {
                        let sub: Vec<usize> = idx.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                        !splits(&sub)
                    }))
            {
                found.push(SplitSet {
                    vertices: idx.iter().map(|&i| g.label(i)).collect(),
                    minimal: true,
                });
            }
            if !next_combination(&mut pick, sat.len()) {
                break;
            }
        }
    }
    found
}

/// Advances `pick` to the next `k`-combination of `0..n` in lexicographic
/// order.
pub(crate) fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The subgraph of `g` made of the arcs leaving vertices of `set`.
fn restrict(g: &TwoDigraph, set: &[VertexId]) -> TwoDigraph {
    let keep: BTreeSet<VertexId> = set.iter().copied().collect();
    let arcs: Vec<Arc> = g.arcs().iter().filter(|a| keep.contains(&a.tail)).copied().collect();
    TwoDigraph::build(keep, arcs).expect("component of a valid graph")
}

/// Splits every vertex of `set` and returns the split components ordered by
/// smallest label. Each split vertex `v` keeps its label on the exit half;
/// entry halves get fresh labels above the graph's maximum.
pub fn split_components(g: &TwoDigraph, set: &[VertexId]) -> Result<Vec<TwoDigraph>> {
    if !is_split_set(g, set)? {
        return Err(Error::NotASplitSet);
    }
    let (h, _) = split_all(g, set)?;
    Ok(h.components().iter().map(|c| restrict(&h, c)).collect())
}

/// Splits the vertices of `set` in order; returns the graph and the fresh
/// entry label of each.
fn split_all(g: &TwoDigraph, set: &[VertexId]) -> Result<(TwoDigraph, Vec<VertexId>)> {
    let mut h = g.clone();
    let mut fresh = Vec::with_capacity(set.len());
    for &v in set {
        let (next, out) = h.split_with_label(v)?;
        h = next;
        fresh.push(out);
    }
    Ok((h, fresh))
}

/// Splits the pair `{u, v}` and splices each split component back into a
/// 2-dd: the first result contains `u` (its exit half spliced with the entry
/// half of `v`), the second contains `v`.
pub fn splice_pair(g: &TwoDigraph, u: VertexId, v: VertexId) -> Result<(TwoDigraph, TwoDigraph)> {
    if u == v {
        return Err(Error::NotMinimalPair("the pair must have two distinct vertices".into()));
    }
    if !g.is_saturated() || !g.is_connected() {
        return Err(Error::NotMinimalPair("the graph must be a connected 2-dd".into()));
    }
    if !is_split_set(g, &[u, v])? {
        return Err(Error::NotMinimalPair(format!("{{{u}, {v}}} is not a split set")));
    }
    let (h, fresh) = split_all(g, &[u, v])?;
    let (u_out, v_out) = (fresh[0], fresh[1]);
    let comps = h.components();
    if comps.len() != 2 {
        return Err(Error::NotMinimalPair(format!("splitting gives {} components", comps.len())));
    }
    let side = |x: VertexId| comps.iter().position(|c| c.binary_search(&x).is_ok()).expect("vertex in a component");
    if side(u) != side(v_out) || side(v) != side(u_out) || side(u) == side(v) {
        return Err(Error::NotMinimalPair("halves are not distributed across the two components".into()));
    }
    let g1 = restrict(&h, &comps[side(u)]).splice(v_out, u)?;
    let g2 = restrict(&h, &comps[side(v)]).splice(u_out, v)?;
    Ok((g1, g2))
}

/// Components and spliced pieces of a two-vertex minimal split set, with
/// the parity class of each piece.
pub fn split_report(g: &TwoDigraph, u: VertexId, v: VertexId, exhaustive: bool) -> Result<SplitReport> {
    let (g1, g2) = splice_pair(g, u, v)?;
    let components = split_components(g, &[u, v])?;
    let parities = vec![parity_class(&g1, exhaustive, DEFAULT_CAP)?, parity_class(&g2, exhaustive, DEFAULT_CAP)?];
    Ok(SplitReport {
        split_set: SplitSet {
            vertices: vec![u, v],
            minimal: true,
        },
        components,
        spliced: vec![g1, g2],
        parities,
    })
}

/// One splice-pair step of the procedure: the piece at `path` (branch 0 is
/// the piece holding the first vertex) is split at `pair`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitStep {
    pub path: Vec<u8>,
    pub pair: (VertexId, VertexId),
}

/// Replayable record of a splitting certificate: the steps in the order
/// they were taken, and a piece with an even factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    pub steps: Vec<SplitStep>,
    pub even_piece: Vec<u8>,
    pub selection: Selection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome {
    NonHamiltonian(SplitWitness),
    /// Odd pieces with no two-vertex split set; `G` is Hamiltonian iff all
    /// of them are.
    Undecided(Vec<TwoDigraph>),
}

fn require_odd_acs(g: &TwoDigraph) -> Result<()> {
    if !g.is_saturated() || !g.is_connected() {
        return Err(Error::PreconditionViolated("expected a connected 2-dd".into()));
    }
    if g.acs().iter().any(|x| x.parity() == Parity::Even) {
        return Err(Error::PreconditionViolated("some alternating cycle is even".into()));
    }
    Ok(())
}

fn first_pair(g: &TwoDigraph) -> Option<(VertexId, VertexId)> {
    let sat: Vec<VertexId> = g.saturated();
    let base = g.component_count();
    for i in 0..sat.len() {
        for j in i + 1..sat.len() {
            let idx = [g.vertex_index(sat[i]).expect("present"), g.vertex_index(sat[j]).expect("present")];
            if components_after_split(g, &idx) > base {
                return Some((sat[i], sat[j]));
            }
        }
    }
    None
}

fn forward_parity(g: &TwoDigraph) -> Parity {
    let f = factor(g, &Selection::all_forward(g.ac_count())).expect("length matches");
    Parity::of(f.index())
}

/// Repeatedly splits pieces at their least two-vertex split set and
/// splices them back, until a piece has an even factor (so the input is
/// non-Hamiltonian) or every piece is odd and has no such split set.
/// Smaller pieces are processed first.
pub fn certify_by_splitting(g: &TwoDigraph) -> Result<SplitOutcome> {
    require_odd_acs(g)?;
    let mut steps = Vec::new();
    let mut irreducible = Vec::new();
    let mut stack: Vec<(Vec<u8>, TwoDigraph)> = vec![(Vec::new(), g.clone())];
    while let Some((path, piece)) = stack.pop() {
        if forward_parity(&piece) == Parity::Even {
            return Ok(SplitOutcome::NonHamiltonian(SplitWitness {
                steps,
                even_piece: path,
                selection: Selection::all_forward(piece.ac_count()),
            }));
        }
        let Some(pair) = first_pair(&piece) else {
            irreducible.push(piece);
            continue;
        };
        let (g1, g2) = splice_pair(&piece, pair.0, pair.1)?;
        steps.push(SplitStep { path: path.clone(), pair });
        let mut children = vec![(0u8, g1), (1u8, g2)];
        children.sort_by_key(|(b, c)| (std::cmp::Reverse(c.ac_count()), std::cmp::Reverse(*b)));
        for (b, c) in children {
            let mut p = path.clone();
            p.push(b);
            stack.push((p, c));
        }
    }
    Ok(SplitOutcome::Undecided(irreducible))
}

impl SplitWitness {
    /// Replays the steps and checks that the named piece's factor is even.
    pub fn verify(&self, g: &TwoDigraph) -> Result<bool> {
        if require_odd_acs(g).is_err() {
            return Ok(false);
        }
        let mut pieces: Vec<(Vec<u8>, TwoDigraph)> = vec![(Vec::new(), g.clone())];
        for step in &self.steps {
            let Some(pos) = pieces.iter().position(|(p, _)| *p == step.path) else {
                return Ok(false);
            };
            let (path, piece) = pieces.swap_remove(pos);
            let Ok((g1, g2)) = splice_pair(&piece, step.pair.0, step.pair.1) else {
                return Ok(false);
            };
            for (b, c) in [(0u8, g1), (1u8, g2)] {
                let mut p = path.clone();
                p.push(b);
                pieces.push((p, c));
            }
        }
        let Some((_, piece)) = pieces.iter().find(|(p, _)| *p == self.even_piece) else {
            return Ok(false);
        };
        Ok(factor(piece, &self.selection).is_ok_and(|f| f.index() % 2 == 0))
    }
}

/// Splits `v1` in `g1` and `v2` in `g2` and cross-splices the halves. For
/// connected even 2-dds with odd alternating cycles the result is odd and
/// non-Hamiltonian. `g2` is shifted past `g1`'s labels and arc ids.
pub fn even_pair_splice(g1: &TwoDigraph, g2: &TwoDigraph, v1: VertexId, v2: VertexId) -> Result<TwoDigraph> {
    for g in [g1, g2] {
        if !g.is_saturated() || parity_class(g, false, DEFAULT_CAP)? != ParityClass::Even {
            return Err(Error::NotEven);
        }
    }
    for (g, v) in [(g1, v1), (g2, v2)] {
        if g.kind(v) != Some(VertexKind::Saturated) {
            return Err(if g.contains(v) { Error::NotSaturated(v) } else { Error::UnknownVertex(v) });
        }
    }
    let u = g1.disjoint_union(g2);
    let v2 = VertexId(v2.0 + g1.max_label().0);
    let (h, fresh) = split_all(&u, &[v1, v2])?;
    h.splice(fresh[1], v1)?.splice(fresh[0], v2)
}
