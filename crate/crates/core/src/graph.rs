//! Multigraph model for 2-digraphs and their alternating-cycle decomposition.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A directed arc. Arcs are entities: loops and parallel arcs are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub id: ArcId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn new(id: u32, tail: u32, head: u32) -> Self {
        Arc {
            id: ArcId(id),
            tail: VertexId(tail),
            head: VertexId(head),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// (in, out) = (0, 2)
    Entry,
    /// (in, out) = (2, 0)
    Exit,
    /// (in, out) = (2, 2)
    Saturated,
}

/// One alternating cycle `(e0, e1, ..., e_{2r-1})`.
///
/// Consecutive arcs share their end-vertex after an even position and their
/// start-vertex after an odd one. `e0` is the lowest arc id of the cycle and
/// is traversed forward, so the forward half is the one holding that arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternatingCycle {
    arcs: Vec<ArcId>,
    vertices: Vec<VertexId>,
    internal: Vec<VertexId>,
}

impl AlternatingCycle {
    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn lowest_arc(&self) -> ArcId {
        self.arcs[0]
    }

    /// Arcs at even positions.
    pub fn forward(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.arcs.iter().step_by(2).copied()
    }

    /// Arcs at odd positions.
    pub fn backward(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.arcs.iter().skip(1).step_by(2).copied()
    }

    /// `r`, half the number of arcs.
    pub fn half_len(&self) -> usize {
        self.arcs.len() / 2
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.half_len())
    }

    /// Sorted labels of every endpoint of the cycle's arcs.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Saturated vertices all four of whose arcs lie in this cycle.
    pub fn internal_vertices(&self) -> &[VertexId] {
        &self.internal
    }

    pub fn is_clean(&self) -> bool {
        self.internal.is_empty()
    }
}

/// An immutable 2-digraph with its vertex classification and canonical
/// alternating-cycle decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDigraph {
    labels: Vec<VertexId>,
    arcs: Vec<Arc>,
    ends: Vec<(u32, u32)>,
    in_arcs: Vec<Vec<u32>>,
    out_arcs: Vec<Vec<u32>>,
    kinds: Vec<VertexKind>,
    acs: Vec<AlternatingCycle>,
    ac_arcs: Vec<Vec<u32>>,
    arc_ac: Vec<u32>,
}

impl TwoDigraph {
    /// Builds a graph from explicit vertex labels and arcs, classifying the
    /// vertices and computing the alternating-cycle decomposition.
    pub fn build(
        vertex_labels: impl IntoIterator<Item = VertexId>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let mut labels: Vec<VertexId> = vertex_labels.into_iter().collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort_unstable_by_key(|a| a.id);
        if let Some(w) = arcs.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateArc(w[0].id));
        }

        let n = labels.len();
        let mut ends = Vec::with_capacity(arcs.len());
        let mut in_arcs = vec![Vec::with_capacity(2); n];
        let mut out_arcs = vec![Vec::with_capacity(2); n];
        for (i, a) in arcs.iter().enumerate() {
            let t = labels.binary_search(&a.tail).map_err(|_| Error::DanglingEndpoint(a.id))?;
            let h = labels.binary_search(&a.head).map_err(|_| Error::DanglingEndpoint(a.id))?;
            ends.push((t as u32, h as u32));
            out_arcs[t].push(i as u32);
            in_arcs[h].push(i as u32);
        }

        let mut kinds = Vec::with_capacity(n);
        for v in 0..n {
            let kind = match (in_arcs[v].len(), out_arcs[v].len()) {
                (0, 2) => VertexKind::Entry,
                (2, 0) => VertexKind::Exit,
                (2, 2) => VertexKind::Saturated,
                (indeg, outdeg) => {
                    return Err(Error::DegreeViolation {
                        vertex: labels[v],
                        indeg,
                        outdeg,
                    })
                }
            };
            kinds.push(kind);
        }

        let ac_arcs = decompose(&ends, &in_arcs, &out_arcs);
        let mut arc_ac = vec![0u32; arcs.len()];
        for (c, seq) in ac_arcs.iter().enumerate() {
            for &e in seq {
                arc_ac[e as usize] = c as u32;
            }
        }

        let mut g = TwoDigraph {
            labels,
            arcs,
            ends,
            in_arcs,
            out_arcs,
            kinds,
            acs: Vec::new(),
            ac_arcs,
            arc_ac,
        };
        g.acs = (0..g.ac_arcs.len()).map(|c| g.describe_ac(c)).collect();
        Ok(g)
    }

    /// Builds a graph from `(id, tail, head)` triples; vertices are implied
    /// by the endpoints.
    pub fn from_arcs(arcs: &[(u32, u32, u32)]) -> Result<Self> {
        let arcs: Vec<Arc> = arcs.iter().map(|&(id, t, h)| Arc::new(id, t, h)).collect();
        let vertices: BTreeSet<VertexId> = arcs.iter().flat_map(|a| [a.tail, a.head]).collect();
        Self::build(vertices, arcs)
    }

    /// Builds a graph from `(tail, head)` pairs, numbering arcs from 0.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let triples: Vec<_> = pairs.iter().enumerate().map(|(i, &(t, h))| (i as u32, t, h)).collect();
        Self::from_arcs(&triples)
    }

    fn describe_ac(&self, c: usize) -> AlternatingCycle {
        let seq = &self.ac_arcs[c];
        let arcs = seq.iter().map(|&e| self.arcs[e as usize].id).collect();
        let mut vs: Vec<u32> = seq
            .iter()
            .flat_map(|&e| {
                let (t, h) = self.ends[e as usize];
                [t, h]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        let internal = vs
            .iter()
            .filter(|&&v| {
                let v = v as usize;
                self.kinds[v] == VertexKind::Saturated
                    && self.arc_ac[self.in_arcs[v][0] as usize] as usize == c
                    && self.arc_ac[self.out_arcs[v][0] as usize] as usize == c
            })
            .map(|&v| self.labels[v as usize])
            .collect();
        AlternatingCycle {
            arcs,
            vertices: vs.iter().map(|&v| self.labels[v as usize]).collect(),
            internal,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    /// Arcs sorted by id.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Alternating cycles, sorted by lowest arc id.
    pub fn acs(&self) -> &[AlternatingCycle] {
        &self.acs
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn ac_count(&self) -> usize {
        self.acs.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertex_index(v).is_some()
    }

    pub fn kind(&self, v: VertexId) -> Option<VertexKind> {
        self.vertex_index(v).map(|i| self.kinds[i])
    }

    pub fn arc(&self, id: ArcId) -> Option<&Arc> {
        self.arc_index(id).map(|i| &self.arcs[i])
    }

    /// Index of the alternating cycle holding `id`.
    pub fn ac_of_arc(&self, id: ArcId) -> Option<usize> {
        self.arc_index(id).map(|i| self.arc_ac[i] as usize)
    }

    /// Index of the alternating cycle whose lowest arc is `id`.
    pub fn ac_by_lowest_arc(&self, id: ArcId) -> Option<usize> {
        self.acs.binary_search_by_key(&id, |x| x.lowest_arc()).ok()
    }

    fn of_kind(&self, kind: VertexKind) -> Vec<VertexId> {
        self.labels
            .iter()
            .zip(&self.kinds)
            .filter(|(_, &k)| k == kind)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn entries(&self) -> Vec<VertexId> {
        self.of_kind(VertexKind::Entry)
    }

    pub fn exits(&self) -> Vec<VertexId> {
        self.of_kind(VertexKind::Exit)
    }

    pub fn saturated(&self) -> Vec<VertexId> {
        self.of_kind(VertexKind::Saturated)
    }

    pub fn saturated_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == VertexKind::Saturated).count()
    }

    pub fn entry_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == VertexKind::Entry).count()
    }

    pub fn exit_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == VertexKind::Exit).count()
    }

    /// True when every vertex is saturated, i.e. the graph is a 2-dd.
    pub fn is_saturated(&self) -> bool {
        self.kinds.iter().all(|&k| k == VertexKind::Saturated)
    }

    pub fn is_clean(&self) -> bool {
        self.acs.iter().all(AlternatingCycle::is_clean)
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.is_loop()).count()
    }

    pub fn max_label(&self) -> VertexId {
        self.labels.last().copied().unwrap_or(VertexId(0))
    }

    pub fn max_arc_id(&self) -> ArcId {
        self.arcs.last().map(|a| a.id).unwrap_or(ArcId(0))
    }

    pub fn in_arcs(&self, v: VertexId) -> Vec<ArcId> {
        self.vertex_index(v)
            .map(|i| self.in_arcs[i].iter().map(|&e| self.arcs[e as usize].id).collect())
            .unwrap_or_default()
    }

    pub fn out_arcs(&self, v: VertexId) -> Vec<ArcId> {
        self.vertex_index(v)
            .map(|i| self.out_arcs[i].iter().map(|&e| self.arcs[e as usize].id).collect())
            .unwrap_or_default()
    }

    pub(crate) fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub(crate) fn arc_index(&self, id: ArcId) -> Option<usize> {
        self.arcs.binary_search_by_key(&id, |a| a.id).ok()
    }

    pub(crate) fn label(&self, i: usize) -> VertexId {
        self.labels[i]
    }

    pub(crate) fn arc_ends(&self) -> &[(u32, u32)] {
        &self.ends
    }

    pub(crate) fn ac_arc_indices(&self, c: usize) -> &[u32] {
        &self.ac_arcs[c]
    }

    pub(crate) fn kind_at(&self, i: usize) -> VertexKind {
        self.kinds[i]
    }

    /// Replaces saturated `v` by an exit vertex `v` (keeping the in-arcs) and
    /// a fresh entry vertex `max_label + 1` (taking the out-arcs).
    pub fn split(&self, v: VertexId) -> Result<TwoDigraph> {
        self.split_with_label(v).map(|(g, _)| g)
    }

    /// Like [`split`](Self::split), also returning the label of the new
    /// entry vertex.
    pub fn split_with_label(&self, v: VertexId) -> Result<(TwoDigraph, VertexId)> {
        match self.kind(v) {
            None => return Err(Error::UnknownVertex(v)),
            Some(VertexKind::Saturated) => {}
            Some(_) => return Err(Error::NotSaturated(v)),
        }
        let fresh = VertexId(self.max_label().0 + 1);
        let arcs = self.arcs.iter().map(|a| Arc {
            tail: if a.tail == v { fresh } else { a.tail },
            ..*a
        });
        let vertices = self.labels.iter().copied().chain(std::iter::once(fresh));
        Ok((TwoDigraph::build(vertices, arcs)?, fresh))
    }

    /// Identifies entry `u` with exit `v`. The merged saturated vertex keeps
    /// the label `v`, so splicing the halves of a split restores the graph.
    pub fn splice(&self, u: VertexId, v: VertexId) -> Result<TwoDigraph> {
        match self.kind(u) {
            None => return Err(Error::UnknownVertex(u)),
            Some(VertexKind::Entry) => {}
            Some(_) => return Err(Error::NotEntry(u)),
        }
        match self.kind(v) {
            None => return Err(Error::UnknownVertex(v)),
            Some(VertexKind::Exit) => {}
            Some(_) => return Err(Error::NotExit(v)),
        }
        let arcs = self.arcs.iter().map(|a| Arc {
            tail: if a.tail == u { v } else { a.tail },
            ..*a
        });
        let vertices = self.labels.iter().copied().filter(|&w| w != u);
        TwoDigraph::build(vertices, arcs)
    }

    /// Subgraph spanned by the arcs of the given alternating cycles.
    pub fn induced_subgraph(&self, acs: &[usize]) -> Result<TwoDigraph> {
        if acs.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut keep = vec![false; self.acs.len()];
        for &c in acs {
            *keep.get_mut(c).ok_or(Error::UnknownAc(c))? = true;
        }
        let arcs: Vec<Arc> = self
            .arcs
            .iter()
            .zip(&self.arc_ac)
            .filter(|(_, &c)| keep[c as usize])
            .map(|(a, _)| *a)
            .collect();
        let vertices: BTreeSet<VertexId> = arcs.iter().flat_map(|a| [a.tail, a.head]).collect();
        TwoDigraph::build(vertices, arcs)
    }

    /// Shifts every vertex label by `vertex_offset` and every arc id by
    /// `arc_offset`.
    pub fn shifted(&self, vertex_offset: u32, arc_offset: u32) -> TwoDigraph {
        let arcs = self.arcs.iter().map(|a| Arc {
            id: ArcId(a.id.0 + arc_offset),
            tail: VertexId(a.tail.0 + vertex_offset),
            head: VertexId(a.head.0 + vertex_offset),
        });
        let vertices = self.labels.iter().map(|v| VertexId(v.0 + vertex_offset));
        TwoDigraph::build(vertices, arcs).expect("shifting preserves validity")
    }

    /// Disjoint union with `other` shifted past this graph's labels and ids.
    pub fn disjoint_union(&self, other: &TwoDigraph) -> TwoDigraph {
        let shifted = other.shifted(self.max_label().0, self.max_arc_id().0 + 1);
        let vertices = self.labels.iter().chain(&shifted.labels).copied();
        let arcs = self.arcs.iter().chain(&shifted.arcs).copied();
        TwoDigraph::build(vertices, arcs).expect("disjoint union of valid graphs")
    }

    /// Relabels vertices to `1..=n` and arcs to `0..m`, preserving order.
    pub fn compacted(&self) -> TwoDigraph {
        let arcs = self.arcs.iter().zip(&self.ends).enumerate().map(|(i, (_, &(t, h)))| {
            Arc::new(i as u32, t + 1, h + 1)
        });
        TwoDigraph::build((1..=self.labels.len() as u32).map(VertexId), arcs)
            .expect("compaction preserves validity")
    }

    /// Weak components (of the underlying undirected graph), each sorted,
    /// ordered by smallest label.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.labels.len();
        let mut uf = UnionFind::new(n);
        for &(t, h) in &self.ends {
            uf.union(t as usize, h as usize);
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = uf.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(self.labels[v]);
        }
        groups
    }

    /// `c(G)`, the number of weak components.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.labels.len());
        for &(t, h) in &self.ends {
            uf.union(t as usize, h as usize);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Strongly connected components by iterative Tarjan, in the order
    /// they are completed.
    pub fn strongly_connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.labels.len();
        let succ: Vec<Vec<usize>> = (0..n)
            .map(|v| self.out_arcs[v].iter().map(|&e| self.ends[e as usize].1 as usize).collect())
            .collect();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut sccs = Vec::new();
        let mut next = 0;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = succ[v].get(*pos) {
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(self.labels[w]);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    sccs.push(comp);
                }
            }
        }
        sccs
    }

    pub fn is_strongly_connected(&self) -> bool {
        !self.labels.is_empty() && self.strongly_connected_components().len() == 1
    }

    /// Number of arcs entering and leaving the vertex set `set` from and to
    /// its complement. Loops and arcs inside `set` count in neither.
    pub fn boundary_flow(&self, set: &[VertexId]) -> Result<(usize, usize)> {
        let mut inside = vec![false; self.labels.len()];
        for &v in set {
            inside[self.vertex_index(v).ok_or(Error::UnknownVertex(v))?] = true;
        }
        let mut flow = (0, 0);
        for &(t, h) in &self.ends {
            match (inside[t as usize], inside[h as usize]) {
                (false, true) => flow.0 += 1,
                (true, false) => flow.1 += 1,
                _ => {}
            }
        }
        Ok(flow)
    }
}

/// Recomputes the canonical alternating-cycle decomposition of `g`.
pub fn ac_decompose(g: &TwoDigraph) -> Vec<AlternatingCycle> {
    let seqs = decompose(&g.ends, &g.in_arcs, &g.out_arcs);
    debug_assert_eq!(seqs, g.ac_arcs);
    (0..seqs.len()).map(|c| g.describe_ac(c)).collect()
}

/// Walks each alternating cycle from its lowest unassigned arc: forward to
/// the end-vertex, across to the other in-arc, backward to its start-vertex,
/// across to the other out-arc, and so on until the start arc returns.
/// Arc indices are in id order, so cycles come out sorted by lowest id.
fn decompose(ends: &[(u32, u32)], in_arcs: &[Vec<u32>], out_arcs: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let other = |pair: &[u32], e: u32| if pair[0] == e { pair[1] } else { pair[0] };
    let mut assigned = vec![false; ends.len()];
    let mut acs = Vec::new();
    for start in 0..ends.len() as u32 {
        if assigned[start as usize] {
            continue;
        }
        let mut seq = Vec::new();
        let mut e = start;
        let mut forward = true;
        loop {
            seq.push(e);
            assigned[e as usize] = true;
            let (t, h) = ends[e as usize];
            let next = if forward {
                other(&in_arcs[h as usize], e)
            } else {
                other(&out_arcs[t as usize], e)
            };
            forward = !forward;
            if next == start {
                break;
            }
            e = next;
        }
        debug_assert!(seq.len() % 2 == 0);
        acs.push(seq);
    }
    acs
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.sets -= 1;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doubled_digon() -> TwoDigraph {
        TwoDigraph::from_pairs(&[(1, 2), (1, 2), (2, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn double_loop_is_smallest_2dd() {
        let g = TwoDigraph::from_pairs(&[(1, 1), (1, 1)]).unwrap();
        assert!(g.is_saturated());
        assert_eq!(g.ac_count(), 1);
        assert_eq!(g.acs()[0].len(), 2);
    }

    #[test]
    fn in_degree_one_is_rejected() {
        let err = TwoDigraph::from_pairs(&[(1, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, Error::DegreeViolation { indeg: 1, outdeg: 0, .. }));
    }

    #[test]
    fn dangling_and_duplicate_inputs() {
        let err = TwoDigraph::build([VertexId(1)], [Arc::new(0, 1, 2)]).unwrap_err();
        assert_eq!(err, Error::DanglingEndpoint(ArcId(0)));
        let err = TwoDigraph::from_arcs(&[(0, 1, 1), (0, 1, 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateArc(ArcId(0)));
        let err = TwoDigraph::build([VertexId(1), VertexId(1)], []).unwrap_err();
        assert_eq!(err, Error::DuplicateVertex(VertexId(1)));
        // isolated vertex
        let err = TwoDigraph::build([VertexId(1), VertexId(2)], [Arc::new(0, 1, 1), Arc::new(1, 1, 1)]).unwrap_err();
        assert!(matches!(err, Error::DegreeViolation { indeg: 0, outdeg: 0, .. }));
    }

    #[test]
    fn doubled_digon_has_two_two_arc_cycles() {
        let g = doubled_digon();
        assert_eq!(g.ac_count(), 2);
        assert_eq!(g.acs()[0].arcs(), &[ArcId(0), ArcId(1)]);
        assert_eq!(g.acs()[1].arcs(), &[ArcId(2), ArcId(3)]);
        assert!(g.acs().iter().all(|x| x.is_clean()));
        assert_eq!(ac_decompose(&g), g.acs());
    }

    #[test]
    fn loop_sits_in_its_alternating_cycle() {
        // X_1L
        let g = TwoDigraph::from_pairs(&[(1, 1), (1, 2), (3, 2), (3, 4), (5, 4), (5, 1)]).unwrap();
        assert_eq!(g.ac_count(), 1);
        let x = &g.acs()[0];
        assert_eq!(x.half_len(), 3);
        assert_eq!(x.vertices().len(), 5);
        assert_eq!(x.internal_vertices(), &[VertexId(1)]);
        assert_eq!(x.forward().count(), x.backward().count());
    }

    #[test]
    fn split_of_double_loop() {
        let g = TwoDigraph::from_pairs(&[(1, 1), (1, 1)]).unwrap();
        let s = g.split(VertexId(1)).unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.entries(), vec![VertexId(2)]);
        assert_eq!(s.exits(), vec![VertexId(1)]);
        assert!(s.arcs().iter().all(|a| a.tail == VertexId(2) && a.head == VertexId(1)));
        assert_eq!(s.splice(VertexId(2), VertexId(1)).unwrap(), g);
    }

    #[test]
    fn split_and_splice_errors() {
        let g = doubled_digon().split(VertexId(1)).unwrap();
        assert_eq!(g.split(VertexId(3)).unwrap_err(), Error::NotSaturated(VertexId(3)));
        assert_eq!(g.splice(VertexId(1), VertexId(3)).unwrap_err(), Error::NotEntry(VertexId(1)));
        assert_eq!(g.splice(VertexId(3), VertexId(2)).unwrap_err(), Error::NotExit(VertexId(2)));
        assert_eq!(g.split(VertexId(9)).unwrap_err(), Error::UnknownVertex(VertexId(9)));
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = doubled_digon();
        assert_eq!(g.induced_subgraph(&[0, 1]).unwrap(), g);
        let h = g.induced_subgraph(&[0]).unwrap();
        assert_eq!(h.arc_count(), 2);
        assert_eq!((h.entry_count(), h.exit_count()), (1, 1));
        assert_eq!(g.induced_subgraph(&[]).unwrap_err(), Error::EmptySelection);
        assert_eq!(g.induced_subgraph(&[5]).unwrap_err(), Error::UnknownAc(5));
    }

    #[test]
    fn components_and_strong_connectivity() {
        let g = doubled_digon();
        let two = g.disjoint_union(&g);
        assert_eq!(two.component_count(), 2);
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_strongly_connected());
        assert!(g.is_strongly_connected());
        // a directed path is weakly but not strongly connected
        let p = TwoDigraph::from_pairs(&[(1, 2), (1, 2)]).unwrap();
        assert!(p.is_connected());
        assert_eq!(p.strongly_connected_components().len(), 2);
    }

    #[test]
    fn boundary_flow_basics() {
        let g = TwoDigraph::from_pairs(&[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert_eq!(g.boundary_flow(&[VertexId(1)]).unwrap(), (1, 1));
        assert_eq!(g.boundary_flow(g.vertices()).unwrap(), (0, 0));
        let d = doubled_digon();
        assert_eq!(d.boundary_flow(&[VertexId(1)]).unwrap(), (2, 2));
    }
}
