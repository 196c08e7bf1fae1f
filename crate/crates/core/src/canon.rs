//! Canonical labeling of directed multigraphs by colour refinement and
//! individualization.
//!
//! The code of a graph is its vertex count followed by its arc list under
//! the canonical labeling, sorted. Two graphs are isomorphic iff their
//! codes are equal. The search explores every branch of the
//! individualization tree of each connected component without automorphism
//! pruning, which is fine for the graph sizes this crate enumerates.

use crate::graph::{Arc, TwoDigraph, UnionFind, VertexId};

pub type Code = Vec<u16>;

struct Adjacency {
    n: usize,
    out: Vec<Vec<(u32, u16)>>,
    inn: Vec<Vec<(u32, u16)>>,
    arcs: Vec<(u32, u32)>,
}

impl Adjacency {
    fn new(n: usize, arcs: &[(u32, u32)]) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut sorted = arcs.to_vec();
        sorted.sort_unstable();
        let mut i = 0;
        while i < sorted.len() {
            let (t, h) = sorted[i];
            let mut j = i;
            while j < sorted.len() && sorted[j] == (t, h) {
                j += 1;
            }
            let mult = (j - i) as u16;
            out[t as usize].push((h, mult));
            inn[h as usize].push((t, mult));
            i = j;
        }
        Adjacency {
            n,
            out,
            inn,
            arcs: sorted,
        }
    }

    /// Refines `colors` to the coarsest equitable partition below it.
    /// Colours are ranks of labeling-invariant signatures, so the result is
    /// canonical. Returns the number of cells.
    fn refine(&self, colors: &mut [u32]) -> usize {
        let mut cells = count_distinct(colors);
        loop {
            let mut sigs: Vec<(Vec<u32>, usize)> = (0..self.n)
                .map(|v| {
                    let mut o: Vec<(u32, u16)> = self.out[v].iter().map(|&(w, m)| (colors[w as usize], m)).collect();
                    let mut i: Vec<(u32, u16)> = self.inn[v].iter().map(|&(w, m)| (colors[w as usize], m)).collect();
                    o.sort_unstable();
                    i.sort_unstable();
                    let mut sig = Vec::with_capacity(3 + 2 * (o.len() + i.len()));
                    sig.push(colors[v]);
                    sig.push(o.len() as u32);
                    sig.extend(o.iter().flat_map(|&(c, m)| [c, m as u32]));
                    sig.extend(i.iter().flat_map(|&(c, m)| [c, m as u32]));
                    (sig, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut rank = 0u32;
            for k in 0..sigs.len() {
                if k > 0 && sigs[k].0 != sigs[k - 1].0 {
                    rank += 1;
                }
                colors[sigs[k].1] = rank;
            }
            let now = rank as usize + 1;
            if now == cells || now == self.n {
                return now;
            }
            cells = now;
        }
    }

    fn code_for(&self, colors: &[u32]) -> Code {
        let mut pairs: Vec<(u16, u16)> = self
            .arcs
            .iter()
            .map(|&(t, h)| (colors[t as usize] as u16, colors[h as usize] as u16))
            .collect();
        pairs.sort_unstable();
        let mut code = Vec::with_capacity(1 + 2 * pairs.len());
        code.push(self.n as u16);
        code.extend(pairs.iter().flat_map(|&(t, h)| [t, h]));
        code
    }

    fn search(&self, mut colors: Vec<u32>, best: &mut Option<(Code, Vec<u32>)>) {
        let cells = self.refine(&mut colors);
        if cells == self.n {
            let code = self.code_for(&colors);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, colors));
            }
            return;
        }
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = size.iter().position(|&s| s > 1).expect("non-discrete partition") as u32;
        for v in 0..self.n {
            if colors[v] != target {
                continue;
            }
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(c == target && w != v))
                .collect();
            self.search(child, best);
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Canonical code and the canonical position of each vertex for a directed
/// multigraph on vertices `0..n`. Connected components are labeled
/// separately and placed in order of their own codes.
pub fn canonical_form(n: usize, arcs: &[(u32, u32)]) -> (Code, Vec<u32>) {
    if n == 0 {
        return (vec![0], Vec::new());
    }
    let mut uf = UnionFind::new(n);
    for &(t, h) in arcs {
        uf.union(t as usize, h as usize);
    }
    if uf.count() == 1 {
        return connected_form(n, arcs);
    }
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n {
        members[uf.find(v)].push(v as u32);
    }
    let mut local = vec![0u32; n];
    let mut pieces = Vec::new();
    for vs in members.into_iter().filter(|vs| !vs.is_empty()) {
        for (i, &v) in vs.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let sub: Vec<(u32, u32)> = arcs
            .iter()
            .filter(|&&(t, _)| uf.find(t as usize) == uf.find(vs[0] as usize))
            .map(|&(t, h)| (local[t as usize], local[h as usize]))
            .collect();
        let (code, pos) = connected_form(vs.len(), &sub);
        pieces.push((code, vs, pos));
    }
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    let mut position = vec![0u32; n];
    let mut offset = 0u32;
    for (_, vs, pos) in &pieces {
        for (i, &v) in vs.iter().enumerate() {
            position[v as usize] = offset + pos[i];
        }
        offset += vs.len() as u32;
    }
    (Adjacency::new(n, arcs).code_for(&position), position)
}

fn connected_form(n: usize, arcs: &[(u32, u32)]) -> (Code, Vec<u32>) {
    let adj = Adjacency::new(n, arcs);
    let colors: Vec<u32> = (0..n)
        .map(|v| {
            let loops = adj.out[v].iter().find(|&&(w, _)| w as usize == v).map_or(0, |&(_, m)| m as u32);
            let indeg: u32 = adj.inn[v].iter().map(|&(_, m)| m as u32).sum();
            let outdeg: u32 = adj.out[v].iter().map(|&(_, m)| m as u32).sum();
            indeg * 64 + outdeg * 8 + loops
        })
        .collect();
    let mut ranked = colors.clone();
    let mut distinct = colors;
    distinct.sort_unstable();
    distinct.dedup();
    for c in ranked.iter_mut() {
        *c = distinct.binary_search(c).expect("present") as u32;
    }
    let mut best = None;
    adj.search(ranked, &mut best);
    best.expect("at least one leaf")
}

fn index_arcs(g: &TwoDigraph) -> Vec<(u32, u32)> {
    g.arcs()
        .iter()
        .map(|a| {
            (
                g.vertex_index(a.tail).expect("vertex") as u32,
                g.vertex_index(a.head).expect("vertex") as u32,
            )
        })
        .collect()
}

/// Isomorphism-invariant code of `g`; arc ids and vertex labels are ignored.
pub fn canonical_code(g: &TwoDigraph) -> Code {
    canonical_form(g.vertex_count(), &index_arcs(g)).0
}

pub fn is_isomorphic(a: &TwoDigraph, b: &TwoDigraph) -> bool {
    a.vertex_count() == b.vertex_count() && a.arc_count() == b.arc_count() && canonical_code(a) == canonical_code(b)
}

/// The graph described by a canonical code: vertices `1..=n`, arcs numbered
/// from 0 in code order.
pub fn graph_from_code(code: &[u16]) -> crate::Result<TwoDigraph> {
    let n = code[0] as u32;
    let arcs = code[1..]
        .chunks(2)
        .enumerate()
        .map(|(i, p)| Arc::new(i as u32, p[0] as u32 + 1, p[1] as u32 + 1));
    TwoDigraph::build((1..=n).map(VertexId), arcs)
}

/// `g` relabeled canonically.
pub fn canonical_graph(g: &TwoDigraph) -> TwoDigraph {
    graph_from_code(&canonical_code(g)).expect("relabeling preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    /// Minimum code over every vertex ordering.
    fn brute_force_code(n: usize, arcs: &[(u32, u32)]) -> Code {
        let mut order: Vec<u32> = (0..n as u32).collect();
        let mut best: Option<Code> = None;
        permute(&mut order, 0, &mut |pos| {
            let mut pairs: Vec<(u16, u16)> = arcs.iter().map(|&(t, h)| (pos[t as usize] as u16, pos[h as usize] as u16)).collect();
            pairs.sort_unstable();
            let mut code = vec![n as u16];
            code.extend(pairs.iter().flat_map(|&(t, h)| [t, h]));
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        });
        best.unwrap()
    }

    fn permute(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn relabeled_examples_share_codes() {
        for g in [fixtures::split_example(), fixtures::closed_example(), fixtures::xc_3s()] {
            let shifted = g.shifted(100, 7);
            assert_eq!(canonical_code(&g), canonical_code(&shifted));
            assert!(is_isomorphic(&g, &canonical_graph(&g)));
        }
    }

    #[test]
    fn six_arc_forms_are_pairwise_non_isomorphic() {
        let codes: Vec<Code> = fixtures::AC6_FORMS
            .iter()
            .map(|(_, t)| canonical_code(&crate::io::parse(t).unwrap()))
            .collect();
        for i in 0..codes.len() {
            for j in i + 1..codes.len() {
                assert_ne!(codes[i], codes[j]);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn isomorphism_classes_match_brute_force(
            a in proptest::collection::vec((0u32..5, 0u32..5), 1..9),
            b in proptest::collection::vec((0u32..5, 0u32..5), 1..9),
            p in Just((0u32..5).collect::<Vec<_>>()).prop_shuffle(),
        ) {
            let ca = canonical_form(5, &a).0;
            let cb = canonical_form(5, &b).0;
            let same_brute = brute_force_code(5, &a) == brute_force_code(5, &b);
            prop_assert_eq!(ca == cb, same_brute);
            let relabeled: Vec<(u32, u32)> = a.iter().map(|&(t, h)| (p[t as usize], p[h as usize])).collect();
            prop_assert_eq!(canonical_form(5, &relabeled).0, ca);
        }
    }
}
