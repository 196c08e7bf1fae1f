//! Minors defined by open routes, quotients, dirty-cycle elimination and
//! the closed-subset criterion.

use serde::{Deserialize, Serialize};

use crate::ac6::{classify_ac, Ac6Name};
use crate::error::{Error, Result};
use crate::factor::{
    factor, is_hamiltonian_bruteforce, open_routes_with_selections, parity_class, subset_is_open, Kernel,
    ParityClass, Route, Selection, DEFAULT_CAP,
};
use crate::graph::{Arc, ArcId, TwoDigraph, VertexId, VertexKind};
use crate::split::next_combination;

pub const DEFAULT_SUBSET_CAP: usize = 14;

/// A minor `r↓` with the data that defined it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub graph: TwoDigraph,
    /// Alternating-cycle indices of the source graph that were removed.
    pub k: Vec<usize>,
    pub route: Route,
    /// A selection over `k` (in order) whose factor defines `route`.
    pub selection: Selection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub minors: Vec<Minor>,
}

impl Quotient {
    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }
}

fn normalize_k(g: &TwoDigraph, k: &[usize]) -> Result<Vec<usize>> {
    let mut k = k.to_vec();
    k.sort_unstable();
    k.dedup();
    if let Some(&c) = k.iter().find(|&&c| c >= g.ac_count()) {
        return Err(Error::UnknownAc(c));
    }
    if k.is_empty() || k.len() == g.ac_count() {
        return Err(Error::KNotProper);
    }
    Ok(k)
}

/// Deletes the arcs of `k` and identifies each entry `u` of the subgraph on
/// `k` with its image `r(u)`. The merged vertex keeps the label `u`. Arc ids
/// are preserved, so the minor's alternating cycles are those outside `k`.
pub fn minor(g: &TwoDigraph, k: &[usize], r: &Route) -> Result<Minor> {
    let k = normalize_k(g, k)?;
    let sub = g.induced_subgraph(&k)?;
    let routes = open_routes_with_selections(&sub, DEFAULT_CAP).map_err(|e| match e {
        Error::SaturatedGraph => Error::RouteNotOpen,
        e => e,
    })?;
    let Some((route, selection)) = routes.iter().find(|(q, _)| q.mapping == r.mapping) else {
        return Err(Error::RouteNotOpen);
    };
    Ok(Minor {
        graph: apply_route(g, &k, route),
        k,
        route: route.clone(),
        selection: selection.clone(),
    })
}

fn apply_route(g: &TwoDigraph, k: &[usize], r: &Route) -> TwoDigraph {
    let mut in_k = vec![false; g.ac_count()];
    for &c in k {
        in_k[c] = true;
    }
    let arcs: Vec<Arc> = g
        .arcs()
        .iter()
        .filter(|a| !in_k[g.ac_of_arc(a.id).expect("own arc")])
        .map(|a| Arc {
            tail: r.preimage(a.tail).unwrap_or(a.tail),
            ..*a
        })
        .collect();
    let vertices: std::collections::BTreeSet<VertexId> = arcs.iter().flat_map(|a| [a.tail, a.head]).collect();
    TwoDigraph::build(vertices, arcs).expect("minor of a valid graph is valid")
}

/// One minor per distinct open route of the subgraph on `k`, in route order.
pub fn quotient(g: &TwoDigraph, k: &[usize]) -> Result<Quotient> {
    let k = normalize_k(g, k)?;
    let sub = g.induced_subgraph(&k)?;
    if sub.entry_count() == 0 {
        // a saturated subgraph has no routes
        return Ok(Quotient { minors: Vec::new() });
    }
    let minors = open_routes_with_selections(&sub, DEFAULT_CAP)?
        .into_iter()
        .map(|(route, selection)| Minor {
            graph: apply_route(g, &k, &route),
            k: k.clone(),
            route,
            selection,
        })
        .collect();
    Ok(Quotient { minors })
}

/// A 2-dd whose alternating cycles all have six arcs.
pub fn in_f6(g: &TwoDigraph) -> bool {
    g.is_saturated() && g.acs().iter().all(|x| x.len() == 6)
}

/// One elimination: the cycle whose lowest arc is `ac`, of the given form,
/// was replaced by its unique minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorStep {
    pub ac: ArcId,
    pub class: Ac6Name,
    pub route: Route,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ReductionOutcome {
    /// No reducible or closed cycle is left.
    Reduced,
    /// The cycle with this lowest arc is closed with unsaturated vertices.
    ClosedAc { ac: ArcId, class: Ac6Name },
    /// The last minor is disconnected.
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: TwoDigraph,
    pub steps: Vec<MinorStep>,
    pub outcome: ReductionOutcome,
}

impl Reduction {
    pub fn is_non_hamiltonian(&self) -> bool {
        self.outcome != ReductionOutcome::Reduced
    }
}

/// Removes the open dirty six-arc cycles one at a time through their unique
/// minors, stopping early on a closed cycle with unsaturated vertices or a
/// disconnected minor, either of which makes the input non-Hamiltonian.
pub fn eliminate_dirty(g: &TwoDigraph) -> Result<Reduction> {
    if !in_f6(g) {
        return Err(Error::NotFamilyF6);
    }
    let mut h = g.clone();
    let mut steps = Vec::new();
    loop {
        if !h.is_connected() {
            return Ok(Reduction {
                graph: h,
                steps,
                outcome: ReductionOutcome::Disconnected,
            });
        }
        let classes = (0..h.ac_count()).map(|c| classify_ac(&h, c).map(|x| x.name)).collect::<Result<Vec<_>>>()?;
        if let Some(c) = classes.iter().position(|n| n.is_closed_unsaturated()) {
            let outcome = ReductionOutcome::ClosedAc {
                ac: h.acs()[c].lowest_arc(),
                class: classes[c],
            };
            return Ok(Reduction { graph: h, steps, outcome });
        }
        let reducible = classes.iter().position(|n| n.is_reducible());
        let Some(c) = reducible.filter(|_| h.ac_count() > 1) else {
            return Ok(Reduction {
                graph: h,
                steps,
                outcome: ReductionOutcome::Reduced,
            });
        };
        let q = quotient(&h, &[c])?;
        debug_assert_eq!(q.len(), 1);
        let m = q.minors.into_iter().next().expect("reducible cycles have one open route");
        steps.push(MinorStep {
            ac: h.acs()[c].lowest_arc(),
            class: classes[c],
            route: m.route,
        });
        h = m.graph;
    }
}

/// Replays elimination steps, checking each recorded cycle's form and
/// route. Returns `None` if a step does not apply.
pub fn replay_reduction(g: &TwoDigraph, steps: &[MinorStep]) -> Result<Option<TwoDigraph>> {
    let mut h = g.clone();
    for step in steps {
        let Some(c) = h.ac_by_lowest_arc(step.ac) else {
            return Ok(None);
        };
        if h.acs()[c].len() != 6 || h.ac_count() < 2 {
            return Ok(None);
        }
        let class = classify_ac(&h, c)?;
        if class.name != step.class || !class.name.is_reducible() {
            return Ok(None);
        }
        let q = quotient(&h, &[c])?;
        if q.len() != 1 || q.minors[0].route.mapping != step.route.mapping {
            return Ok(None);
        }
        h = q.minors.into_iter().next().expect("one minor").graph;
    }
    Ok(Some(h))
}

fn check_subset_cap(g: &TwoDigraph, cap: usize) -> Result<()> {
    if g.ac_count() > cap || g.ac_count() > 63 {
        return Err(Error::CapExceeded {
            what: "closed-subset search",
            size: g.ac_count(),
            cap: cap.min(63),
        });
    }
    Ok(())
}

/// Smallest nonempty proper set of alternating cycles (by size, then
/// lexicographically) whose subgraph is closed, searching sizes
/// `min_size..|C|`.
pub fn closed_subset_search_from(g: &TwoDigraph, min_size: usize, cap: usize) -> Result<Option<Vec<usize>>> {
    check_subset_cap(g, cap)?;
    let m = g.ac_count();
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    for size in min_size.max(1)..m {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if !subset_is_open(&kernel, &pick, &mut s) {
                return Ok(Some(pick));
            }
            if !next_combination(&mut pick, m) {
                break;
            }
        }
    }
    Ok(None)
}

/// Smallest nonempty proper closed set of alternating cycles, if any. For
/// any 2-dd such a set makes the graph non-Hamiltonian; for odd graphs whose
/// cycles all have six arcs the converse holds too.
pub fn closed_subset_search(g: &TwoDigraph, cap: usize) -> Result<Option<Vec<usize>>> {
    closed_subset_search_from(g, 1, cap)
}

/// Checks that `k` (as alternating-cycle indices) is a nonempty proper
/// subset whose subgraph is closed.
pub fn is_closed_subset(g: &TwoDigraph, k: &[usize]) -> Result<bool> {
    let k = normalize_k(g, k)?;
    if k.len() > 63 {
        return Err(Error::CapExceeded {
            what: "closed subset",
            size: k.len(),
            cap: 63,
        });
    }
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    Ok(!subset_is_open(&kernel, &k, &mut s))
}

/// For a connected, odd, non-Hamiltonian 2-dd with six-arc cycles: checks
/// that the complement of every open cycle is closed.
pub fn check_complement_closed(g: &TwoDigraph) -> Result<bool> {
    if !in_f6(g) || !g.is_connected() {
        return Err(Error::PreconditionViolated("expected a connected 2-dd with six-arc cycles".into()));
    }
    if parity_class(g, false, DEFAULT_CAP)? != ParityClass::Odd {
        return Err(Error::PreconditionViolated("graph is not odd".into()));
    }
    if is_hamiltonian_bruteforce(g, DEFAULT_CAP)?.is_some() {
        return Err(Error::PreconditionViolated("graph is Hamiltonian".into()));
    }
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    for c in 0..g.ac_count() {
        if !subset_is_open(&kernel, &[c], &mut s) {
            continue;
        }
        let rest: Vec<usize> = (0..g.ac_count()).filter(|&d| d != c).collect();
        if !rest.is_empty() && subset_is_open(&kernel, &rest, &mut s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the factor correspondence between the minor defined by the open
/// factor `sel` of `k` and the factors of `g` agreeing with it on `k`:
/// matched factors have equal index, and component counts differ exactly by
/// the route pairs whose ends are both unsaturated in `g` (none for a 2-dd).
pub fn verify_reduction_bijection(g: &TwoDigraph, k: &[usize], sel: &Selection) -> Result<bool> {
    let k = normalize_k(g, k)?;
    let sub = g.induced_subgraph(&k)?;
    let fk = factor(&sub, sel)?;
    if !fk.is_open() || sub.entry_count() == 0 {
        return Err(Error::RouteNotOpen);
    }
    let route = fk.route().expect("unsaturated subgraph");
    let m = minor(g, &k, &route)?;
    let isolated = route
        .mapping
        .iter()
        .filter(|(u, v)| g.kind(*u) == Some(VertexKind::Entry) && g.kind(*v) == Some(VertexKind::Exit))
        .count();
    let rest: Vec<usize> = (0..g.ac_count()).filter(|c| k.binary_search(c).is_err()).collect();
    debug_assert_eq!(m.graph.ac_count(), rest.len());
    let mut seen = std::collections::BTreeSet::new();
    for j in crate::factor::enumerate_factors(&m.graph, DEFAULT_CAP)? {
        let mut bits = vec![crate::factor::Half::Forward; g.ac_count()];
        for (i, &c) in k.iter().enumerate() {
            bits[c] = sel.half(i);
        }
        for (i, &c) in rest.iter().enumerate() {
            let lowest = m.graph.acs()[i].lowest_arc();
            if g.acs()[c].lowest_arc() != lowest {
                return Ok(false);
            }
            bits[c] = j.selection().half(i);
        }
        let image = factor(g, &Selection::from_halves(bits))?;
        if image.index() != j.index() || image.component_count() != j.component_count() + isolated {
            return Ok(false);
        }
        seen.insert(image.selection().clone());
    }
    Ok(seen.len() == 1usize << rest.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{enumerate_factors, index_of, is_closed};
    use crate::fixtures;

    #[test]
    fn closed_example_quotients_are_empty() {
        let g = fixtures::closed_example();
        for c in 0..2 {
            assert!(quotient(&g, &[c]).unwrap().is_empty());
            assert!(is_closed(&g.induced_subgraph(&[c]).unwrap(), DEFAULT_CAP).unwrap());
        }
        assert_eq!(closed_subset_search(&g, DEFAULT_SUBSET_CAP).unwrap(), Some(vec![0]));
        assert_eq!(quotient(&g, &[0, 1]).unwrap_err(), Error::KNotProper);
        assert_eq!(quotient(&g, &[]).unwrap_err(), Error::KNotProper);
    }

    #[test]
    fn split_example_minors_are_2dds() {
        let g = fixtures::split_example();
        for c in 0..4 {
            let q = quotient(&g, &[c]).unwrap();
            assert!(q.len() <= 2 && !q.is_empty());
            for m in &q.minors {
                assert!(m.graph.is_saturated());
                assert_eq!(m.graph.ac_count(), 3);
                assert_eq!(enumerate_factors(&m.graph, DEFAULT_CAP).unwrap().count(), 8);
                assert!(verify_reduction_bijection(&g, &[c], &m.selection).unwrap());
            }
        }
        assert_eq!(closed_subset_search(&g, DEFAULT_SUBSET_CAP).unwrap().map(|k| k.len()), Some(2));
    }

    #[test]
    fn minor_rejects_foreign_route() {
        let g = fixtures::split_example();
        let bogus = Route {
            mapping: vec![(VertexId(1), VertexId(1))],
            open: true,
        };
        assert_eq!(minor(&g, &[0], &bogus).unwrap_err(), Error::RouteNotOpen);
    }

    #[test]
    fn closed_ac_form_stops_elimination() {
        // Xc_1L1S spliced onto X_2S: 1 entry and 1 exit on each side
        let h = fixtures::xc_1l1s().disjoint_union(&fixtures::x_2s());
        let (he, hx) = (h.entries(), h.exits());
        let g = h.splice(he[0], hx[1]).unwrap().splice(he[1], hx[0]).unwrap();
        assert!(in_f6(&g));
        let red = eliminate_dirty(&g).unwrap();
        assert!(matches!(red.outcome, ReductionOutcome::ClosedAc { class: Ac6Name::Xc1L1S, .. }));
        assert!(is_hamiltonian_bruteforce(&g, DEFAULT_CAP).unwrap().is_none());
    }

    #[test]
    fn clean_input_unchanged() {
        let g = fixtures::split_example();
        let red = eliminate_dirty(&g).unwrap();
        assert_eq!(red.graph, g);
        assert!(red.steps.is_empty());
        assert_eq!(red.outcome, ReductionOutcome::Reduced);
        assert_eq!(eliminate_dirty(&fixtures::closed_example()).unwrap_err(), Error::NotFamilyF6);
    }

    #[test]
    fn doubled_digon_minor() {
        let g = fixtures::doubled_digon();
        let q = quotient(&g, &[0]).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(index_of(&q.minors[0].graph, DEFAULT_CAP).unwrap(), 1);
        assert!(verify_reduction_bijection(&g, &[0], &q.minors[0].selection).unwrap());
    }
}
