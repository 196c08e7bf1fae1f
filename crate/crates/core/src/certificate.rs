//! Hamiltonicity verdicts with checkable witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::factor::{factor, is_hamiltonian_bruteforce, Half, Kernel, Selection, DEFAULT_CAP};
use crate::graph::{ArcId, TwoDigraph};
use crate::perm::Parity;
use crate::quotient::{
    closed_subset_search_from, eliminate_dirty, in_f6, is_closed_subset, replay_reduction, MinorStep,
    ReductionOutcome, DEFAULT_SUBSET_CAP,
};
use crate::split::{certify_by_splitting, SplitOutcome, SplitWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Hamiltonian,
    NonHamiltonian,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Hamiltonian => "Hamiltonian",
            Verdict::NonHamiltonian => "NonHamiltonian",
            Verdict::Undecided => "Undecided",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    Disconnected,
    ClosedSubset,
    SplitParity,
    ClosedAc6,
    DirtyReduction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute_force",
            Method::Disconnected => "disconnected",
            Method::ClosedSubset => "closed_subset",
            Method::SplitParity => "split_parity",
            Method::ClosedAc6 => "closed_ac6",
            Method::DirtyReduction => "dirty_reduction",
        })
    }
}

/// Method-specific payload. Alternating cycles are named by their lowest
/// arc id, which survives minors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Evidence {
    /// A Hamiltonian cycle of the input, as a selection over its cycles.
    Factor { selection: Selection },
    /// Every factor was checked; none is a single spanning cycle.
    Exhaustive { factors: u64 },
    Components { count: usize },
    ClosedSubset { acs: Vec<ArcId> },
    Split(SplitWitness),
    None { reason: String },
}

/// `evidence` applies to the graph obtained from the input by replaying
/// `reductions`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub reductions: Vec<MinorStep>,
    pub evidence: Evidence,
}

impl Witness {
    pub fn summary(&self) -> String {
        let mut s = match &self.evidence {
            Evidence::Factor { selection } => format!("Hamiltonian factor {selection}"),
            Evidence::Exhaustive { factors } => format!("all {factors} factors checked"),
            Evidence::Components { count } => format!("{count} weak components"),
            Evidence::ClosedSubset { acs } => {
                let names: Vec<String> = acs.iter().map(ToString::to_string).collect();
                format!("closed cycle set {{{}}} (by lowest arc)", names.join(", "))
            }
            Evidence::Split(w) => {
                let pairs: Vec<String> = w.steps.iter().map(|s| format!("{{{}, {}}}", s.pair.0, s.pair.1)).collect();
                format!("split pairs [{}], even piece {:?}", pairs.join(", "), w.even_piece)
            }
            Evidence::None { reason } => reason.clone(),
        };
        if !self.reductions.is_empty() {
            let steps: Vec<String> = self.reductions.iter().map(|r| format!("{}:{}", r.ac, r.class)).collect();
            s.push_str(&format!("; after eliminating [{}]", steps.join(", ")));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub method: Option<Method>,
    pub witness: Witness,
}

impl Certificate {
    fn decided(verdict: Verdict, method: Method, reductions: Vec<MinorStep>, evidence: Evidence) -> Self {
        Certificate {
            verdict,
            method: Some(method),
            witness: Witness { reductions, evidence },
        }
    }

    fn undecided(reason: impl Into<String>) -> Self {
        Certificate {
            verdict: Verdict::Undecided,
            method: None,
            witness: Witness {
                reductions: Vec::new(),
                evidence: Evidence::None { reason: reason.into() },
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    #[default]
    Auto,
    BruteForce,
    Split,
    ClosedSubset,
    Reduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Largest cycle count for the brute-force fallback.
    pub cap: usize,
    /// Largest cycle count for the closed-subset search.
    pub subset_cap: usize,
    pub method: MethodChoice,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            cap: DEFAULT_CAP,
            subset_cap: DEFAULT_SUBSET_CAP,
            method: MethodChoice::Auto,
        }
    }
}

fn ac_names(g: &TwoDigraph, k: &[usize]) -> Vec<ArcId> {
    k.iter().map(|&c| g.acs()[c].lowest_arc()).collect()
}

fn brute_force(g: &TwoDigraph, cap: usize) -> Result<Option<Certificate>> {
    if g.ac_count() > cap || g.ac_count() > 63 {
        return Ok(None);
    }
    Ok(Some(match is_hamiltonian_bruteforce(g, cap)? {
        Some(f) => Certificate::decided(
            Verdict::Hamiltonian,
            Method::BruteForce,
            Vec::new(),
            Evidence::Factor {
                selection: f.selection().clone(),
            },
        ),
        None => Certificate::decided(
            Verdict::NonHamiltonian,
            Method::BruteForce,
            Vec::new(),
            Evidence::Exhaustive {
                factors: 1u64 << g.ac_count(),
            },
        ),
    }))
}

fn closed_single(g: &TwoDigraph) -> Option<usize> {
    if g.ac_count() < 2 {
        return None;
    }
    let kernel = Kernel::new(g);
    let mut s = kernel.scratch();
    (0..g.ac_count()).find(|&c| {
        (0..2u64).all(|mask| kernel.cycles(&[c], mask, &mut s, true) > 0)
    })
}

fn closed_subset(g: &TwoDigraph, min_size: usize, cap: usize) -> Result<Option<Vec<usize>>> {
    if g.ac_count() > cap || g.ac_count() > 63 {
        return Ok(None);
    }
    closed_subset_search_from(g, min_size, cap)
}

fn split(g: &TwoDigraph) -> Result<Option<SplitWitness>> {
    if g.acs().iter().any(|x| x.parity() == Parity::Even) {
        return Ok(None);
    }
    Ok(match certify_by_splitting(g)? {
        SplitOutcome::NonHamiltonian(w) => Some(w),
        SplitOutcome::Undecided(_) => None,
    })
}

/// Lifts a selection on the reduced graph to the input: each eliminated
/// cycle takes the half that defines its unique open route.
fn lift_selection(g: &TwoDigraph, steps: &[MinorStep], reduced: &TwoDigraph, sel: &Selection) -> Result<Selection> {
    let mut halves: Vec<Option<Half>> = vec![None; g.ac_count()];
    for (i, x) in reduced.acs().iter().enumerate() {
        halves[g.ac_by_lowest_arc(x.lowest_arc()).expect("cycle survives")] = Some(sel.half(i));
    }
    let mut h = g.clone();
    for step in steps {
        let c = h.ac_by_lowest_arc(step.ac).expect("recorded cycle");
        let q = crate::quotient::quotient(&h, &[c])?;
        let m = q.minors.into_iter().next().expect("unique route");
        halves[g.ac_by_lowest_arc(step.ac).expect("input cycle")] = Some(m.selection.half(0));
        h = m.graph;
    }
    Ok(Selection::from_halves(halves.into_iter().map(|x| x.expect("every cycle covered"))))
}

/// Decides Hamiltonicity of a 2-dd where one of the criteria applies.
///
/// The automatic pipeline tries, in order: connectivity; elimination of
/// dirty six-arc cycles; a single closed cycle; the splice-parity procedure
/// when every cycle is odd; a closed set of two or more cycles; and finally
/// exhaustive factor search under the cap.
pub fn certify(g: &TwoDigraph, opts: &CertifyOptions) -> Certificate {
    match certify_inner(g, opts) {
        Ok(c) => c,
        Err(e) => Certificate::undecided(e.to_string()),
    }
}

fn certify_inner(g: &TwoDigraph, opts: &CertifyOptions) -> Result<Certificate> {
    if !g.is_saturated() {
        return Ok(Certificate::undecided("graph is not a 2-dd"));
    }
    let count = g.component_count();
    if count > 1 {
        return Ok(Certificate::decided(
            Verdict::NonHamiltonian,
            Method::Disconnected,
            Vec::new(),
            Evidence::Components { count },
        ));
    }
    let nothing = |what: &str| Ok(Certificate::undecided(format!("{what} does not apply")));
    match opts.method {
        MethodChoice::BruteForce => {
            return Ok(brute_force(g, opts.cap)?
                .unwrap_or_else(|| Certificate::undecided(format!("more than {} alternating cycles", opts.cap))))
        }
        MethodChoice::Split => {
            return match split(g)? {
                Some(w) => Ok(Certificate::decided(Verdict::NonHamiltonian, Method::SplitParity, Vec::new(), Evidence::Split(w))),
                None => nothing("splice-parity test"),
            }
        }
        MethodChoice::ClosedSubset => {
            return match closed_subset(g, 1, opts.subset_cap)? {
                Some(k) => Ok(Certificate::decided(
                    Verdict::NonHamiltonian,
                    Method::ClosedSubset,
                    Vec::new(),
                    Evidence::ClosedSubset { acs: ac_names(g, &k) },
                )),
                None => nothing("closed-subset search"),
            }
        }
        MethodChoice::Reduction | MethodChoice::Auto => {}
    }

    let mut h = g.clone();
    let mut reductions = Vec::new();
    if in_f6(g) {
        let red = eliminate_dirty(g)?;
        match red.outcome {
            ReductionOutcome::ClosedAc { ac, .. } => {
                return Ok(Certificate::decided(
                    Verdict::NonHamiltonian,
                    Method::ClosedAc6,
                    red.steps,
                    Evidence::ClosedSubset { acs: vec![ac] },
                ))
            }
            ReductionOutcome::Disconnected => {
                let count = red.graph.component_count();
                return Ok(Certificate::decided(
                    Verdict::NonHamiltonian,
                    Method::DirtyReduction,
                    red.steps,
                    Evidence::Components { count },
                ));
            }
            ReductionOutcome::Reduced => {
                h = red.graph;
                reductions = red.steps;
            }
        }
    }
    if opts.method == MethodChoice::Reduction {
        return nothing("dirty-cycle elimination");
    }

    if let Some(c) = closed_single(&h) {
        return Ok(Certificate::decided(
            Verdict::NonHamiltonian,
            Method::ClosedSubset,
            reductions,
            Evidence::ClosedSubset { acs: ac_names(&h, &[c]) },
        ));
    }
    if let Some(w) = split(&h)? {
        return Ok(Certificate::decided(Verdict::NonHamiltonian, Method::SplitParity, reductions, Evidence::Split(w)));
    }
    if let Some(k) = closed_subset(&h, 2, opts.subset_cap)? {
        return Ok(Certificate::decided(
            Verdict::NonHamiltonian,
            Method::ClosedSubset,
            reductions,
            Evidence::ClosedSubset { acs: ac_names(&h, &k) },
        ));
    }
    match brute_force(&h, opts.cap)? {
        Some(mut c) => {
            if c.verdict == Verdict::Hamiltonian {
                if let Evidence::Factor { selection } = &c.witness.evidence {
                    let lifted = lift_selection(g, &reductions, &h, selection)?;
                    c.witness.evidence = Evidence::Factor { selection: lifted };
                }
            } else {
                c.witness.reductions = reductions;
            }
            Ok(c)
        }
        None => Ok(Certificate::undecided(format!(
            "no criterion applies and the graph has more than {} alternating cycles",
            opts.cap
        ))),
    }
}

/// Re-checks only the witness of `cert` against `g`. Undecided
/// certificates verify trivially.
pub fn verify(g: &TwoDigraph, cert: &Certificate) -> Result<bool> {
    let w = &cert.witness;
    if cert.verdict == Verdict::Undecided {
        return Ok(cert.method.is_none());
    }
    let Some(method) = cert.method else {
        return Ok(false);
    };
    if !g.is_saturated() {
        return Ok(false);
    }
    if !w.reductions.is_empty() && !in_f6(g) {
        return Ok(false);
    }
    let Some(h) = replay_reduction(g, &w.reductions)? else {
        return Ok(false);
    };
    let ok = match (cert.verdict, method, &w.evidence) {
        (Verdict::Hamiltonian, Method::BruteForce, Evidence::Factor { selection }) => {
            w.reductions.is_empty()
                && selection.len() == g.ac_count()
                && factor(g, selection)?.is_hamiltonian_cycle()
        }
        (Verdict::NonHamiltonian, Method::BruteForce, Evidence::Exhaustive { factors }) => {
            h.ac_count() < 64 && *factors == 1u64 << h.ac_count() && is_hamiltonian_bruteforce(&h, 63)?.is_none()
        }
        (Verdict::NonHamiltonian, Method::Disconnected | Method::DirtyReduction, Evidence::Components { count }) => {
            (method == Method::Disconnected) == w.reductions.is_empty() && *count > 1 && h.component_count() == *count
        }
        (Verdict::NonHamiltonian, Method::ClosedSubset | Method::ClosedAc6, Evidence::ClosedSubset { acs }) => {
            let k: Option<Vec<usize>> = acs.iter().map(|&a| h.ac_by_lowest_arc(a)).collect();
            match k {
                Some(k) if !k.is_empty() && k.len() < h.ac_count() => {
                    let form_ok = method == Method::ClosedSubset
                        || (k.len() == 1 && crate::ac6::classify_ac(&h, k[0])?.name.is_closed_unsaturated());
                    form_ok && is_closed_subset(&h, &k)?
                }
                _ => false,
            }
        }
        (Verdict::NonHamiltonian, Method::SplitParity, Evidence::Split(sw)) => sw.verify(&h)?,
        _ => false,
    };
    Ok(ok)
}
