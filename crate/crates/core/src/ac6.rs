//! The ten shapes a six-arc alternating cycle can take on its own.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{enumerate_factors, open_routes};
use crate::graph::TwoDigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ac6Name {
    #[serde(rename = "X_clean")]
    XClean,
    #[serde(rename = "X_1L")]
    X1L,
    #[serde(rename = "X_1S")]
    X1S,
    #[serde(rename = "X_2L")]
    X2L,
    #[serde(rename = "X_2S")]
    X2S,
    #[serde(rename = "Xc_2L")]
    Xc2L,
    #[serde(rename = "Xc_1L1S")]
    Xc1L1S,
    #[serde(rename = "Xc_2L1S")]
    Xc2L1S,
    #[serde(rename = "Xc_3L")]
    Xc3L,
    #[serde(rename = "Xc_3S")]
    Xc3S,
}

impl Ac6Name {
    pub const ALL: [Ac6Name; 10] = [
        Ac6Name::XClean,
        Ac6Name::X1L,
        Ac6Name::X1S,
        Ac6Name::X2L,
        Ac6Name::X2S,
        Ac6Name::Xc2L,
        Ac6Name::Xc1L1S,
        Ac6Name::Xc2L1S,
        Ac6Name::Xc3L,
        Ac6Name::Xc3S,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Ac6Name::XClean => "X_clean",
            Ac6Name::X1L => "X_1L",
            Ac6Name::X1S => "X_1S",
            Ac6Name::X2L => "X_2L",
            Ac6Name::X2S => "X_2S",
            Ac6Name::Xc2L => "Xc_2L",
            Ac6Name::Xc1L1S => "Xc_1L1S",
            Ac6Name::Xc2L1S => "Xc_2L1S",
            Ac6Name::Xc3L => "Xc_3L",
            Ac6Name::Xc3S => "Xc_3S",
        }
    }

    /// Open and dirty: the cycle can be removed by taking its unique minor.
    pub fn is_reducible(self) -> bool {
        matches!(self, Ac6Name::X1L | Ac6Name::X1S | Ac6Name::X2L | Ac6Name::X2S)
    }

    /// Closed with unsaturated vertices; a 2-dd containing one is
    /// non-Hamiltonian.
    pub fn is_closed_unsaturated(self) -> bool {
        matches!(self, Ac6Name::Xc2L | Ac6Name::Xc1L1S)
    }
}

impl fmt::Display for Ac6Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ac6Class {
    pub name: Ac6Name,
    pub vertices: usize,
    pub loops: usize,
    /// Number of exit vertices, equal to the number of entry vertices.
    pub exit_entry: usize,
    pub open_factors: usize,
    pub open_routes: usize,
    pub closed: bool,
}

/// Classifies a standalone graph made of one six-arc alternating cycle.
/// The metrics are computed from the graph, not looked up.
pub fn classify_ac6(g: &TwoDigraph) -> Result<Ac6Class> {
    if g.ac_count() != 1 {
        return Err(Error::PreconditionViolated(format!(
            "expected a single alternating cycle, found {}",
            g.ac_count()
        )));
    }
    if g.arc_count() != 6 {
        return Err(Error::NotSixArcs(g.arc_count()));
    }
    let open_factors = enumerate_factors(g, 1)?.filter(|f| f.is_open()).count();
    let open_routes = if g.entry_count() == 0 { 0 } else { open_routes(g, 1)?.len() };
    let closed = open_factors == 0;
    let vertices = g.vertex_count();
    let loops = g.loop_count();
    let name = match (vertices, loops, closed) {
        (6, 0, false) => Ac6Name::XClean,
        (5, 1, false) => Ac6Name::X1L,
        (5, 0, false) => Ac6Name::X1S,
        (4, 2, false) => Ac6Name::X2L,
        (4, 0, false) => Ac6Name::X2S,
        (4, 2, true) => Ac6Name::Xc2L,
        (4, 1, true) => Ac6Name::Xc1L1S,
        (3, 2, true) => Ac6Name::Xc2L1S,
        (3, 3, true) => Ac6Name::Xc3L,
        (3, 0, true) => Ac6Name::Xc3S,
        other => {
            return Err(Error::PreconditionViolated(format!(
                "six-arc cycle with (vertices, loops, closed) = {other:?} matches no known form"
            )))
        }
    };
    Ok(Ac6Class {
        name,
        vertices,
        loops,
        exit_entry: g.exit_count(),
        open_factors,
        open_routes,
        closed,
    })
}

/// Classifies alternating cycle `c` of `g` as a standalone subgraph.
pub fn classify_ac(g: &TwoDigraph, c: usize) -> Result<Ac6Class> {
    let x = g.acs().get(c).ok_or(Error::UnknownAc(c))?;
    if x.len() != 6 {
        return Err(Error::NotSixArcs(x.len()));
    }
    classify_ac6(&g.induced_subgraph(&[c])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_names_round_trip() {
        for ((label, text), name) in fixtures::AC6_FORMS.iter().zip(Ac6Name::ALL) {
            let class = classify_ac6(&crate::io::parse(text).unwrap()).unwrap();
            assert_eq!(class.name, name);
            assert_eq!(name.as_str(), *label);
        }
    }

    #[test]
    fn rejects_wrong_sizes() {
        assert_eq!(classify_ac6(&fixtures::doubled_digon()).unwrap_err(), Error::PreconditionViolated("expected a single alternating cycle, found 2".into()));
        let two_arcs = TwoDigraph::from_pairs(&[(1, 1), (1, 1)]).unwrap();
        assert_eq!(classify_ac6(&two_arcs).unwrap_err(), Error::NotSixArcs(2));
        assert_eq!(classify_ac(&fixtures::closed_example(), 0).unwrap_err(), Error::NotSixArcs(30));
    }

    #[test]
    fn split_example_cycles_are_clean() {
        let g = fixtures::split_example();
        for c in 0..4 {
            assert_eq!(classify_ac(&g, c).unwrap().name, Ac6Name::XClean);
        }
    }
}
