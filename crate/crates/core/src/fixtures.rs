//! The worked examples: the ten six-arc alternating cycles, the 12-vertex
//! split-set example and the 30-vertex vertex-transitive example.

use crate::graph::TwoDigraph;
use crate::io::parse;

pub const X_CLEAN: &str = include_str!("../fixtures/xclean.2dd");
pub const X_1L: &str = include_str!("../fixtures/x1l.2dd");
pub const X_1S: &str = include_str!("../fixtures/x1s.2dd");
pub const X_2L: &str = include_str!("../fixtures/x2l.2dd");
pub const X_2S: &str = include_str!("../fixtures/x2s.2dd");
pub const XC_2L: &str = include_str!("../fixtures/xc2l.2dd");
pub const XC_1L1S: &str = include_str!("../fixtures/xc1l1s.2dd");
pub const XC_2L1S: &str = include_str!("../fixtures/xc2l1s.2dd");
pub const XC_3L: &str = include_str!("../fixtures/xc3l.2dd");
pub const XC_3S: &str = include_str!("../fixtures/xc3s.2dd");
pub const SPLIT_EXAMPLE: &str = include_str!("../fixtures/fig2.2dd");
pub const CLOSED_EXAMPLE: &str = include_str!("../fixtures/fig3.2dd");

/// Fixture name and text of every six-arc form, in classification order.
pub const AC6_FORMS: [(&str, &str); 10] = [
    ("X_clean", X_CLEAN),
    ("X_1L", X_1L),
    ("X_1S", X_1S),
    ("X_2L", X_2L),
    ("X_2S", X_2S),
    ("Xc_2L", XC_2L),
    ("Xc_1L1S", XC_1L1S),
    ("Xc_2L1S", XC_2L1S),
    ("Xc_3L", XC_3L),
    ("Xc_3S", XC_3S),
];

fn load(text: &str) -> TwoDigraph {
    parse(text).expect("bundled fixture parses")
}

pub fn x_clean() -> TwoDigraph {
    load(X_CLEAN)
}
pub fn x_1l() -> TwoDigraph {
    load(X_1L)
}
pub fn x_1s() -> TwoDigraph {
    load(X_1S)
}
pub fn x_2l() -> TwoDigraph {
    load(X_2L)
}
pub fn x_2s() -> TwoDigraph {
    load(X_2S)
}
pub fn xc_2l() -> TwoDigraph {
    load(XC_2L)
}
pub fn xc_1l1s() -> TwoDigraph {
    load(XC_1L1S)
}
pub fn xc_2l1s() -> TwoDigraph {
    load(XC_2L1S)
}
pub fn xc_3l() -> TwoDigraph {
    load(XC_3L)
}
pub fn xc_3s() -> TwoDigraph {
    load(XC_3S)
}

/// 12-vertex odd non-Hamiltonian 2-dd with four clean six-arc cycles and
/// minimal split set {5, 7}.
pub fn split_example() -> TwoDigraph {
    load(SPLIT_EXAMPLE)
}

/// 30-vertex vertex-transitive odd non-Hamiltonian 2-dd with two closed
/// 30-arc cycles.
pub fn closed_example() -> TwoDigraph {
    load(CLOSED_EXAMPLE)
}

/// Two vertices joined by two parallel arcs in each direction.
pub fn doubled_digon() -> TwoDigraph {
    TwoDigraph::from_pairs(&[(1, 2), (1, 2), (2, 1), (2, 1)]).expect("valid")
}
