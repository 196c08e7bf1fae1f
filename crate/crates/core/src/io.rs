//! Arc-list text format, DOT export and certificate reports.
//!
//! The arc-list format is line oriented:
//!
//! ```text
//! 2dd 1
//! # comment
//! 0 1 2
//! 1 3 2
//! ```
//!
//! The first line is the magic and version; each further line is
//! `<arc_id> <tail> <head>`. Vertices are implied by arc endpoints.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Method, Verdict, Witness};
use crate::error::{Error, Result};
use crate::factor::Factor;
use crate::graph::TwoDigraph;

pub const MAGIC: &str = "2dd";
pub const VERSION: &str = "1";

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Byte columns (1-based) and text of the whitespace-separated tokens.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_header(line_no: usize, line: &str) -> Result<()> {
    let toks = tokens(line);
    match toks.as_slice() {
        [(_, m), (c, v)] if *m == MAGIC => {
            if *v == VERSION {
                Ok(())
            } else {
                Err(syntax(line_no, *c, format!("unsupported format version {v:?}")))
            }
        }
        [(c, _), ..] => Err(syntax(line_no, *c, format!("expected header `{MAGIC} {VERSION}`"))),
        [] => Err(syntax(line_no, 1, format!("expected header `{MAGIC} {VERSION}`"))),
    }
}

/// Parses one graph in arc-list format.
pub fn parse(text: &str) -> Result<TwoDigraph> {
    parse_from(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

fn parse_from<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<TwoDigraph> {
    let (first_no, first) = lines.next().ok_or_else(|| syntax(1, 1, "empty input"))?;
    parse_header(first_no, first)?;
    let mut arcs = Vec::new();
    for (no, line) in lines {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(line);
        if toks.len() != 3 {
            let col = toks.get(3).map_or(line.len() + 1, |t| t.0);
            return Err(syntax(no, col, format!("expected `<arc_id> <tail> <head>`, found {} fields", toks.len())));
        }
        let mut nums = [0u32; 3];
        for (slot, &(col, tok)) in nums.iter_mut().zip(&toks) {
            *slot = tok
                .parse()
                .map_err(|_| syntax(no, col, format!("{tok:?} is not a non-negative integer")))?;
        }
        arcs.push((nums[0], nums[1], nums[2]));
    }
    TwoDigraph::from_arcs(&arcs)
}

/// Parses a stream of graphs, each starting with its own header line.
pub fn parse_many(text: &str) -> Result<Vec<TwoDigraph>> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let starts: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, (_, l))| tokens(l).first().map(|t| t.1) == Some(MAGIC))
        .map(|(i, _)| i)
        .collect();
    if let Some(&(no, l)) = lines.iter().take(starts.first().copied().unwrap_or(lines.len())).find(|(_, l)| {
        let t = l.trim_start();
        !t.is_empty() && !t.starts_with('#')
    }) {
        return Err(syntax(no, 1, format!("content before first header: {l:?}")));
    }
    starts
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let end = starts.get(k + 1).copied().unwrap_or(lines.len());
            parse_from(lines[s..end].iter().copied())
        })
        .collect()
}

/// Arc-list text of `g`, arcs in id order.
pub fn serialize(g: &TwoDigraph) -> String {
    let mut s = format!("{MAGIC} {VERSION}\n");
    for a in g.arcs() {
        writeln!(s, "{} {} {}", a.id.0, a.tail.0, a.head.0).expect("write to string");
    }
    s
}

/// Graphs separated by blank lines.
pub fn serialize_many<'a>(graphs: impl IntoIterator<Item = &'a TwoDigraph>) -> String {
    graphs.into_iter().map(serialize).collect::<Vec<_>>().join("\n")
}

const PALETTE: [&str; 10] = [
    "red", "blue", "green", "magenta", "orange", "cyan", "brown", "purple", "olive", "navy",
];

#[derive(Debug, Clone, Copy, Default)]
pub enum Highlight<'a> {
    #[default]
    None,
    Factor(&'a Factor),
    Ac(usize),
}

/// Graphviz rendering: one colour per alternating cycle, forward arcs solid,
/// backward arcs dashed. Highlighted arcs are drawn thick.
pub fn export_dot(g: &TwoDigraph, highlight: Highlight<'_>) -> String {
    let mut s = String::from("digraph \"2dd\" {\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(s, "  {v};").expect("write");
    }
    for (c, x) in g.acs().iter().enumerate() {
        let color = PALETTE[c % PALETTE.len()];
        for (pos, &id) in x.arcs().iter().enumerate() {
            let a = g.arc(id).expect("arc of cycle");
            let style = if pos % 2 == 0 { "solid" } else { "dashed" };
            let bold = match highlight {
                Highlight::None => false,
                Highlight::Factor(f) => f.arcs().binary_search(&id).is_ok(),
                Highlight::Ac(k) => k == c,
            };
            write!(s, "  {} -> {} [color={color}, style={style}, label=\"{}\"", a.tail, a.head, id.0).expect("write");
            if bold {
                s.push_str(", penwidth=3");
            }
            s.push_str("];\n");
        }
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub vertices: usize,
    pub arcs: usize,
    pub acs: usize,
    pub entry: usize,
    pub exit: usize,
    pub saturated: usize,
}

impl Counts {
    pub fn of(g: &TwoDigraph) -> Self {
        Counts {
            vertices: g.vertex_count(),
            arcs: g.arc_count(),
            acs: g.ac_count(),
            entry: g.entry_count(),
            exit: g.exit_count(),
            saturated: g.saturated_count(),
        }
    }
}

/// Certificate plus graph summary and per-stage timings, serialized with
/// the keys `verdict`, `method`, `witness`, `counts`, `timings`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verdict: Verdict,
    pub method: Option<Method>,
    pub witness: Witness,
    pub counts: Counts,
    /// Stage name to milliseconds.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(g: &TwoDigraph, cert: Certificate, timings: BTreeMap<String, f64>) -> Self {
        Report {
            verdict: cert.verdict,
            method: cert.method,
            witness: cert.witness,
            counts: Counts::of(g),
            timings,
        }
    }

    pub fn certificate(&self) -> Certificate {
        Certificate {
            verdict: self.verdict,
            method: self.method,
            witness: self.witness.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let c = &self.counts;
        let mut s = String::new();
        writeln!(s, "verdict: {}", self.verdict).expect("write");
        match self.method {
            Some(m) => writeln!(s, "method: {m}").expect("write"),
            None => writeln!(s, "method: none").expect("write"),
        }
        writeln!(
            s,
            "graph: {} vertices, {} arcs, {} alternating cycles ({} entry, {} exit, {} saturated)",
            c.vertices, c.arcs, c.acs, c.entry, c.exit, c.saturated
        )
        .expect("write");
        writeln!(s, "witness: {}", self.witness.summary()).expect("write");
        for (stage, ms) in &self.timings {
            writeln!(s, "time {stage}: {ms:.3} ms").expect("write");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_fixtures_parse() {
        let g = fixtures::split_example();
        assert_eq!((g.vertex_count(), g.arc_count(), g.ac_count()), (12, 24, 4));
        let g = fixtures::closed_example();
        assert_eq!((g.vertex_count(), g.arc_count(), g.ac_count()), (30, 60, 2));
    }

    #[test]
    fn header_errors() {
        let err = parse("2dd 2\n0 1 1\n1 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, column: 5, .. }), "{err:?}");
        assert!(matches!(parse("graph 1\n").unwrap_err(), Error::Syntax { line: 1, column: 1, .. }));
        assert!(matches!(parse("").unwrap_err(), Error::Syntax { line: 1, .. }));
    }

    #[test]
    fn line_errors_carry_position() {
        let err = parse("2dd 1\n# loops\n0 1 1\n1 1 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 4,
                column: 5,
                message: "\"x\" is not a non-negative integer".into()
            }
        );
        let err = parse("2dd 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        // build errors pass through
        let err = parse("2dd 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::DegreeViolation { .. }));
    }

    #[test]
    fn stream_round_trip() {
        let gs = vec![fixtures::x_clean(), fixtures::doubled_digon(), fixtures::split_example()];
        let text = serialize_many(&gs);
        assert_eq!(parse_many(&text).unwrap(), gs);
        assert!(parse_many("0 1 1\n2dd 1\n0 1 1\n1 1 1\n").is_err());
    }

    #[test]
    fn dot_styles() {
        let dot = export_dot(&fixtures::x_clean(), Highlight::None);
        assert_eq!(dot.matches("style=solid").count(), 3);
        assert_eq!(dot.matches("style=dashed").count(), 3);
        assert_eq!(dot.matches("color=red").count(), 6);
        assert!(!dot.contains("penwidth"));
        let dot3 = export_dot(&fixtures::closed_example(), Highlight::Ac(1));
        assert_eq!(dot3.matches("color=red").count(), 30);
        assert_eq!(dot3.matches("color=blue").count(), 30);
        assert_eq!(dot3.matches("penwidth").count(), 30);
        assert_eq!(export_dot(&fixtures::closed_example(), Highlight::None), export_dot(&fixtures::closed_example(), Highlight::None));
    }
}
