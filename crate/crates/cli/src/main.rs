use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twodd::ac6::classify_ac;
use twodd::generation::{self, FamilySpec, DEFAULT_BUDGET};
use twodd::io::{self, Highlight, Report};
use twodd::quotient::{self, DEFAULT_SUBSET_CAP};
use twodd::split::{self, DEFAULT_MAX_SPLIT_SIZE};
use twodd::{
    certify, classify_ac6, enumerate_factors, factor::factor, index_of, is_closed, open_routes, parity_class,
    verify, CertifyOptions, Error, MethodChoice, Selection, TwoDigraph, VertexId,
};

const EXIT_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "twodd", version, about = "Alternating cycles, factors and Hamiltonicity certificates for 2-regular digraphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of alternating cycles for factor enumeration.
    #[arg(long, global = true, default_value_t = twodd::DEFAULT_CAP)]
    cap: usize,
    /// Decide parity classes by enumerating every factor.
    #[arg(long, global = true)]
    exhaustive: bool,
    /// Lift the enumeration budget for census runs.
    #[arg(long, global = true)]
    full_census: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Split,
    Closed,
    Reduce,
}

#[derive(Subcommand)]
enum Command {
    /// Summary: counts, index, parity class and certificate.
    Analyze { file: PathBuf },
    /// Alternating cycles with their halves and status.
    Decompose { file: PathBuf },
    /// Every factor with its cycles and paths.
    Factors { file: PathBuf },
    /// Distinct open routes and their permutation parity.
    Routes { file: PathBuf },
    /// Hamiltonicity verdict with a checkable witness.
    Certify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Minors defined by the open routes of a set of cycles.
    Quotient {
        file: PathBuf,
        /// Comma-separated alternating-cycle indices.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
    /// Minimal split sets and the splice-pair pieces of two-vertex sets.
    Split {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_SPLIT_SIZE)]
        max_size: usize,
    },
    /// Six-arc cycle form and its properties.
    ClassifyAc {
        file: PathBuf,
        /// Classify only this cycle of a larger graph.
        #[arg(long)]
        ac: Option<usize>,
    },
    /// One graph per isomorphism class of a family such as `B6_2` or `P6_1,clean`.
    Enumerate {
        family: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Family counts: total, connected, clean odd non-Hamiltonian, split-decided.
    Census {
        family: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Build a non-Hamiltonian 2-dd from two input graphs, or a random one.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Graphviz rendering with one colour per cycle.
    ExportDot {
        file: PathBuf,
        /// Highlight the factor with this selection string.
        #[arg(long, conflicts_with = "ac")]
        factor: Option<String>,
        /// Highlight this alternating cycle.
        #[arg(long)]
        ac: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Cross-splice one vertex of each of two even 2-dds.
    EvenPair { first: PathBuf, second: PathBuf },
    /// Splice a closed 2-digraph onto a complementary one.
    ClosedSplice { closed: PathBuf, other: PathBuf },
    /// Splice a graph with a unique open route into a non-Hamiltonian 2-dd.
    UniqueRoute { route: PathBuf, target: PathBuf },
    /// Random 2-dd with `m` cycles of `2k` arcs.
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. } | Error::TooManyAcs { .. } => {
                Failure::Limit(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(String, Value), Failure>;

fn load(path: &Path) -> Result<TwoDigraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn vertices(vs: &[VertexId]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn options(g: &Global, method: MethodArg) -> CertifyOptions {
    CertifyOptions {
        cap: g.cap,
        subset_cap: DEFAULT_SUBSET_CAP,
        method: match method {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Brute => MethodChoice::BruteForce,
            MethodArg::Split => MethodChoice::Split,
            MethodArg::Closed => MethodChoice::ClosedSubset,
            MethodArg::Reduce => MethodChoice::Reduction,
        },
    }
}

fn report(g: &TwoDigraph, opts: &CertifyOptions) -> Result<Report, Failure> {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let cert = certify(g, opts);
    timings.insert("certify".to_string(), ms(t));
    let t = Instant::now();
    let ok = verify(g, &cert)?;
    timings.insert("verify".to_string(), ms(t));
    if !ok {
        return Err(Failure::Input("certificate failed its own verification".into()));
    }
    Ok(Report::new(g, cert, timings))
}

fn analyze(g: &TwoDigraph, glob: &Global) -> Outcome {
    let r = report(g, &options(glob, MethodArg::Auto))?;
    let index = (g.ac_count() <= glob.cap).then(|| index_of(g, glob.cap)).transpose()?;
    let parity = if g.is_saturated() {
        Some(parity_class(g, glob.exhaustive, glob.cap)?.to_string())
    } else {
        None
    };
    let mut text = r.to_text();
    if let Some(i) = index {
        text.push_str(&format!("index: {i}\n"));
    }
    if let Some(p) = &parity {
        text.push_str(&format!("parity class: {p}\n"));
    }
    text.push_str(&format!("clean: {}\nconnected: {}\n", g.is_clean(), g.is_connected()));
    let mut j = serde_json::to_value(&r).expect("report serializes");
    j["index"] = json!(index);
    j["parity_class"] = json!(parity);
    j["clean"] = json!(g.is_clean());
    j["connected"] = json!(g.is_connected());
    Ok((text, j))
}

fn decompose(g: &TwoDigraph) -> Outcome {
    let mut text = format!("{} alternating cycles\n", g.ac_count());
    let mut rows = Vec::new();
    for (c, x) in g.acs().iter().enumerate() {
        let sub = g.induced_subgraph(&[c])?;
        let closed = is_closed(&sub, 1)?;
        let fwd: Vec<String> = x.forward().map(|a| a.to_string()).collect();
        let bwd: Vec<String> = x.backward().map(|a| a.to_string()).collect();
        text.push_str(&format!(
            "ac {c}: {} arcs, {}, {}, {}, forward [{}], backward [{}], internal [{}]\n",
            x.len(),
            x.parity(),
            if x.is_clean() { "clean" } else { "dirty" },
            if closed { "closed" } else { "open" },
            fwd.join(" "),
            bwd.join(" "),
            vertices(x.internal_vertices()),
        ));
        rows.push(json!({
            "index": c,
            "arcs": x.arcs(),
            "half_length": x.half_len(),
            "parity": x.parity(),
            "clean": x.is_clean(),
            "closed": closed,
            "internal_vertices": x.internal_vertices(),
        }));
    }
    Ok((text, json!({ "acs": rows })))
}

fn factors(g: &TwoDigraph, cap: usize) -> Outcome {
    let mut text = String::new();
    let mut rows = Vec::new();
    for f in enumerate_factors(g, cap)? {
        let cycles: Vec<String> = f.cycles().iter().map(|c| format!("({})", vertices(c))).collect();
        let paths: Vec<String> = f.paths().iter().map(|p| format!("[{}]", vertices(p))).collect();
        text.push_str(&format!(
            "{} index {} cycles {} paths {}\n",
            f.selection(),
            f.index(),
            cycles.join(" "),
            paths.join(" ")
        ));
        rows.push(json!({
            "selection": f.selection(),
            "index": f.index(),
            "cycles": f.cycles(),
            "paths": f.paths(),
        }));
    }
    Ok((text, json!({ "factors": rows })))
}

fn routes(g: &TwoDigraph, cap: usize) -> Outcome {
    let rs = open_routes(g, cap)?;
    let mut text = format!("{} open routes\n", rs.len());
    for r in &rs {
        text.push_str(&format!("{r} ({})\n", r.parity()));
    }
    let rows: Vec<Value> = rs.iter().map(|r| json!({ "mapping": r.mapping, "parity": r.parity() })).collect();
    Ok((text, json!({ "routes": rows })))
}

fn quotient_cmd(g: &TwoDigraph, k: &[usize]) -> Outcome {
    let q = quotient::quotient(g, k)?;
    let mut text = format!("{} minors\n", q.len());
    let mut rows = Vec::new();
    for m in &q.minors {
        text.push_str(&format!("route {}\n{}", m.route, io::serialize(&m.graph)));
        rows.push(json!({ "route": m.route.mapping, "selection": m.selection, "graph": io::serialize(&m.graph) }));
    }
    Ok((text, json!({ "k": k, "minors": rows })))
}

fn split_cmd(g: &TwoDigraph, max_size: usize, exhaustive: bool) -> Outcome {
    let sets = split::minimal_split_sets(g, max_size);
    let mut text = format!("{} minimal split sets\n", sets.len());
    let mut rows = Vec::new();
    for s in &sets {
        text.push_str(&format!("{{{}}}", vertices(&s.vertices)));
        let mut row = json!({ "vertices": s.vertices });
        if let [u, v] = s.vertices[..] {
            if g.is_saturated() && g.is_connected() {
                let rep = split::split_report(g, u, v, exhaustive)?;
                let ps: Vec<String> = rep.parities.iter().map(ToString::to_string).collect();
                text.push_str(&format!(" pieces {}", ps.join(" ")));
                row["pieces"] = json!(rep.spliced.iter().map(io::serialize).collect::<Vec<_>>());
                row["parities"] = json!(ps);
            }
        }
        text.push('\n');
        rows.push(row);
    }
    Ok((text, json!({ "split_sets": rows })))
}

fn classify_cmd(g: &TwoDigraph, ac: Option<usize>) -> Outcome {
    let classes = match ac {
        Some(c) => vec![(c, classify_ac(g, c)?)],
        None if g.ac_count() == 1 => vec![(0, classify_ac6(g)?)],
        None => (0..g.ac_count())
            .filter(|&c| g.acs()[c].len() == 6)
            .map(|c| classify_ac(g, c).map(|x| (c, x)))
            .collect::<Result<_, _>>()?,
    };
    if classes.is_empty() {
        return Err(Failure::Input("no alternating cycle has six arcs".into()));
    }
    let mut text = String::from("ac name vertices loops exit/entry open_factors routes status\n");
    for (c, x) in &classes {
        text.push_str(&format!(
            "{c} {} {} {} {} {} {} {}\n",
            x.name,
            x.vertices,
            x.loops,
            x.exit_entry,
            x.open_factors,
            x.open_routes,
            if x.closed { "closed" } else { "open" }
        ));
    }
    let rows: Vec<Value> = classes.iter().map(|(c, x)| json!({ "ac": c, "class": x })).collect();
    Ok((text, json!({ "classes": rows })))
}

fn budget(glob: &Global, explicit: Option<u64>) -> u64 {
    if glob.full_census {
        u64::MAX
    } else {
        explicit.unwrap_or(DEFAULT_BUDGET)
    }
}

fn construct(kind: &Construction, glob: &Global) -> Outcome {
    let g = match kind {
        Construction::EvenPair { first, second } => {
            let (a, b) = (load(first)?, load(second)?);
            let pick = |g: &TwoDigraph, salt: u64| {
                let sat = g.saturated();
                if sat.is_empty() {
                    return Err(Failure::Input("graph has no saturated vertex".into()));
                }
                Ok(sat[(glob.seed.wrapping_add(salt) % sat.len() as u64) as usize])
            };
            split::even_pair_splice(&a, &b, pick(&a, 0)?, pick(&b, 1)?)?
        }
        Construction::ClosedSplice { closed, other } => {
            generation::construct_closed_splice(&load(closed)?, &load(other)?, glob.seed)?
        }
        Construction::UniqueRoute { route, target } => {
            generation::construct_unique_route_splice(&load(route)?, &load(target)?, glob.seed)?
        }
        Construction::Random { m, k } => generation::random_2dd(*m, *k, glob.seed),
    };
    let r = report(&g, &options(glob, MethodArg::Auto))?;
    let text = io::serialize(&g);
    Ok((text, json!({ "graph": io::serialize(&g), "report": r })))
}

fn run(cli: &Cli) -> Outcome {
    let glob = &cli.global;
    match &cli.command {
        Command::Analyze { file } => analyze(&load(file)?, glob),
        Command::Decompose { file } => decompose(&load(file)?),
        Command::Factors { file } => factors(&load(file)?, glob.cap),
        Command::Routes { file } => routes(&load(file)?, glob.cap),
        Command::Certify { file, method } => {
            let g = load(file)?;
            let r = report(&g, &options(glob, *method))?;
            Ok((r.to_text(), serde_json::to_value(&r).expect("report serializes")))
        }
        Command::Quotient { file, k } => quotient_cmd(&load(file)?, k),
        Command::Split { file, max_size } => split_cmd(&load(file)?, *max_size, glob.exhaustive),
        Command::ClassifyAc { file, ac } => classify_cmd(&load(file)?, *ac),
        Command::Enumerate { family, budget: b } => {
            let spec: FamilySpec = family.parse()?;
            let graphs = generation::enumerate_family(&spec, budget(glob, *b))?;
            let text = io::serialize_many(&graphs);
            let j = json!({ "family": spec.to_string(), "count": graphs.len(), "graphs": graphs.iter().map(io::serialize).collect::<Vec<_>>() });
            Ok((text, j))
        }
        Command::Census { family, budget: b } => {
            let spec: FamilySpec = family.parse()?;
            let row = generation::census(&spec, budget(glob, *b))?;
            let text = format!(
                "{}: total {}, connected {}, clean odd non-Hamiltonian {}, split-decided {}\n",
                spec, row.total, row.connected, row.clean_odd_nonham, row.split_decided
            );
            Ok((text, serde_json::to_value(&row).expect("row serializes")))
        }
        Command::Construct { kind } => construct(kind, glob),
        Command::ExportDot { file, factor: sel, ac } => {
            let g = load(file)?;
            let f = match sel {
                Some(s) => {
                    let sel = Selection::try_from(s.clone()).map_err(Failure::Input)?;
                    Some(factor(&g, &sel)?)
                }
                None => None,
            };
            let highlight = match (&f, ac) {
                (Some(f), _) => Highlight::Factor(f),
                (None, Some(c)) if *c < g.ac_count() => Highlight::Ac(*c),
                (None, Some(c)) => return Err(Error::UnknownAc(*c).into()),
                (None, None) => Highlight::None,
            };
            let dot = io::export_dot(&g, highlight);
            Ok((dot.clone(), json!({ "dot": dot })))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, j)) => {
            match cli.global.format {
                Format::Text => print!("{text}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&j).expect("json")),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_LIMIT)
        }
    }
}
