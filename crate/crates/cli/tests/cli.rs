use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twodd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn certify_split_example() {
    let o = run(&["certify", &fixture("fig2.2dd")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("verdict: NonHamiltonian"));
    assert!(s.contains("method: split_parity"));
}

#[test]
fn certify_json_has_contract_keys() {
    let o = run(&["certify", &fixture("fig3.2dd"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["verdict", "method", "witness", "counts", "timings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["verdict"], "NonHamiltonian");
    assert_eq!(v["method"], "closed_subset");
}

#[test]
fn forced_brute_force_agrees() {
    let o = run(&["certify", "--method", "brute", &fixture("fig2.2dd"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "NonHamiltonian");
    assert_eq!(v["method"], "brute_force");
}

#[test]
fn decompose_closed_example() {
    let o = run(&["decompose", &fixture("fig3.2dd"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let acs = v["acs"].as_array().unwrap();
    assert_eq!(acs.len(), 2);
    for ac in acs {
        assert_eq!(ac["clean"], false);
        assert_eq!(ac["closed"], true);
        assert_eq!(ac["arcs"].as_array().unwrap().len(), 30);
    }
}

#[test]
fn classify_xclean_prints_row() {
    let o = run(&["classify-ac", &fixture("xclean.2dd")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 X_clean 6 0 3 2 2 open"));
}

#[test]
fn enumerate_streams_records() {
    let o = run(&["enumerate", "P6_1"]);
    assert_eq!(o.status.code(), Some(0));
    let graphs = twodd::io::parse_many(&stdout(&o)).unwrap();
    assert_eq!(graphs.len(), 10);
    assert_eq!(graphs.iter().filter(|g| g.is_saturated()).count(), 3);
}

#[test]
fn split_reports_even_pieces() {
    let s = stdout(&run(&["split", &fixture("fig2.2dd"), "--max-size", "2"]));
    assert!(s.contains("{5 7} pieces even even"), "{s}");
}

#[test]
fn export_dot_styles_halves() {
    let s = stdout(&run(&["export-dot", &fixture("fig2.2dd"), "--ac", "1"]));
    assert!(s.starts_with("digraph"));
    assert!(s.contains("dashed") && s.contains("penwidth=3"));
}

#[test]
fn construct_random_is_a_2dd() {
    let o = run(&["construct", "random", "--m", "2", "--k", "3", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let g = twodd::io::parse(&stdout(&o)).unwrap();
    assert!(g.is_saturated());
    assert_eq!(g.ac_count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["certify"]).status.code(), Some(64));
    assert_eq!(run(&["certify", "/nonexistent/g.2dd"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "Q6_1"]).status.code(), Some(2));
    assert_eq!(run(&["census", "B6_6", "--budget", "10"]).status.code(), Some(3));
    assert_eq!(run(&["factors", &fixture("fig2.2dd"), "--cap", "3"]).status.code(), Some(3));
}

#[test]
fn malformed_input_reports_position() {
    let dir = std::env::temp_dir().join(format!("twodd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.2dd");
    std::fs::write(&path, "2dd 1\n0 1 2\n1 1 x\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}
