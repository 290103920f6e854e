use std::path::{Path, PathBuf};
use std::process::Command;

use encodings::{builtin_encodings, write_encoding};
use graph_core::{parse_graph, write_graph, ColorTable};

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["isokit".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = isokit::run(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn named(dir: &Path, spec: &str, file: &str) -> String {
    let (code, text) = run(&["gen", "named", spec]);
    assert_eq!(code, 0, "{spec}");
    write(dir, file, &text)
}

/// Parses and rewrites `text`; the result must be unchanged.
fn assert_round_trip(text: &str) {
    let mut t = ColorTable::new();
    let g = parse_graph(text, &mut t).unwrap();
    assert_eq!(write_graph(&g, &t), text);
}

#[test]
fn brute_iso_prints_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a = named(dir.path(), "P5", "a.g");
    let (_, shuffled) = run(&["gen", "shuffle", &a, "--seed", "7"]);
    let b = write(dir.path(), "b.g", &shuffled);
    let (code, out) = run(&["iso", "--engine", "brute", &a, &b]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ISO\n"));
    assert!(out.lines().any(|l| l.starts_with("witness ")));
}

#[test]
fn noniso_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let a = named(dir.path(), "P4", "a.g");
    let b = named(dir.path(), "K1,3", "b.g");
    for engine in ["brute", "ir", "blv:3", "gcv:3"] {
        let (code, out) = run(&["iso", "--engine", engine, &a, &b]);
        assert_eq!(code, 1, "{engine}");
        assert!(out.starts_with("NONISO\n"), "{engine}");
        assert!(out.lines().any(|l| l.starts_with("nodes ")));
    }
}

#[test]
fn class_solvers_print_routes() {
    let dir = tempfile::tempdir().unwrap();
    let a = named(dir.path(), "C4", "a.g");
    let b = named(dir.path(), "C4", "b.g");
    for engine in ["p5:4", "dstar:2,4", "h1b0:1,4"] {
        let (code, out) = run(&["iso", "--engine", engine, &a, &b]);
        assert_eq!(code, 0, "{engine}: {out}");
        assert!(out.lines().any(|l| l.starts_with("route ")), "{engine}");
    }
}

#[test]
fn builtin_fixture_excludes_k4() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = named(dir.path(), "K4", "k4.g");
    let (code, out) = run(&["encode-check", "--encoding", "builtin:2k2k1-k4", "--graph", &k4]);
    assert_eq!(code, 1);
    assert!(out.starts_with("EXCLUDED\nnodes "));
}

#[test]
fn encoding_file_round_trip_and_witness_map() {
    let dir = tempfile::tempdir().unwrap();
    let (_, enc) = builtin_encodings().into_iter().find(|(n, _)| *n == "p6-p4p2-k4").unwrap();
    let f = write(dir.path(), "e.enc", &write_encoding(&enc));
    let g = named(dir.path(), "P3", "p3.g");
    let (code, out) = run(&["encode-check", "--encoding", &f, "--graph", &g]);
    assert_eq!(code, 0);
    let map = out.lines().find_map(|l| l.strip_prefix("map ")).unwrap();
    assert_eq!(map.split(' ').count(), 3);
}

#[test]
fn classify_json_reports_status() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = named(dir.path(), "P5", "p5.g");
    let k6 = named(dir.path(), "K6", "k6.g");
    let (code, out) = run(&["classify", &p5, &k6, "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["status"], "PolyTime");
    let trail = doc["trail"].as_array().unwrap();
    assert!(!trail.is_empty());
    assert!(trail.iter().all(|s| s["rule"].is_string() && s["cite"].is_string()));
}

#[test]
fn classify_text_names_solver() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = named(dir.path(), "P5", "p5.g");
    let k6 = named(dir.path(), "K6", "k6.g");
    let (_, out) = run(&["classify", &p5, &k6]);
    assert!(out.starts_with("status PolyTime\n"));
    assert!(out.contains("\nsolver p5:6\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = named(dir.path(), "P5", "p5.g");
    let k6 = named(dir.path(), "K6", "k6.g");
    let bad = write(dir.path(), "bad.g", "g 3 2\ne 0 1\n");
    assert_eq!(run(&["iso", "--frobnicate", &p5, &p5]).0, 64);
    assert_eq!(run(&["iso", "--engine", "nope", &p5, &p5]).0, 64);
    assert_eq!(run(&["iso", &p5, &bad]).0, 64);
    assert_eq!(run(&["iso", &p5, "/nonexistent/x.g"]).0, 64);
    assert_eq!(run(&["iso", "--engine", "p5:6", &p5, &p5]).0, 2);
    assert_eq!(run(&["--budget", "3", "iso", "--engine", "ir", &k6, &k6]).0, 3);
    assert_eq!(run(&["moddecomp", &p5, "--functor", "degdep:x"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn refine_prints_sorted_partition() {
    let dir = tempfile::tempdir().unwrap();
    let g = named(dir.path(), "H(1,0,2,0)", "h.g");
    let (code, out) = run(&["refine", &g]);
    assert_eq!(code, 0);
    let mut all: Vec<usize> = Vec::new();
    for line in out.lines() {
        let class: Vec<usize> = line.split(' ').map(|x| x.parse().unwrap()).collect();
        assert!(class.windows(2).all(|w| w[0] < w[1]));
        all.extend(class);
    }
    all.sort_unstable();
    assert_eq!(all, (0..6).collect::<Vec<_>>());
}

#[test]
fn aut_reports_symmetric_group_order() {
    let dir = tempfile::tempdir().unwrap();
    let g = named(dir.path(), "co-K5", "i5.g");
    let (code, out) = run(&["aut", &g]);
    assert_eq!(code, 0);
    assert!(out.starts_with("order 120\n"));
}

#[test]
fn moddecomp_prints_family_quotient_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let g = named(dir.path(), "2K2+K1", "g.g");
    let (code, out) = run(&["moddecomp", &g]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("module nontrivial")).count(), 2);
    let q: String = out
        .lines()
        .skip_while(|l| *l != "quotient")
        .skip(1)
        .take_while(|l| !l.starts_with("trace"))
        .map(|l| format!("{l}\n"))
        .collect();
    assert!(q.starts_with("g 3 0\n"));
    assert_round_trip(&q);
    assert!(out.lines().any(|l| l.starts_with("trace depth 1")));
}

#[test]
fn invariant_agrees_on_relabelings() {
    let dir = tempfile::tempdir().unwrap();
    let a = named(dir.path(), "P4+2K2+K1,3", "a.g");
    let (_, s) = run(&["gen", "shuffle", &a, "--seed", "11"]);
    let b = write(dir.path(), "b.g", &s);
    let c = named(dir.path(), "P4+2K2+P4", "c.g");
    let (code, out) = run(&["invariant", &a, &b, &c]);
    assert_eq!(code, 0);
    let vals: Vec<&str> = out.lines().map(|l| l.rsplit(' ').next().unwrap()).collect();
    assert_eq!(vals[0], vals[1]);
    assert_ne!(vals[0], vals[2]);
}

#[test]
fn generated_and_reduced_graphs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["gen", "random", "--n", "9", "--p", "0.4", "--seed", "5"],
        vec!["gen", "bipartite", "--a", "4", "--b", "5", "--seed", "5"],
        vec!["gen", "named", "H(1,0,3,0)+co-C5"],
    ] {
        let (code, text) = run(&args);
        assert_eq!(code, 0);
        assert_round_trip(&text);
    }
    let g = named(dir.path(), "C5", "c5.g");
    let (code, text) = run(&["reduce", "--encoding", "builtin:2k2k1-k4", "--graph", &g]);
    assert_eq!(code, 0);
    assert_round_trip(&text);
}

#[test]
fn same_seed_same_bytes() {
    let a = run(&["gen", "random", "--n", "12", "--seed", "42"]).1;
    let b = run(&["gen", "random", "--n", "12", "--seed", "42"]).1;
    let c = run(&["gen", "random", "--n", "12", "--seed", "43"]).1;
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = named(dir.path(), "P5", "p5.g");
    let k4 = named(dir.path(), "K4", "k4.g");
    let bin = env!("CARGO_BIN_EXE_isokit");
    let ok = Command::new(bin).args(["iso", "--engine", "brute", &p5, &p5]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("witness"));
    let no = Command::new(bin).args(["iso", &p5, &k4]).output().unwrap();
    assert_eq!(no.status.code(), Some(1));
    let env = Command::new(bin).env("ISOKIT_BUDGET", "2").args(["aut", &k4]).output().unwrap();
    assert_eq!(env.status.code(), Some(3));
}
