//! End-to-end tests of the command-line binary: exit codes, output
//! formats, and determinism.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_convexcut")
}

fn run(args: &[&str]) -> Output {
    Command::new(exe()).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(exe())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn write_temp(name: &str, content: &[u8]) -> PathBuf {
    let path =
        std::env::temp_dir().join(format!("convexcut-cli-{}-{name}.txt", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

fn gen(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn bipartite_text_output_is_exact() {
    let c6 = write_temp("c6", gen(&["gen", "cycle", "6"]).as_bytes());
    let out = run(&["bipartite", c6.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "graph vertices 6 edges 6\n\
         cuts 3\n\
         cut edges 0 3 | side 0 4 5 | other 1 2 3\n\
         cut edges 1 4 | side 0 1 5 | other 2 3 4\n\
         cut edges 2 5 | side 0 1 2 | other 3 4 5\n"
    );
    let _ = std::fs::remove_file(c6);
}

#[test]
fn json_output_parses_and_matches_text_counts() {
    let w5 = write_temp("w5", gen(&["gen", "wheel", "5"]).as_bytes());
    let out = run(&["plane", w5.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["vertex_count"], 6);
    assert_eq!(value["cut_count"], 5);
    assert_eq!(value["cuts"].as_array().unwrap().len(), 5);
    for cut in value["cuts"].as_array().unwrap() {
        assert_eq!(cut["cyclic"], false);
        assert_eq!(cut["edges"].as_array().unwrap().len(), 4);
    }
    let _ = std::fs::remove_file(w5);
}

#[test]
fn dot_output_annotates_cut_edges() {
    let c4 = write_temp("c4", gen(&["gen", "cycle", "4"]).as_bytes());
    let out = run(&["oracle", c4.to_str().unwrap(), "--dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph convexcut {\n"));
    assert!(text.contains("v0 -- v1 [label=\"0 cuts 0\", style=dashed];"));
    assert!(text.ends_with("}\n"));
    let _ = std::fs::remove_file(c4);
}

#[test]
fn stdin_input_works() {
    let text = gen(&["gen", "grid", "3", "3"]);
    let out = run_stdin(&["plane", "-"], &text);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("graph vertices 9 edges 12\ncuts 4\n"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    // Family constraints are usage errors too.
    assert_eq!(run(&["gen", "cycle", "2"]).status.code(), Some(1));
    // Conflicting flags.
    let p = write_temp("conflict", gen(&["gen", "cycle", "6"]).as_bytes());
    assert_eq!(
        run(&["bipartite", p.to_str().unwrap(), "--json", "--dot"])
            .status
            .code(),
        Some(1)
    );
    let _ = std::fs::remove_file(p);
    // Help and version succeed.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_two() {
    let bad = write_temp("bad", b"not a graph\n");
    assert_eq!(
        run(&["bipartite", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let _ = std::fs::remove_file(bad);
    // Plane enumeration requires rotation lines.
    let norot = write_temp("norot", b"graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\n");
    let out = run(&["plane", norot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("rot"));
    let _ = std::fs::remove_file(norot);
    // Missing file.
    assert_eq!(
        run(&["bipartite", "/nonexistent/convexcut-input"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn property_violations_exit_three() {
    let c5 = write_temp("c5", gen(&["gen", "cycle", "5"]).as_bytes());
    let out = run(&["bipartite", c5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("bipartite"));
    // An odd cycle is not a partial cube either.
    assert_eq!(run(&["label", c5.to_str().unwrap()]).status.code(), Some(3));
    let _ = std::fs::remove_file(c5);
    // A graph with a cut vertex is rejected by the plane enumeration.
    let bowtie =
        "graph 5 6\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nedge 3 2 3\nedge 4 3 4\nedge 5 4 2\n\
                  rot 0 0 2\nrot 1 0 1\nrot 2 3 2 1 5\nrot 3 3 4\nrot 4 4 5\nouter 0 1 2 3 4 5\n";
    let bt = write_temp("bowtie", bowtie.as_bytes());
    let out = run(&["plane", bt.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let _ = std::fs::remove_file(bt);
}

#[test]
fn resource_cap_exits_four() {
    let g33 = write_temp("g33cap", gen(&["gen", "grid", "3", "3"]).as_bytes());
    let out = run(&["plane", g33.to_str().unwrap(), "--max-frontier", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8(out.stderr).unwrap().contains("frontier"));
    let _ = std::fs::remove_file(g33);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let inputs = [
        gen(&["gen", "hypercube", "3"]),
        gen(&["gen", "random-plane", "10", "--seed", "11"]),
        gen(&["gen", "complete-bipartite", "2", "4"]),
    ];
    for text in &inputs {
        for sub in ["plane", "oracle", "alternating", "well-arranged"] {
            let a = run_stdin(&[sub, "-"], text);
            let b = run_stdin(&[sub, "-"], text);
            assert!(a.status.success(), "{sub} failed: {a:?}");
            assert_eq!(a.stdout, b.stdout, "{sub} output differs");
        }
    }
}

#[test]
fn gen_serialization_is_stable() {
    // The same seed yields the same graph; different seeds differ.
    let a = gen(&["gen", "random", "10", "14", "--seed", "5"]);
    let b = gen(&["gen", "random", "10", "14", "--seed", "5"]);
    let c = gen(&["gen", "random", "10", "14", "--seed", "6"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert!(a.starts_with("graph 10 14\n"));
}

#[test]
fn bench_subcommand_reports_counts() {
    let out = run(&["bench", "--alg", "plane", "--rows", "5", "--cols", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("bench plane vertices 25 edges 40 cuts 8 millis"));
    let out = run(&["bench", "--alg", "bipartite", "--rows", "4", "--cols", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("bench bipartite vertices 24 edges 38 cuts 8 millis"));
}
