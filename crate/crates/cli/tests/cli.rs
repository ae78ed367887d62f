//! Golden outputs for every subcommand, plus exit-status conventions.

use std::path::PathBuf;

use locdom_cli::cli::run;
use tempfile::TempDir;

struct Bench {
    dir: TempDir,
}

impl Bench {
    fn new() -> Self {
        Bench {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn path10(&self) -> PathBuf {
        let edges: String = (1..10).map(|i| format!("{i} {}\n", i + 1)).collect();
        self.file("p10.graph", &format!("10 9\n{edges}"))
    }
}

fn ld(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("ld").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn s(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gamma_of_p10() {
    let b = Bench::new();
    assert_eq!(
        ld(&["gamma", s(&b.path10())]),
        (0, "gamma=4\n".into(), String::new())
    );
}

#[test]
fn enumerate_p7() {
    let b = Bench::new();
    let g = b.file("p7.graph", "7 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
    let (code, out, _) = ld(&["enumerate", s(&g)]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "gamma=3\ncount=3\ncode=1,4,6\ncode=2,4,6\ncode=2,4,7\n"
    );
    let (_, out, _) = ld(&["enumerate", s(&g), "--max-report", "1"]);
    assert_eq!(
        out,
        "gamma=3\ncount=3\ncode=1,4,6\n# 2 more codes not shown\n"
    );
    let (_, out, _) = ld(&["--machine", "enumerate", s(&g), "--max-report", "1"]);
    assert_eq!(out, "gamma=3\ncount=3\ncode=1,4,6\n");
}

#[test]
fn forced_and_void_of_p10() {
    let b = Bench::new();
    let g = b.path10();
    assert_eq!(
        ld(&["forced", s(&g), "--method", "both"]).1,
        "forced=2,4,7,9\nagree=true\n"
    );
    assert_eq!(
        ld(&["forced", s(&g), "--method", "characterization"]).1,
        "forced=2,4,7,9\n"
    );
    assert_eq!(
        ld(&["void", s(&g)]).1,
        "void=1,3,5,6,8,10\nforced=2,4,7,9\nfree=\n"
    );
}

#[test]
fn colour_graph_of_k2() {
    let b = Bench::new();
    let g = b.file("k2.graph", "2 1\n1 2\n");
    let (code, out, _) = ld(&["colour-graph", s(&g), "--code", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1 colour=1\n0 2 colour=1\n1 2 colour=1\n");
}

#[test]
fn colour_graph_verification_of_p10() {
    let b = Bench::new();
    let g = b.path10();
    let (code, out, _) = ld(&[
        "--machine",
        "colour-graph",
        s(&g),
        "--code",
        "2,4,7,9",
        "--verify",
        "--two-edge-subgraph",
        "forced",
    ]);
    assert_eq!(code, 0, "{out}");
    for line in [
        "property.distinct-at-endpoint=pass",
        "property.even-trails-closed=pass",
        "colour.2=4/2",
        "subgraph_vertices=7",
        "subgraph_edges=8",
        "subgraph_components=1",
        "bound_tight=true",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line} in\n{out}");
    }
    assert!(!out.contains('#'));
}

#[test]
fn colour_graph_rejects_non_codes() {
    let b = Bench::new();
    let (code, _, err) = ld(&["colour-graph", s(&b.path10()), "--code", "2,4"]);
    assert_eq!(code, 2);
    assert!(err.contains("not locating-dominating"), "{err}");
}

#[test]
fn two_edge_subgraph_without_enough_edges_fails() {
    // P_3 with the non-minimal code {1,2,3}: colour 1 has no inner edges
    let b = Bench::new();
    let g = b.file("p3.graph", "3 2\n1 2\n2 3\n");
    let (code, out, _) = ld(&[
        "colour-graph",
        s(&g),
        "--code",
        "1,2,3",
        "--two-edge-subgraph",
        "1,3",
    ]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("subgraph_error="));
}

#[test]
fn count_paths_table() {
    let (code, out, _) = ld(&[
        "--machine",
        "count-paths",
        "--n-max",
        "7",
        "--verify-brute",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n=1 recurrence=1 closed=- brute=1\n\
         n=2 recurrence=2 closed=- brute=2\n\
         n=3 recurrence=3 closed=- brute=3\n\
         n=4 recurrence=4 closed=- brute=4\n\
         n=5 recurrence=1 closed=1 brute=1\n\
         n=6 recurrence=8 closed=8 brute=8\n\
         n=7 recurrence=3 closed=3 brute=-\n\
         agree=true\n"
    );
}

#[test]
fn generators() {
    assert_eq!(ld(&["--machine", "gen", "path", "3"]).1, "3 2\n1 2\n2 3\n");
    assert_eq!(
        ld(&["--machine", "gen", "cycle", "3"]).1,
        "3 3\n1 2\n1 3\n2 3\n"
    );
    assert_eq!(ld(&["--machine", "gen", "star", "2"]).1, "3 2\n1 2\n1 3\n");
    assert_eq!(
        ld(&["--machine", "gen", "broom", "2", "2"]).1,
        "4 3\n1 2\n2 3\n2 4\n"
    );
    assert_eq!(
        ld(&["--machine", "gen", "voidext", "2"]).1,
        "5 4\n1 3\n1 5\n2 4\n2 5\n"
    );
    assert_eq!(ld(&["gen", "path", "2"]).1, "# path P_2\n2 1\n1 2\n");
    assert_eq!(ld(&["gen", "path", "0"]).0, 2);
}

#[test]
fn random_generation_follows_the_seed() {
    let a = ld(&["--seed", "7", "gen", "random", "9", "0.3"]);
    let b = ld(&["--seed", "7", "gen", "random", "9", "0.3"]);
    let c = ld(&["--seed", "8", "gen", "random", "9", "0.3"]);
    assert_eq!(a, b);
    assert_ne!(a.1, c.1);
    assert!(a
        .1
        .starts_with("# random connected, n = 9, p = 0.3, seed = 7\n"));
}

#[test]
fn generated_files_round_trip() {
    let b = Bench::new();
    let out = b.dir.path().join("b.graph");
    assert_eq!(ld(&["gen", "broom", "9", "1", "-o", s(&out)]).0, 0);
    assert_eq!(ld(&["gamma", s(&out)]).1, "gamma=4\n");
}

#[test]
fn reduction_commands() {
    let b = Bench::new();
    let sat = b.file("sat.cnf", "c one clause\np cnf 2 1\n1 2 -1 0\n");
    let (code, out, _) = ld(&["verify-reduction", s(&sat)]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "satisfiable=true\ngamma=6\nexpected_gamma=6\nminimum_codes=56\nno_alpha_in_codes=true\n\
         one_literal_per_variable=true\none_of_w_v=true\nw_forced=false\nv_void=false\npassed=true\n"
    );
    let unsat = b.file("unsat.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    let (code, out, _) = ld(&["verify-reduction", s(&unsat)]);
    assert_eq!(code, 0);
    assert!(out.contains("satisfiable=false\n") && out.contains("w_forced=true\n"));
    let (code, out, _) = ld(&["--machine", "gen", "reduction", s(&sat)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("13 15\n"));
    let bad = b.file("bad.cnf", "p cnf 2 1\n1 2 0\n");
    let (code, _, err) = ld(&["verify-reduction", s(&bad)]);
    assert_eq!(code, 2);
    assert!(err.contains("exactly 3"), "{err}");
}

#[test]
fn check_bounds() {
    let b = Bench::new();
    let (code, out, _) = ld(&["--machine", "check-bounds", s(&b.path10())]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n=10\ngamma=4\nforced=4\ntwo_thirds_slack=0\ntwo_thirds_tight=true\n\
         two_fifths_slack=0\ntwo_fifths_tight=true\ngamma_room=3\nholds=true\n"
    );
    let star = b.file("k13.graph", "4 3\n1 2\n1 3\n1 4\n");
    let (code, out, _) = ld(&["check-bounds", s(&star)]);
    assert_eq!(code, 0);
    assert!(out.contains("forced=0\n# no forced vertices, nothing asserted\n"));
    let split = b.file("split.graph", "4 1\n1 2\n");
    assert_eq!(ld(&["check-bounds", s(&split)]).0, 2);
}

#[test]
fn reproduce_selected_groups() {
    let (code, out, _) = ld(&["--machine", "reproduce-all", "--only", "paths,void"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(
        out,
        format!(
            "seed={}\ncriterion.1=pass\ncriterion.2=pass\ncriterion.3=pass\ncriterion.4=pass\n\
             criterion.10=pass\nfailed=0\n",
            locdom_cli::cli::DEFAULT_SEED
        )
    );
}

#[test]
fn seed_comes_from_the_environment() {
    // LD_SEED is read through clap; an explicit flag wins over it
    let (_, out, _) = ld(&[
        "--machine",
        "--seed",
        "99",
        "reproduce-all",
        "--only",
        "void",
    ]);
    assert!(out.starts_with("seed=99\n"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let (code, _, err) = ld(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("unrecognized subcommand"));
    assert_eq!(ld(&["reproduce-all", "--only", "nonsense"]).0, 2);
    assert_eq!(ld(&["gamma", "/nonexistent/graph"]).0, 2);
    let b = Bench::new();
    let loop_ = b.file("loop.graph", "2 1\n1 1\n");
    let (code, _, err) = ld(&["gamma", s(&loop_)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2: self-loop"), "{err}");
    assert_eq!(ld(&["count-paths", "--n-max", "0"]).0, 2);
    assert_eq!(ld(&["--help"]).0, 0);
}
