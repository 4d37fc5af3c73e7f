mod common;

use common::{contactkit, ERRORS, GOLDEN};

#[test]
fn golden_outputs_are_byte_exact() {
    let bad = common::golden_mismatches();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
    assert!(GOLDEN.len() >= 9);
}

#[test]
fn error_paths_exit_codes() {
    let bad = common::error_mismatches();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
    assert!(ERRORS.iter().any(|e| e.code == 1));
    assert!(ERRORS.iter().any(|e| e.code == 2));
}

#[test]
fn negative_expressions_as_flag_values() {
    let run = contactkit(&["bracket", "-H1", "-x", "-H2", "y"], None);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "-1\n");
}

#[test]
fn bracket_in_higher_dimension() {
    let run = contactkit(&["bracket", "-n", "3", "-H1", "x3", "-H2", "y3"], None);
    assert_eq!(run.stdout, "1\n");
    let run = contactkit(&["bracket", "-n", "3", "-H1", "x1", "-H2", "y2"], None);
    assert_eq!(run.stdout, "0\n");
}

#[test]
fn check_emits_one_record_per_trial() {
    let run = contactkit(
        &[
            "check", "--suite", "jacobi", "--seed", "7", "--n", "2", "--trials", "5",
        ],
        None,
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines: Vec<serde_json::Value> = run
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect();
    assert_eq!(lines.len(), 6);
    for (i, rec) in lines[..5].iter().enumerate() {
        assert_eq!(rec["suite"], "jacobi");
        assert_eq!(rec["trial"], i as u64);
        assert_eq!(rec["status"], "pass");
        assert!(rec["seed"].is_u64());
    }
    let summary = &lines[5];
    assert_eq!(summary["trials"], 5);
    assert_eq!(summary["failures"], 0);
    assert_eq!(summary["seed"], 7);
    assert_eq!(summary["n"], 2);
}

#[test]
fn check_seed_from_environment() {
    let args = ["check", "--suite", "trace", "--trials", "3"];
    let from_env = contactkit(&args, Some(("CONTACTKIT_SEED", "99")));
    let explicit = contactkit(
        &["check", "--suite", "trace", "--trials", "3", "--seed", "99"],
        None,
    );
    let records = |s: &str| s.lines().take(3).map(str::to_owned).collect::<Vec<_>>();
    assert_eq!(from_env.code, 0);
    assert_eq!(records(&from_env.stdout), records(&explicit.stdout));
    let default = contactkit(&args, None);
    assert_ne!(records(&default.stdout), records(&explicit.stdout));
    assert!(default.stdout.contains("\"seed\":0,"));
}

#[test]
fn json_records_for_multi_valued_output() {
    let run = contactkit(
        &["decompose", "-n", "1", "-X", "[0,0,1]", "--format", "json"],
        None,
    );
    assert_eq!(
        run.stdout,
        "{\"kind\":\"hamiltonian\",\"name\":\"H\",\"value\":\"1\",\"n\":1}\n\
         {\"kind\":\"field\",\"name\":\"Y\",\"value\":\"0\",\"n\":1}\n"
    );
}

#[test]
fn in_process_runner_matches_binary() {
    for g in GOLDEN {
        let args = std::iter::once("contactkit").chain(g.args.iter().copied());
        let out = contactkit::cli::run(args);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, g.stdout);
    }
}

#[test]
fn help_exits_zero() {
    let run = contactkit(&["--help"], None);
    assert_eq!(run.code, 0);
    for cmd in [
        "xh",
        "bracket",
        "decompose",
        "pair",
        "act",
        "realize",
        "reeb",
        "lieder",
        "check",
    ] {
        assert!(run.stdout.contains(cmd), "help lists {cmd}");
    }
}
