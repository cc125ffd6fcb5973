use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("leibniz").chain(args.iter().copied());
    let code = leibniz::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_prints_canonical_values() {
    assert_eq!(run(&["eval", "--fn", "D", "--n", "8"]), (0, "12\n".into(), String::new()));
    assert_eq!(run(&["eval", "--fn", "ld", "--n", "6"]).1, "5/6\n");
    assert_eq!(run(&["eval", "--fn", "conv(E,E)", "--n", "12"]).1, "6\n");
    assert_eq!(run(&["eval", "--fn", "D", "--n", "1"]).1, "0\n");
    let big = "340282366920938463463374607431768211456"; // 2^128
    let (code, out, _) = run(&["eval", "--fn", "D", "--n", big]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), (num_bigint::BigUint::from(1u8) << 134u32).to_string());
}

#[test]
fn eval_errors_map_to_exit_codes() {
    let (code, _, err) = run(&["eval", "--fn", "cadd{4: 1}", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains('5'), "position missing from {err:?}");
    let (code, _, _) = run(&["eval", "--fn", "D", "--n", "0"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["eval", "--fn", "compose(N, cmul{2: 1/2})", "--n", "6"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn table_formats() {
    let (code, out, _) = run(&["table", "--fn", "D", "--to", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n\tvalue\n1\t0\n2\t1\n3\t1\n4\t4\n5\t1\n");

    let (_, out, _) = run(&["--format", "jsonl", "table", "--fn", "ld", "--from", "4", "--to", "5"]);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 4);
    assert_eq!(rows[0]["num"], "1");
    assert_eq!(rows[0]["den"], "1");
    assert_eq!(rows[1]["num"], "1");
    assert_eq!(rows[1]["den"], "5");

    assert_eq!(run(&["table", "--fn", "D", "--from", "5", "--to", "4"]).0, 2);
}

#[test]
fn convolve_emits_prefix_table() {
    let (code, out, _) = run(&["convolve", "--fn", "N", "--fn", "E", "--to", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n\tvalue\n1\t1\n2\t3\n3\t4\n4\t7\n5\t6\n6\t12\n");
    assert_eq!(run(&["convolve", "--fn", "N", "--to", "6"]).0, 2);
}

#[test]
fn verify_reports_and_exit_codes() {
    let (code, out, _) = run(&["verify", "tau", "--fn", "D", "--h", "N", "--limit", "1000"]);
    assert_eq!((code, out.as_str()), (0, "PASS tau checks=1000 limit=1000 seed=0\n"));
    let (code, out, _) = run(&["verify", "leibniz", "--fn", "D", "--h", "E", "--limit", "10"]);
    assert_eq!((code, out.as_str()), (1, "FAIL leibniz at (2,2): lhs=4 rhs=2\n"));
    assert_eq!(run(&["verify", "bogus"]).0, 2);
    assert_eq!(run(&["verify", "distributivity", "--fn", "N"]).0, 2);
    let (code, out, _) = run(&["verify", "schwab", "--fn", "D", "--u", "E", "--v", "E", "--limit", "20"]);
    assert_eq!((code, out.as_str()), (1, "FAIL schwab at n=4: lhs=12 rhs=10\n"));
}

#[test]
fn seeded_runs_are_reproducible() {
    for seed in ["0", "17"] {
        let args = ["--seed", seed, "verify", "cor33", "--limit", "200"];
        let first = run(&args);
        assert_eq!(first.0, 0);
        assert!(first.1.ends_with(&format!("seed={seed}\n")));
        assert_eq!(first, run(&args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let ok = Command::new(bin).args(["eval", "--fn", "D", "--n", "8"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(ok.stdout, b"12\n");
    let fail = Command::new(bin).args(["verify", "leibniz", "--fn", "D", "--h", "E", "--limit", "10"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).args(["verify", "bogus"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let a = Command::new(bin).args(["--seed", "5", "verify", "schwab", "--fn", "ld"]).output().unwrap();
    let b = Command::new(bin).args(["--seed", "5", "verify", "schwab", "--fn", "ld"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
