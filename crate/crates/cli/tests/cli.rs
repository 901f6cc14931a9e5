use std::process::{Command, Output};

fn arikoike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arikoike"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = arikoike(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const G312: [&str; 10] = ["--l", "3", "--n", "2", "--e", "12", "--r", "6", "--charges", "3,-1,-2"];

#[test]
fn schur_renderings() {
    assert_eq!(stdout_of(&["schur", "--lambda", "[[2]]", "--formula", "cancel"]), "q + 1\n");
    assert_eq!(stdout_of(&["schur", "--lambda", "[[]]"]), "1\n");
    let all = stdout_of(&["schur", "--lambda", "[[1],[]]", "--formula", "all"]);
    let lines: Vec<&str> = all.lines().collect();
    assert_eq!(lines.len(), 4);
    let value = lines[0].strip_prefix("cancel: ").unwrap();
    assert_eq!(lines[1], format!("mathas: {}", value));
    assert_eq!(lines[2], format!("gim: {}", value));
    assert_eq!(lines[3], "AGREE");
}

#[test]
fn schur_rejects_short_symbol() {
    let out = arikoike(&["schur", "--lambda", "[[2,1]]", "--formula", "gim", "--symbol-size", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn semisimplicity_verdicts() {
    let base = ["semisimple", "--l", "1", "--n", "2", "--k", "1", "--r", "1", "--charges", "0"];
    let mut args = base.to_vec();
    args.extend(["--e", "2"]);
    assert_eq!(stdout_of(&args), "NOT SEMISIMPLE\n");
    let mut args = base.to_vec();
    args.extend(["--e", "5"]);
    assert_eq!(stdout_of(&args), "SEMISIMPLE\n");
    let mut args = vec!["semisimple"];
    args.extend(G312);
    assert_eq!(stdout_of(&args), "NOT SEMISIMPLE\n");
}

#[test]
fn semisimple_json_carries_specialised_polynomial() {
    let out = stdout_of(&["semisimple", "--l", "1", "--n", "2", "--e", "5", "--charges", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["semisimple"], true);
    assert!(v["specialisedPoincare"].as_str().unwrap() != "0");
}

#[test]
fn defect_zero_listings() {
    assert_eq!(stdout_of(&["defect0", "--n", "1", "--e", "2", "--v", "0", "--all"]), "[[1]]\ncount: 1\n");
    assert_eq!(stdout_of(&["defect0", "--n", "2", "--e", "2", "--v", "0", "--all"]), "count: 0\n");
    assert_eq!(
        stdout_of(&["defect0", "--n", "1", "--e", "3", "--v", "0,1", "--all"]),
        "[[1],[]]\n[[],[1]]\ncount: 2\n"
    );
    assert_eq!(
        stdout_of(&["defect0", "--n", "1", "--e", "3", "--v", "0,1", "--lambda", "[[],[1]]"]),
        "DEFECT 0\n"
    );
}

#[test]
fn a_value_routes() {
    assert_eq!(
        stdout_of(&["avalue", "--lambda", "[[1,1]]", "--r", "1", "--charges", "0", "--method", "all"]),
        "combinatorial: 1\nhooks: 1\nvaluation: 1\nAGREE\n"
    );
    assert_eq!(stdout_of(&["avalue", "--lambda", "[[],[]]", "--r", "2", "--charges", "1,-1"]), "0\n");
    for lambda in ["[[2],[],[]]", "[[1],[1],[]]", "[[1],[],[1]]", "[[],[],[2]]"] {
        let out = stdout_of(&["avalue", "--lambda", lambda, "--r", "6", "--charges", "3,-1,-2", "--method", "all"]);
        assert!(out.ends_with("AGREE\n"), "{}: {}", lambda, out);
    }
}

#[test]
fn basic_set_example() {
    let mut args = vec!["basicset"];
    args.extend(G312);
    assert_eq!(stdout_of(&args), "[[2],[],[]]\n[[1],[1],[]]\n[[1],[],[1]]\n[[],[],[2]]\n");
    args.push("--json");
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&args)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
    assert_eq!(v["elements"][0], serde_json::json!([[2], [], []]));
}

#[test]
fn basic_set_of_rank_zero() {
    assert_eq!(
        stdout_of(&["basicset", "--l", "2", "--n", "0", "--e", "4", "--r", "1", "--charges", "0,1"]),
        "[[],[]]\n"
    );
}

#[test]
fn gpn_example() {
    let args = [
        "basicset-gpn", "--l", "3", "--p", "3", "--n", "2", "--e", "12", "--r", "2", "--charges", "0",
    ];
    assert_eq!(
        stdout_of(&args),
        "[[2],[],[]] orbitSize=3 stabilizerSize=1\n[[1],[1],[]] orbitSize=3 stabilizerSize=1\n"
    );
    let mut json_args = args.to_vec();
    json_args.push("--json");
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&json_args)).unwrap();
    assert_eq!(v["orbits"][1]["representative"], serde_json::json!([[1], [1], []]));
    assert_eq!(v["orbits"][1]["stabilizerSize"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(arikoike(&["schur", "--lambda", "[[1,2]]"]).status.code(), Some(2));
    assert_eq!(arikoike(&["avalue", "--lambda", "[[1]]", "--r", "1", "--charges", "x"]).status.code(), Some(2));
    let out = arikoike(&["semisimple", "--l", "1", "--n", "2", "--e", "4", "--k", "2", "--charges", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd(k,e) must be 1"));
    let gpn = arikoike(&["basicset-gpn", "--l", "3", "--p", "2", "--n", "3", "--e", "5", "--r", "1", "--charges", "0"]);
    assert_eq!(gpn.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic_across_workers() {
    let one = stdout_of(&["verify", "--suite", "lemmas", "--max-n", "4", "--jobs", "1"]);
    let four = stdout_of(&["verify", "--suite", "lemmas", "--max-n", "4", "--jobs", "4"]);
    assert_eq!(one, four);
    assert!(one.ends_with("ALL PASS\n"));
    let a = stdout_of(&["verify", "--suite", "basicsets", "--max-l", "2", "--max-n", "2", "--jobs", "1", "--json"]);
    let b = stdout_of(&["verify", "--suite", "basicsets", "--max-l", "2", "--max-n", "2", "--jobs", "3", "--json"]);
    assert_eq!(a, b);
}
