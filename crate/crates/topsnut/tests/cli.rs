use std::path::PathBuf;
use std::process::Command;

use serde_json::json;
use topsnut::cli::{run, EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use topsnut::construct::caterpillar_set_ordered_graceful;
use topsnut::encode::{self, ColumnOrder};
use topsnut::extremal::caterpillar_min_sum;
use topsnut::groups::group_op;
use topsnut::labelling::LabelledGraph;
use topsnut::search::{find_labelling, SearchBudget};
use topsnut::verify::{verify, Kind};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn load(name: &str) -> LabelledGraph {
    encode::deserialize(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("topsnut").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

#[test]
fn verify_star_odd_graceful() {
    let (code, out, _) = call(&["verify", "--kind", "odd-graceful", "--graph", &fixture("star.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pass: true"), "{out}");
}

#[test]
fn verify_failure_exits_one() {
    let (code, out, _) = call(&["verify", "--kind", "graceful", "--graph", &fixture("star.json")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("pass: false"));
}

#[test]
fn concat_passwords() {
    let parts = "112,110022,03312321";
    for (order, want) in [
        ("0,1,2", "11211002203312321"),
        ("2,1,0", "03312321110022112"),
        ("0,2,1", "11203312321110022"),
    ] {
        let (code, out, _) = call(&["password", "--scheme", "concat", "--parts", parts, "--order", order]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim_end(), want);
    }
    let (_, out, _) = call(&["password", "--scheme", "concat", "--parts", parts]);
    assert_eq!(out.trim_end(), "11211002203312321");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--kind", "graceful"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--kind", "no-such-kind", "--graph", &fixture("star.json")]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--kind", "graceful", "--graph", "/nonexistent/g.json"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["construct", "--method", "ten", "--graph", &fixture("cat.json")]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--index"));
}

#[test]
fn exhausted_budget_exits_three() {
    let (code, _, err) = call(&[
        "search",
        "--kind",
        "graceful",
        "--graph",
        &fixture("cat_unlabelled.json"),
        "--all",
        "--max-candidates",
        "1",
    ]);
    assert_eq!(code, EXIT_BUDGET, "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn verify_matches_library() {
    let lg = load("star.json");
    let r = verify(&lg.graph, &lg.labelling, &Kind::parse("odd-graceful").unwrap()).unwrap();
    let (_, out, _) = call(&["--json", "verify", "--kind", "odd-graceful", "--graph", &fixture("star.json")]);
    assert_eq!(out, pretty(&r));
}

#[test]
fn extremal_caterpillar_matches_library() {
    let lg = load("cat.json");
    let r = caterpillar_min_sum(&lg.graph).unwrap();
    let args = [
        "--json",
        "extremal",
        "--objective",
        "diff-sum",
        "--mode",
        "min",
        "--method",
        "caterpillar",
        "--graph",
    ];
    let path = fixture("cat.json");
    let mut argv = args.to_vec();
    argv.push(&path);
    let (code, out, _) = call(&argv);
    assert_eq!(code, EXIT_OK);
    let want = json!({
        "value": r.value,
        "method": r.method,
        "optimal": r.optimal,
        "vertex_labels": r.labelling.vertices,
    });
    assert_eq!(out, pretty(&want));
    let (_, plain, _) = call(&argv[1..]);
    assert!(plain.starts_with(&format!("value: {}\n", r.value)));
}

#[test]
fn construct_matches_library() {
    let lg = load("cat_unlabelled.json");
    let built = caterpillar_set_ordered_graceful(&lg.graph).unwrap();
    let (code, out, _) = call(&["construct", "--method", "set-ordered-graceful", "--graph", &fixture("cat_unlabelled.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, encode::serialize(&built));
}

#[test]
fn search_matches_library() {
    let lg = load("cat_unlabelled.json");
    let f = find_labelling(&lg.graph, &Kind::parse("graceful").unwrap(), &SearchBudget::default())
        .unwrap()
        .unwrap();
    let (code, out, _) = call(&["search", "--kind", "graceful", "--graph", &fixture("cat_unlabelled.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, encode::serialize(&LabelledGraph::new(lg.graph, f)));
}

#[test]
fn matrix_matches_library() {
    let lg = load("cat_six_c.json");
    let m = encode::to_matrix(&lg, ColumnOrder::ByEdgeLabel).unwrap();
    let (_, out, _) = call(&["--json", "matrix", "--graph", &fixture("cat_six_c.json")]);
    assert_eq!(out, pretty(&json!({ "matrix": m, "text": null })));
}

#[test]
fn group_op_matches_library() {
    let (code, out, _) = call(&["group", "--n", "13", "--op", "2", "3", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, format!("{}\n", group_op(2, 3, 1, 13).unwrap()));
    assert_eq!(out, "4\n");
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_topsnut"))
        .args(["verify", "--kind", "odd-graceful", "--graph", &fixture("star.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let out = Command::new(env!("CARGO_BIN_EXE_topsnut")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn dot_is_written() {
    let dir = std::env::temp_dir().join(format!("topsnut-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star.dot");
    let (code, _, _) = call(&[
        "--emit-dot",
        path.to_str().unwrap(),
        "verify",
        "--kind",
        "odd-graceful",
        "--graph",
        &fixture("star.json"),
    ]);
    assert_eq!(code, EXIT_OK);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot, encode::to_dot(&load("star.json")));
    std::fs::remove_dir_all(&dir).unwrap();
}
