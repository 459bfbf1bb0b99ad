use std::process::{Command, Output};

use glmn::action::{generator_matrix, Generator};
use glmn::cgc::{cgc_graded, NaturalVector};
use glmn::patterns::{enumerate_patterns, AlgebraShape, GZPattern, Grading, HighestWeight};
use glmn::Exec;
use glmn_cli::docs::{CgcDoc, MatricesDoc};
use glmn_cli::{execute, Cli};

use clap::Parser;

fn glmn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glmn"))
        .args(args)
        .output()
        .expect("glmn runs")
}

fn stdout(args: &[&str]) -> String {
    let out = glmn(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn schema_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["dim", "--m", "2", "--n", "2", "--partition", "1,1"]), "8\n");

    let report: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--m", "1", "--n", "1", "--mu", "1,0"])).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));

    let doc: serde_json::Value =
        serde_json::from_str(&stdout(&["patterns", "--m", "2", "--n", "3", "--mu", "0,0,0,0,0"])).unwrap();
    let pats = doc["patterns"].as_array().unwrap();
    assert_eq!(pats.len(), 1);
    let rows: Vec<Vec<i64>> = serde_json::from_value(pats[0]["rows"].clone()).unwrap();
    assert!(rows.iter().flatten().all(|&x| x == 0));
    assert_eq!(rows.len(), 5);
}

#[test]
fn invalid_input_exits_with_two_and_names_the_condition() {
    let bad = glmn(&["dim", "--m", "2", "--n", "1", "--mu", "0,1,0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("cond1"));

    let bad = glmn(&["patterns", "--m", "2", "--n", "1", "--mu", "1,0,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("cond2"));

    for args in [
        &["dim", "--m", "1", "--n", "1"][..],
        &["dim", "--m", "1", "--n", "1", "--mu", "1,0", "--partition", "1"],
        &["dim", "--m", "1", "--n", "1", "--partition", "2,2"],
        &["dim", "--m", "0", "--n", "1", "--partition", "1"],
        &["cgc", "--m", "1", "--n", "1", "--mu", "1,0", "--k", "7"],
        &["matrices", "--m", "1", "--n", "1", "--mu", "1,0", "--generators", "x1"],
        &["branch", "--m", "1", "--n", "0", "--partition", "2"],
    ] {
        assert_eq!(glmn(args).status.code(), Some(2), "{args:?}");
    }

    let threads = Command::new(env!("CARGO_BIN_EXE_glmn"))
        .args(["dim", "--m", "1", "--n", "1", "--mu", "1,0"])
        .env("GLMN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(threads.status.code(), Some(2));
}

#[test]
fn matrices_round_trip_to_the_library_operators() {
    let text = stdout(&["matrices", "--m", "2", "--n", "1", "--partition", "2,1"]);
    let doc: MatricesDoc = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&doc).unwrap();
    again.push('\n');
    assert_eq!(again, text);

    let mu = HighestWeight::new(AlgebraShape::new(2, 1).unwrap(), vec![2, 1, 0]).unwrap();
    let basis: Vec<Vec<Vec<i64>>> = enumerate_patterns(&mu).iter().map(GZPattern::rows).collect();
    assert_eq!(doc.basis, basis);
    assert_eq!(doc.generators.len(), 3 + 2 + 2);
    for g in &doc.generators {
        let op = generator_matrix(Generator::parse(&g.generator).unwrap(), &mu).unwrap();
        assert_eq!(g.to_matrix(basis.len()), op.matrix, "{}", g.generator);
        assert_eq!(g.parity, op.parity);
    }

    let some: MatricesDoc = serde_json::from_str(&stdout(&[
        "matrices",
        "--m",
        "2",
        "--n",
        "1",
        "--partition",
        "2,1",
        "--generators",
        "e2,f1",
    ]))
    .unwrap();
    let names: Vec<&str> = some.generators.iter().map(|g| g.generator.as_str()).collect();
    assert_eq!(names, ["e2", "f1"]);
}

#[test]
fn cgc_round_trips_and_matches_pointwise_coefficients() {
    for grading in ["natural", "opposite"] {
        let text = stdout(&[
            "cgc",
            "--m",
            "1",
            "--n",
            "2",
            "--partition",
            "2,1",
            "--grading",
            grading,
        ]);
        let doc: CgcDoc = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&doc).unwrap();
        again.push('\n');
        assert_eq!(again, text);

        let shape = AlgebraShape::new(1, 2).unwrap();
        let g: Grading = serde_json::from_value(serde_json::Value::String(grading.into())).unwrap();
        assert_eq!(doc.grading, g);
        let total: usize = doc.blocks.iter().map(|b| b.dimension).sum();
        assert_eq!(total, doc.product_dimension);
        for b in &doc.blocks {
            for e in &b.entries {
                let bra = GZPattern::new(shape, &e.bra).unwrap();
                let ket = GZPattern::new(shape, &e.ket).unwrap();
                let v = cgc_graded(&bra, NaturalVector::new(shape, e.j).unwrap(), &ket, g).unwrap();
                assert_eq!(v, e.value);
            }
        }

        let csv = stdout(&[
            "cgc",
            "--m",
            "1",
            "--n",
            "2",
            "--partition",
            "2,1",
            "--grading",
            grading,
            "--format",
            "csv",
        ]);
        let entries: usize = doc.blocks.iter().map(|b| b.entries.len()).sum();
        assert_eq!(csv.lines().count(), entries + 1);
        assert_eq!(csv.lines().next(), Some("k,bra,j,ket,value"));
    }

    let only: CgcDoc =
        serde_json::from_str(&stdout(&["cgc", "--m", "2", "--n", "1", "--mu", "1,0,0", "--k", "2"])).unwrap();
    assert_eq!(only.blocks.len(), 1);
    assert_eq!(only.blocks[0].k, 2);
    assert_eq!(only.blocks[0].highest_weight, vec![1, 1, 0]);
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("glmn-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chi.json");
    let args = ["character", "--m", "2", "--n", "2", "--partition", "2,1"];
    let printed = stdout(&args);
    let mut with_output: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_output.extend(["--output", p]);
    assert_eq!(stdout(&with_output), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn outputs_follow_the_shipped_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("patterns", &["patterns", "--m", "2", "--n", "1", "--partition", "2,1"]),
        (
            "character",
            &["character", "--m", "1", "--n", "2", "--partition", "2,1"],
        ),
        ("branch", &["branch", "--m", "2", "--n", "2", "--partition", "2,1,1"]),
        ("matrices", &["matrices", "--m", "1", "--n", "1", "--partition", "2,1"]),
        ("verify", &["verify", "--m", "2", "--n", "1", "--partition", "1,1"]),
        ("cgc", &["cgc", "--m", "1", "--n", "1", "--partition", "1"]),
        (
            "cgc-verify",
            &["cgc-verify", "--m", "1", "--n", "2", "--partition", "1,1"],
        ),
        (
            "typicality",
            &["typicality", "--m", "2", "--n", "2", "--partition", "1"],
        ),
    ];
    for (name, args) in cases {
        let path = schema_dir().join(format!("{name}.schema.json"));
        let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let validator = jsonschema::validator_for(&schema).unwrap();
        let value: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
        let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{name}: {errors:?}");
    }
}

#[test]
fn execution_mode_does_not_change_output() {
    for args in [
        &["glmn", "matrices", "--m", "2", "--n", "2", "--partition", "2,1"][..],
        &["glmn", "cgc", "--m", "2", "--n", "1", "--partition", "2,1"],
        &["glmn", "cgc-verify", "--m", "2", "--n", "1", "--partition", "1,1"],
    ] {
        let cli = Cli::parse_from(args);
        let command = cli.command.unwrap();
        let seq = execute(&command, Exec::Sequential).unwrap();
        let par = execute(&command, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
        assert!(seq.passed);
    }
}
