//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 1 to 9 come from `glmn --seed-check`; criterion 10 reruns that
//! and every other subcommand and compares the bytes.

use std::process::{Command, Output};

fn glmn(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_glmn"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("GLMN_THREADS", t),
        None => cmd.env_remove("GLMN_THREADS"),
    };
    cmd.output().expect("glmn runs")
}

const COMMANDS: &[&[&str]] = &[
    &["patterns", "--m", "2", "--n", "2", "--partition", "2,1"],
    &["character", "--m", "2", "--n", "3", "--partition", "2,1,1"],
    &["branch", "--m", "2", "--n", "2", "--partition", "3,2,1"],
    &["branch", "--m", "3", "--n", "0", "--partition", "2,1"],
    &["matrices", "--m", "2", "--n", "1", "--mu", "2,1,0"],
    &["verify", "--m", "2", "--n", "2", "--partition", "2,1"],
    &["cgc", "--m", "2", "--n", "2", "--partition", "1,1"],
    &[
        "cgc",
        "--m",
        "1",
        "--n",
        "2",
        "--partition",
        "2,1",
        "--format",
        "csv",
        "--grading",
        "opposite",
    ],
    &["cgc-verify", "--m", "2", "--n", "1", "--partition", "2,1"],
    &["dim", "--m", "2", "--n", "3", "--partition", "3,2,2,1"],
    &["typicality", "--m", "2", "--n", "2", "--mu", "2,1,1,0"],
];

fn main() {
    let first = glmn(&["--seed-check"], Some("1"));
    let second = glmn(&["--seed-check"], None);
    let text = String::from_utf8_lossy(&first.stdout).into_owned();
    let mut passed = 0;
    let mut total = 0;
    for id in 1..=9 {
        total += 1;
        let line = text.lines().find(|l| {
            l.split_whitespace().nth(1).and_then(|x| x.parse::<u32>().ok()) == Some(id)
                && (l.starts_with("PASS") || l.starts_with("FAIL"))
        });
        match line {
            Some(l) => {
                println!("{l}");
                if l.starts_with("PASS") {
                    passed += 1;
                }
            }
            None => println!("FAIL {id:>2} no result reported"),
        }
    }
    if !first.status.success() {
        eprint!("{}", String::from_utf8_lossy(&first.stderr));
    }

    total += 1;
    let mut mismatches = Vec::new();
    if first.stdout != second.stdout || first.status.code() != second.status.code() {
        mismatches.push("--seed-check with 1 and default threads".to_string());
    }
    for args in COMMANDS {
        let a = glmn(args, Some("1"));
        let b = glmn(args, None);
        let c = glmn(args, Some("3"));
        if a.status.code() != Some(0) || a.stdout.is_empty() {
            mismatches.push(format!("{} exited with {:?}", args.join(" "), a.status.code()));
        }
        if a.stdout != b.stdout || b.stdout != c.stdout || a.status.code() != b.status.code() {
            mismatches.push(args.join(" "));
        }
    }
    let detail = match mismatches.first() {
        None => format!("(seed check twice, {} commands three times)", COMMANDS.len()),
        Some(m) => format!("({} mismatches; first: {m})", mismatches.len()),
    };
    if mismatches.is_empty() {
        passed += 1;
        println!("PASS 10 repeated CLI runs are byte-identical {detail}");
    } else {
        println!("FAIL 10 repeated CLI runs are byte-identical {detail}");
    }

    println!("{passed} of {total} criteria passed");
    if passed != total {
        std::process::exit(1);
    }
}
