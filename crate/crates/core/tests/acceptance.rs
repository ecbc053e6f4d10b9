//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::Command;

use pbraid::cube::IndexSet;
use pbraid::group::{format, todd_coxeter, CosetOutcome};
use pbraid::oracles::{self, CheckReport, Params, QUATERNION};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(pairs: &[(&str, &str)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn check(name: &str, pairs: &[(&str, &str)]) -> Result<CheckReport, String> {
    let report = oracles::run_check(name, &params(pairs)).map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(report)
    } else {
        Err(oracles::render_text(&[report]))
    }
}

fn set(text: &str) -> IndexSet {
    text.parse().expect("literal")
}

fn golden_cube() -> Outcome {
    let i = set("18:{2,3,5,7,9,11,13,17}");
    let cases = [
        ("wedge", set("8:{2,4,6}").wedge(&i), set("18:{3,7,11}")),
        ("vee", set("10:{1,4,6,9}").vee(&i), set("18:{1,2,3,5,7,8,9,11,12,13,16,17}")),
        ("bracket", set("10:{1,4,6,9}").bracket(&i), set("12:{2,3,4,5,7,8,10,12}")),
    ];
    for (op, got, expected) in cases {
        let got = got.map_err(|e| format!("{op}: {e}"))?;
        if got != expected {
            return Err(format!("{op}: expected {expected}, got {got}"));
        }
    }
    Ok("wedge, vee and bracket examples reproduce exactly".into())
}

fn identity_suite() -> Outcome {
    let cube = check(
        "cube_identities",
        &[("n_max", "8"), ("random_cases", "100000"), ("random_n_max", "20"), ("seed", "0")],
    )?;
    let cat = check("category_laws", &[("source_max", "5")])?;
    let summary: Vec<String> = cube.details.iter().chain(&cat.details).map(|d| format!("{}: {}", d.case, d.got)).collect();
    Ok(summary.join("; "))
}

fn counts() -> Outcome {
    check("artin_counts", &[("k_max", "8")])?;
    check("mobius_counts", &[("k_max", "8")])?;
    Ok("artin and mobius relator counts match tuple enumeration for k <= 8".into())
}

fn abelianizations() -> Outcome {
    check("abelianizations", &[("k_max", "6")])?;
    Ok("free abelian of ranks C(k,2) and k for k <= 6".into())
}

fn pipeline() -> Outcome {
    check("pipeline_equivalence", &[("stage1_k_max", "5"), ("hom_k_max", "3")])?;
    Ok("stage 1 = Artin + R1 for k <= 5, k = 2 relator exact, invariants agree for k <= 3".into())
}

fn quaternion() -> Outcome {
    check("quaternion_selftest", &[])?;
    let q = format::from_plain(QUATERNION).map_err(|e| e.to_string())?;
    match todd_coxeter(&q, &[], 1000).map_err(|e| e.to_string())? {
        CosetOutcome::Index(8) => Ok("8 cosets of the trivial subgroup".into()),
        other => Err(format!("expected Index(8), got {other:?}")),
    }
}

fn inclusion() -> Outcome {
    check("inclusion_consistency", &[("k_max", "4")])?;
    Ok("no invariant changes for k <= 4".into())
}

fn run_bin(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pbraid")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn determinism() -> Outcome {
    let mut commands: Vec<Vec<String>> = Vec::new();
    for k in 1..=5 {
        for fmt in ["plain", "json", "cas"] {
            for variant in ["theorem", "proof"] {
                let base = ["--strands", &k.to_string(), "--format", fmt, "--yb6-variant", variant].map(String::from);
                commands.push([&["artin".to_string()][..], &base].concat());
                commands.push([&["mobius".to_string()][..], &base].concat());
                commands.push([&["mobius".to_string()][..], &base, &["--pipeline".to_string()]].concat());
            }
        }
    }
    for args in &commands {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_bin(&args)?;
        let second = run_bin(&args)?;
        if first.0 != 0 || first != second {
            return Err(format!("`{}` is not reproducible (exit {})", args.join(" "), first.0));
        }
        let text = String::from_utf8(first.1).map_err(|e| e.to_string())?;
        let fmt = match args[4] {
            "plain" => format::Format::Plain,
            "json" => format::Format::Json,
            _ => format::Format::Cas,
        };
        let p = format::read(&text, fmt).map_err(|e| format!("`{}` output does not parse: {e}", args.join(" ")))?;
        if format::write(&p, fmt) != text {
            return Err(format!("`{}` output does not round-trip", args.join(" ")));
        }
    }
    let seed0 = run_bin(&["verify", "all", "--seed", "0", "--report", "json"])?;
    let seed0_again = run_bin(&["verify", "all", "--seed", "0", "--report", "json"])?;
    let seed1 = run_bin(&["verify", "all", "--seed", "1", "--report", "json"])?;
    if seed0.0 != 0 || seed1.0 != 0 {
        return Err(format!("verify all exit codes: seed 0 -> {}, seed 1 -> {}", seed0.0, seed1.0));
    }
    if seed0 != seed0_again {
        return Err("verify all --seed 0 reports differ between runs".into());
    }
    Ok(format!("{} generator commands byte-identical, verify all passes for seeds 0 and 1", commands.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 cube-calculus golden cases", golden_cube),
        ("2 identity suite", identity_suite),
        ("3 presentation counts", counts),
        ("4 abelianization", abelianizations),
        ("5 pipeline fidelity", pipeline),
        ("6 coset-enumeration self-test", quaternion),
        ("7 inclusion consistency", inclusion),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (label, run) in criteria {
        match run() {
            Ok(note) => println!("[PASS] criterion {label}: {note}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {label}: {}", why.trim_end());
            }
        }
    }
    println!("{} of 8 acceptance criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
