use std::process::{Command, Output};

use pbraid::group::format::{from_cas, from_json, from_plain};
use pbraid::group::{abelianization, catalog, hom_count};

fn pbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbraid")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = pbraid(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn artin_json_for_four_strands() {
    let p = from_json(&stdout(&["artin", "--strands", "4", "--format", "json"])).unwrap();
    assert_eq!((p.rank(), p.relators().len()), (6, 12));
}

#[test]
fn zero_strands_is_a_usage_error() {
    let out = pbraid(&["artin", "--strands", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage:"));
    assert_eq!(pbraid(&["mobius"]).status.code(), Some(2));
}

#[test]
fn mobius_pipeline_file_agrees_with_presentation() {
    let dir = std::env::temp_dir().join(format!("pbraid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("pipeline.txt");
    let b = dir.join("closed.txt");
    assert_eq!(stdout(&["mobius", "--strands", "3", "--pipeline", "--out", a.to_str().unwrap()]), "");
    stdout(&["mobius", "--strands", "3", "--out", b.to_str().unwrap()]);
    let pa = from_plain(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let pb = from_plain(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_ne!(pa, pb);
    assert_eq!(abelianization(&pa), abelianization(&pb));
    for (name, g) in catalog() {
        assert_eq!(hom_count(&pa, &g).unwrap(), hom_count(&pb, &g).unwrap(), "{name}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn mobius_cas_script_reads_back() {
    let text = stdout(&["mobius", "--strands", "3", "--format", "cas"]);
    let p = from_cas(&text).unwrap();
    assert_eq!((p.rank(), p.relators().len()), (3, 7));
    assert!(text.starts_with("F := FreeGroup("));
}

#[test]
fn cube_exit_codes() {
    assert_eq!(stdout(&["cube", "bracket(10:{1,4,6,9}, 18:{2,3,5,7,9,11,13,17})"]), "12:{2,3,4,5,7,8,10,12}\n");
    assert_eq!(pbraid(&["cube", "vee(3:{1}, 4:{1,2})"]).status.code(), Some(3));
    assert_eq!(pbraid(&["cube", "vee(3:{1}, 4:{1,2}"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_json_report() {
    let text = stdout(&["verify", "quaternion_selftest", "artin_counts", "--report", "json", "--seed", "5"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["name"], "quaternion_selftest");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["seed"], 5);
    assert_eq!(pbraid(&["verify", "no_such_check"]).status.code(), Some(2));
    assert_eq!(pbraid(&["verify", "quaternion_selftest", "--param", "max_cosets=4"]).status.code(), Some(1));
}
