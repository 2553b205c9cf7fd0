use std::path::PathBuf;
use std::process::{Command, Output};

fn ncs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ncs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn pentagon_build() {
    let o = ncs(&["bbc", "build", "--seq", "cyclic:3,6", "--mode", "both", "--fvector"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("facets: 64\n"), "{out}");
    assert!(out.contains("paths agree: true\n"));
    assert!(out.contains("type 3: 2\ntype 2: 6\ntype 1: 16\ntype 0: 40\n"));
    assert!(out.contains("f-vector: (64, 192, 192, 64)\n"));
}

#[test]
fn output_is_deterministic() {
    let args = ["bbc", "build", "--seq", "cyclic:4,7", "--export", "text"];
    let a = ncs(&args);
    let b = ncs(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().count() > 10);
}

#[test]
fn genus_of_m412() {
    let o = ncs(&["surface", "--q", "12", "--genus"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("genus: 4097\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ncs(&[]).status.code(), Some(2));
    assert_eq!(ncs(&["bbc", "build"]).status.code(), Some(2));
    assert_eq!(ncs(&["bbc", "build", "--seq", "cyclic:2,6"]).status.code(), Some(2));
    assert_eq!(ncs(&["--index-base", "2", "fixtures", "list"]).status.code(), Some(2));
    let o = ncs(&["bbc", "build", "--seq", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn verify_failure_exits_1() {
    let open = scratch("open.txt", "00+\n00-\n");
    let o = ncs(&["verify", "--in", open.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("passed: false"));

    let cube = scratch("cube.txt", "+00\n-00\n0+0\n0-0\n00+\n00-\n");
    let o = ncs(&["verify", "--in", cube.to_str().unwrap(), "--homology", "--links"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("betti (Z/2): (1, 0, 1)"));
}

#[test]
fn verify_json_report() {
    let cube = scratch("cube4.txt", "+000\n-000\n0+00\n0-00\n00+0\n00-0\n000+\n000-\n");
    let o = ncs(&[
        "verify",
        "--in",
        cube.to_str().unwrap(),
        "--homology",
        "--report",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["command", "params", "f_vector", "euler", "checks", "facets_path"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["f_vector"], serde_json::json!([16, 32, 24, 8]));
    assert_eq!(v["checks"]["betti_z2"], serde_json::json!([1, 0, 0, 1]));
}

#[test]
fn altshuler_file_with_index_base_0() {
    let text = neighborly_cubical::fixtures::ALTSHULER_SEQUENCE;
    let p = scratch("altshuler.txt", text);
    let o = ncs(&[
        "--index-base",
        "0",
        "--encoding",
        "vertices",
        "bbc",
        "validate",
        "--seq",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("n: 11"));
    // digit runs are ambiguous without an explicit encoding
    let o = ncs(&["--index-base", "0", "bbc", "validate", "--seq", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let a10: String = text.split("ball 10\n").nth(1).unwrap().to_string();
    let p = scratch("a10.txt", &a10);
    let o = ncs(&[
        "--index-base",
        "0",
        "--encoding",
        "vertices",
        "verify",
        "--in",
        p.to_str().unwrap(),
    ]);
    assert!(stdout(&o).contains("f-vector: (10, "), "{}", stdout(&o));
    let facets: u64 = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("f-vector: "))
        .and_then(|l| {
            l.trim_matches(['(', ')'])
                .split(", ")
                .last()
                .map(|x| x.parse().unwrap())
        })
        .unwrap();
    assert_eq!(facets, 21);
}

#[test]
fn phi_and_ncp() {
    let o = ncs(&["ncp", "facets", "--n", "6", "--d", "3", "--count-only"]);
    assert_eq!(stdout(&o), "facets: 64\nclosed form: 64\n");
    let p = scratch("alpha.txt", "000+--\n");
    let o = ncs(&["phi", "--in", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "-++000\n");
    let o = ncs(&["ncp", "count", "--n", "11", "--d", "5"]);
    assert_eq!(stdout(&o), "facets: 3584\n");
}

#[test]
fn iso_and_fixtures() {
    let a = scratch("a.txt", "1 2\n2 3\n3 4\n4 5\n1 5\n");
    let b = scratch("b.txt", "1 3\n3 5\n5 2\n2 4\n4 1\n");
    let o = ncs(&["iso", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic: true\n"));

    let o = ncs(&["fixtures", "check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ncs(&["fixtures", "list"]);
    assert!(stdout(&o).contains("altshuler"));
}

#[test]
fn surface_off_export() {
    let o = ncs(&["surface", "--q", "4", "--export", "off"]);
    let out = stdout(&o);
    assert!(out.contains("nOFF\n4\n16 16 32\n"), "{out}");
}
