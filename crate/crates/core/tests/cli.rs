use std::process::{Command, Output};

fn stablegram(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablegram")).args(args).env_remove("STABLEGRAM_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

#[test]
fn poly_stirling2_multi_order_two() {
    let o = stablegram(&["poly", "--kind", "stirling2-multi", "--n", "2", "--via", "grammar"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        concat!(
            r#"{"terms":[{"coeff":"1","mono":{"x2":1,"y1":1,"y2":1,"z1":1,"z2":1}},"#,
            r#"{"coeff":"1","mono":{"x1":1,"x2":1,"y2":1,"z1":1,"z2":1}},"#,
            r#"{"coeff":"1","mono":{"x1":1,"x2":1,"y1":1,"y2":1,"z2":1}}]}"#,
            "\n"
        )
    );
}

#[test]
fn poly_marked_uni_and_seed() {
    let o = stablegram(&["poly", "--kind", "marked-uni", "--n", "2"]);
    assert_eq!(stdout(&o), "{\"terms\":[{\"coeff\":\"2\",\"mono\":{\"x0\":3,\"y0\":2}},{\"coeff\":\"2\",\"mono\":{\"x0\":4,\"y0\":1}}]}\n");
    let o = stablegram(&["poly", "--kind", "partition-uni", "--n", "0"]);
    assert_eq!(stdout(&o), "{\"terms\":[{\"coeff\":\"1\",\"mono\":{\"a0\":1}}]}\n");
}

#[test]
fn poly_paths_agree() {
    for kind in ["partition-multi", "eulerian-uni", "stirling2-multi", "marked-multi", "legendre"] {
        let a = stablegram(&["poly", "--kind", kind, "--n", "3", "--via", "grammar"]);
        let b = stablegram(&["poly", "--kind", kind, "--n", "3", "--via", "enumeration"]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{kind}");
    }
}

#[test]
fn poly_specialized() {
    let o = stablegram(&["poly", "--kind", "stirling2-multi", "--n", "3", "--specialize", "C"]);
    assert_eq!(
        stdout(&o),
        "{\"terms\":[{\"coeff\":\"1\",\"mono\":{\"x0\":1}},{\"coeff\":\"8\",\"mono\":{\"x0\":2}},{\"coeff\":\"6\",\"mono\":{\"x0\":3}}]}\n"
    );
}

#[test]
fn enumerate_examples() {
    let o = stablegram(&["enumerate", "--family", "marked-stirling", "--n", "2"]);
    assert_eq!(stdout(&o), "1 1 2 2\n1 1* 2 2\n1 2 2 1\n2 2 1 1\n");
    let o = stablegram(&["enumerate", "--family", "stirling", "--n", "2", "--stats", "des"]);
    assert_eq!(stdout(&o), "des,count\n1,1\n2,2\n");
    let o = stablegram(&["enumerate", "--family", "permutation", "--n", "1"]);
    assert_eq!(stdout(&o), "1\n");
    let o = stablegram(&["enumerate", "--family", "r-stirling", "--r", "3", "--n", "3"]);
    assert_eq!(stdout(&o).lines().count(), 28);
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--check", "oracle", "--family", "legendre", "--n", "2"][..],
        &["verify", "--check", "counterexample"][..],
        &["verify", "--check", "sturm", "--family", "Bn", "--n", "3"][..],
    ] {
        let o = stablegram(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(report["passed"], true);
    }
    let o = stablegram(&["verify", "--check", "sturm", "--family", "Bn", "--n", "3"]);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let detail = &report["cases"][0]["detail"];
    assert_eq!(detail["all_real"], true);
    assert_eq!(detail["distinct"], true);
    assert_eq!(detail["all_nonpositive"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(stablegram(&["poly", "--kind", "nope", "--n", "1"]).status.code(), Some(2));
    assert_eq!(stablegram(&["poly", "--kind", "legendre", "--n", "9"]).status.code(), Some(2));
    assert_eq!(stablegram(&["enumerate", "--family", "permutation", "--n", "20"]).status.code(), Some(2));
    assert_eq!(stablegram(&["verify", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(stablegram(&["verify"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    // with no samples the raw partition step yields no witness
    let o = stablegram(&["verify", "--check", "lemma-gate", "--n", "0", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_reproducible() {
    let args = ["verify", "--check", "lemma-gate", "--n", "1", "--samples", "300"];
    let a = stablegram(&args);
    let b = stablegram(&args);
    assert_eq!(a.stdout, b.stdout);
    let seeded = Command::new(env!("CARGO_BIN_EXE_stablegram")).args(args).env("STABLEGRAM_SEED", "42").output().unwrap();
    assert_eq!(a.stdout, seeded.stdout);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("stablegram-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    let o = stablegram(&["poly", "--kind", "legendre", "--n", "1", "--output", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\"terms\":") && text.ends_with("}\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
