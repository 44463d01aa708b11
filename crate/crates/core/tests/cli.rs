use std::path::PathBuf;
use std::process::{Command, Output};

fn write_config(name: &str, json: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const B4: &str = r#"{"p":2,"factors":[{"lie_type":"B","rank":4}],"mu":[["w1"]]}"#;

#[test]
fn classes_csv_has_header_and_one_row_per_class() {
    let cases = [
        ("b4.json", B4, 8),
        (
            "trivial.json",
            r#"{"p":3,"factors":[{"lie_type":"B","rank":3}]}"#,
            1,
        ),
        (
            "gl3.json",
            r#"{"p":2,"factors":[{"lie_type":"GL","rank":3}],"mu":[["w1"]]}"#,
            3,
        ),
    ];
    for (name, json, rows) in cases {
        let path = write_config(name, json);
        let o = run(&["classes", "--config", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let text = stdout(&o);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "class_id,representative,s_value,dim_orbit,dim_stratum_universal,class_size,slopes,pivotal,open,dim_x_fp,dim_y,dim_y0,dim_w_span"
        );
        assert_eq!(lines.count(), rows, "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    let path = write_config("b4-det.json", B4);
    for format in ["csv", "json", "md"] {
        let args = [
            "classes",
            "--config",
            path.to_str().unwrap(),
            "--format",
            format,
        ];
        let a = run(&args);
        let b = run(&[
            "--threads",
            "1",
            args[0],
            args[1],
            args[2],
            args[3],
            args[4],
        ]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn json_table_parses() {
    let path = write_config("b4-json.json", B4);
    let o = run(&[
        "classes",
        "--config",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weyl_order"], 384);
    assert_eq!(v["parabolic_order"], 48);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 8);
    let s: Vec<u64> = classes
        .iter()
        .map(|c| c["s_value"].as_u64().unwrap())
        .collect();
    assert_eq!(s, (0..8).collect::<Vec<_>>());
}

#[test]
fn out_flag_writes_file() {
    let path = write_config(
        "b2-out.json",
        r#"{"p":2,"factors":[{"lie_type":"B","rank":2}],"mu":[["w1"]]}"#,
    );
    let out = path.with_extension("csv");
    let o = run(&[
        "classes",
        "--config",
        path.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(out).unwrap().lines().count(), 5);
}

#[test]
fn verify_passes_on_suite_configs() {
    let path = write_config(
        "d4.json",
        r#"{"p":2,"factors":[{"lie_type":"D","rank":4,"twist":"diagram"}],"mu":[["w3"]]}"#,
    );
    let o = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn oracle_reports_gl2_over_f4() {
    let path = write_config(
        "gl2.json",
        r#"{"p":2,"factors":[{"lie_type":"GL","rank":2}],"mu":[["w1"]]}"#,
    );
    let o = run(&[
        "oracle",
        "--config",
        path.to_str().unwrap(),
        "--m",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["census"], serde_json::json!([144, 36]));
    assert_eq!(v["point_count"], true);
    assert_eq!(v["orbit_check"]["coarsens"], true);
}

#[test]
fn input_errors_exit_two() {
    let bad = [
        (
            "bad-p.json",
            r#"{"p":4,"factors":[{"lie_type":"A","rank":2}]}"#,
        ),
        (
            "bad-type.json",
            r#"{"p":2,"factors":[{"lie_type":"E","rank":6}]}"#,
        ),
        (
            "bad-mu.json",
            r#"{"p":2,"factors":[{"lie_type":"B","rank":3}],"mu":[["w2"]]}"#,
        ),
        (
            "bad-sigma.json",
            r#"{"p":2,"factors":[{"lie_type":"A","rank":2}],"sigma":[[2,0],[0,1]]}"#,
        ),
        (
            "bad-field.json",
            r#"{"p":2,"factors":[{"lie_type":"A","rank":1}],"extra":1}"#,
        ),
        ("bad-json.json", "{"),
    ];
    for (name, json) in bad {
        let path = write_config(name, json);
        let o = run(&["classes", "--config", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["classes", "--config", "/nonexistent/fcrystal.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn limits_are_enforced() {
    let path = write_config("b4-limit.json", B4);
    let o = run(&[
        "classes",
        "--config",
        path.to_str().unwrap(),
        "--max-weyl-order",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["oracle", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "oracle needs a GL shadow");
}
