use std::process::{Command, Output};

fn lorenz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lorenz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json_schema() {
    let o = lorenz(&["analyze", "yxxxyyyxy", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["word"], "yxxxyyyxy");
    assert_eq!(v["canonical"], "xxxyyyxyy");
    assert_eq!(v["crossings"]["C"], 4);
    assert_eq!(v["crossings"]["total"], 12);
    for key in [
        "a",
        "b",
        "t",
        "alpha",
        "beta",
        "mu",
        "nu",
        "grid_number",
        "unknotting",
        "alexander_x_minus",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn grid_formats() {
    let ascii = stdout(&lorenz(&["grid", "xy"]));
    assert_eq!(ascii, "OX\u{b7}\nX\u{b7}O\n\u{b7}OX\n");
    let svg = stdout(&lorenz(&["grid", "xyxyy", "--format", "svg"]));
    assert_eq!(svg.matches(r#"class="gap""#).count(), 6);
    let json = stdout(&lorenz(&["grid", "xyxyy", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 8);
    assert_eq!(v["long_vertical_order"].as_array().unwrap().len(), 2);
}

#[test]
fn unknot_json_lists_crossings() {
    let o = lorenz(&["unknot", "xxxyyyxyy", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["U"], 2);
    let crossings = v["crossings"].as_array().unwrap();
    assert_eq!(crossings.len(), 12);
    assert_eq!(crossings.iter().filter(|c| c["wrong"] == true).count(), 2);
    assert!(crossings[0]["strings"].is_array());
}

#[test]
fn braid_output() {
    let out = stdout(&lorenz(&["braid", "xyxyy", "--alexander"]));
    assert!(out.contains("word       2 1 3 2 4 3"));
    assert!(out.contains("alexander  1\u{b7}s^-1 - 1\u{b7}s^0 + 1\u{b7}s^1"));
}

#[test]
fn enumerate_lists_words() {
    let out = stdout(&lorenz(&["enumerate", "--max-len", "3", "--include-t1"]));
    assert_eq!(out, "xy\nxxy\nxyy\n");
    assert_eq!(
        stdout(&lorenz(&["enumerate", "--max-len", "5"])),
        "xxyxy\nxyxyy\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(lorenz(&["verify", "xyxyy"]).status.code(), Some(0));
    assert_eq!(lorenz(&["analyze", "xyz"]).status.code(), Some(1));
    assert_eq!(lorenz(&["analyze", "xyxy"]).status.code(), Some(1));
    assert_eq!(
        lorenz(&["grid", "xy", "--format", "png"]).status.code(),
        Some(1)
    );
    assert_eq!(
        lorenz(&["enumerate", "--max-len", "65"]).status.code(),
        Some(1)
    );
    assert_eq!(lorenz(&["verify"]).status.code(), Some(1));
    assert_eq!(lorenz(&["--help"]).status.code(), Some(0));
}
