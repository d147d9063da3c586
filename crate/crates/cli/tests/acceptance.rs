//! One pass/fail line per acceptance criterion, driven through the binary.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn lorenz(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lorenz"))
        .args(args)
        .output()
        .expect("binary runs");
    (out, start.elapsed())
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn criterion_1() -> Result<(), String> {
    let (o, took) = lorenz(&["analyze", "xxxyyyxyy", "--json"]);
    let v = json(&o);
    let want =
        serde_json::json!({"a": 4, "b": 5, "t": 2, "mu": [1, 3], "nu": [1, 3], "unknotting": 2});
    for (k, expected) in want.as_object().unwrap() {
        if &v[k] != expected {
            return Err(format!("{k} = {}, expected {expected}", v[k]));
        }
    }
    if v["crossings"]["total"] != 12 {
        return Err(format!("c = {}", v["crossings"]["total"]));
    }
    if took >= Duration::from_secs(1) {
        return Err(format!("took {took:?}"));
    }
    Ok(())
}

fn criterion_2() -> Result<(), String> {
    let (o, took1) = lorenz(&["analyze", "xyxyy", "--json"]);
    if json(&o)["unknotting"] != 1 {
        return Err("u != 1".into());
    }
    let (o, took2) = lorenz(&["braid", "xyxyy", "--alexander"]);
    let text = String::from_utf8(o.stdout).unwrap();
    for line in [
        "strands    5",
        "crossings  6",
        "alexander  1\u{b7}s^-1 - 1\u{b7}s^0 + 1\u{b7}s^1",
    ] {
        if !text.contains(line) {
            return Err(format!("missing {line:?} in {text}"));
        }
    }
    let field = |label: &str| -> i64 {
        text.lines()
            .find_map(|l| l.strip_prefix(label))
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(-1)
    };
    let (k, n) = (field("crossings"), field("strands"));
    if (k - n + 1) / 2 != 1 {
        return Err(format!("(k - n + 1)/2 with k = {k}, n = {n}"));
    }
    if took1 + took2 >= Duration::from_secs(1) {
        return Err(format!("took {:?}", took1 + took2));
    }
    Ok(())
}

fn corpus(jobs: &str) -> Result<(Vec<u8>, Duration), String> {
    let (o, took) = lorenz(&["verify", "--max-len", "12", "--jobs", jobs, "--json"]);
    if o.status.code() != Some(0) {
        return Err(format!(
            "exit {:?}: {}",
            o.status.code(),
            String::from_utf8_lossy(&o.stdout)
        ));
    }
    Ok((o.stdout, took))
}

fn criterion_3() -> Result<(), String> {
    let (out, took) = corpus("1")?;
    let v: Value = serde_json::from_slice(&out).unwrap();
    if v["all_passed"] != true || v["words"] != 745 {
        return Err(format!("words {}, failed {}", v["words"], v["failed"]));
    }
    if took >= Duration::from_secs(60) {
        return Err(format!("took {took:?}"));
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    let (o, _) = lorenz(&["enumerate", "--max-len", "12", "--include-t1"]);
    let words = String::from_utf8(o.stdout).unwrap();
    let trip_one = words.lines().filter(|w| w.matches("yx").count() == 0);
    let mut n = 0;
    for w in trip_one {
        let v = json(&lorenz(&["unknot", w, "--json"]).0);
        let wrong = v["crossings"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| c["wrong"] == true)
            .count();
        if v["U"] != 0 || wrong != 0 {
            return Err(format!("{w}: U = {}, {wrong} changes", v["U"]));
        }
        n += 1;
    }
    if n != 66 {
        return Err(format!("{n} words of trip number one"));
    }
    let g = json(&lorenz(&["grid", "xy", "--format", "json"]).0);
    let v = json(&lorenz(&["analyze", "xy", "--json"]).0);
    if g["n"] != 3 || v["crossings"]["total"] != 1 {
        return Err(format!(
            "xy: n = {}, crossings = {}",
            g["n"], v["crossings"]["total"]
        ));
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    let (serial, _) = corpus("1")?;
    let (again, _) = corpus("1")?;
    let (parallel, _) = corpus("4")?;
    if serial != again {
        return Err("repeated serial runs differ".into());
    }
    if serial != parallel {
        return Err("serial and parallel runs differ".into());
    }
    Ok(())
}

type Criterion = fn() -> Result<(), String>;

fn main() {
    let criteria: [(&str, Criterion); 5] = [
        ("1 example reproduction (xxxyyyxyy)", criterion_1),
        ("2 trefoil oracle (xyxyy)", criterion_2),
        ("3 corpus identity suite (L <= 12)", criterion_3),
        ("4 degenerate anchors (t = 1, xy)", criterion_4),
        ("5 determinism (serial, repeated, parallel)", criterion_5),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("criterion {name}: PASS"),
            Err(e) => {
                failed += 1;
                println!("criterion {name}: FAIL ({e})");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
