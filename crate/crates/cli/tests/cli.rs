use std::process::{Command, Output};

fn lozenge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lozenge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_methods_print_the_same_value() {
    for method in ["det", "closed", "oracle"] {
        let o = lozenge(&["count", "--N", "2", "--M", "2", "--l", "2", "--method", method]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().next(), Some(format!("6\t{method}").as_str()));
    }
}

#[test]
fn count_methods_agree_on_small_hexagons() {
    for n in 1..=3u64 {
        for m in 1..=4 - n {
            for l in 0..n + m {
                let a = [n, m, l].map(|v| v.to_string());
                let args = |method: &'static str| {
                    vec!["count", "--N", a[0].as_str(), "--M", a[1].as_str(), "--l", a[2].as_str(), "--method", method]
                };
                let det = stdout(&lozenge(&args("det")));
                let oracle = stdout(&lozenge(&args("oracle")));
                assert_eq!(det.split('\t').next(), oracle.split('\t').next(), "N={n} M={m} l={l}");
                let closed = lozenge(&args("closed"));
                if closed.status.success() {
                    assert_eq!(det.split('\t').next(), stdout(&closed).split('\t').next());
                } else {
                    assert_eq!(closed.status.code(), Some(2));
                }
            }
        }
    }
}

#[test]
fn json_report_schema() {
    let o = lozenge(&["--format", "json", "hankel", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "1/6");
    assert_eq!(v["method"], "closed");
    assert_eq!(v["query"]["a"], "1");
    assert_eq!(v["checks"][0]["name"], "closed = direct");
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn verify_lemmas_passes() {
    let o = lozenge(&["verify", "lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| l.ends_with("\tpass")));
}

#[test]
fn output_is_byte_stable() {
    let a = lozenge(&["--format", "json", "verify", "hyper"]);
    let b = lozenge(&["--format", "json", "verify", "hyper", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["count", "--N", "2", "--M", "2", "--l", "7"],
        vec!["count", "--N", "2"],
        vec!["closed", "--variant", "Nope", "--n", "1", "--m", "1"],
        vec!["bernoulli", "--N", "3", "--x", "1/3", "--method", "closed"],
        vec!["verify", "everything"],
    ] {
        let o = lozenge(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn asy_table() {
    let o = lozenge(&["asy", "--ratio", "1", "--nmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tm\tproportion\tdecimal\tprediction");
    assert!(lines[1].starts_with("1\t1\t3/10\t"));
    assert_eq!(lines.len(), 3);
}

#[test]
fn explore_is_not_pass_fail() {
    let o = lozenge(&["explore", "conjecture", "--c", "2", "--d", "2", "--nmax", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("consistent\tyes"));
    assert!(out.contains("2\t73\n"));
}

#[test]
fn totals_and_dents() {
    assert_eq!(stdout(&lozenge(&["total", "--N", "2", "--M", "2"])), "20\tformula\n");
    assert_eq!(stdout(&lozenge(&["total", "--N", "2", "--M", "2", "--method", "oracle"])), "20\toracle\n");
    for method in ["formula", "oracle"] {
        let o = lozenge(&["dented", "--N", "4", "--M", "3", "--dents", "0,1,4,5", "--method", method]);
        assert_eq!(stdout(&o), format!("20\t{method}\n"));
    }
}
