mod common;

use std::process::Command;

use common::{g, random_seeds};
use jacobsthal::cli::{parse_range, run, Outcome};
use jacobsthal::{Error, GaussianRational, Rational};
use serde_json::Value;

fn cli(args: &[&str]) -> jacobsthal::Result<Outcome> {
    run(std::iter::once("jacobsthal").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = cli(&full).unwrap();
    serde_json::from_str(&out.stdout).unwrap()
}

fn value(row: &Value) -> GaussianRational {
    let part = |k: &str| row[k].as_str().unwrap().parse::<Rational>().unwrap();
    GaussianRational::new(part("re"), part("im"))
}

fn column(rows: &Value) -> Vec<GaussianRational> {
    rows.as_array().unwrap().iter().map(value).collect()
}

#[test]
fn terms_for_the_presets() {
    let jg = column(&json(&["terms", "--preset", "jg", "--from", "0", "--to", "5"]));
    assert_eq!(jg, ["0", "1", "1+i", "2+i", "5+2i", "9+5i"].map(g));
    let unit = column(&json(&["terms", "--seed", "1,0,0", "--from", "0", "--to", "3"]));
    assert_eq!(unit, ["1-1/2i", "i", "0", "2"].map(g));
    let kg = column(&json(&["terms", "--preset", "kg", "--from", "-2", "--to", "0"]));
    assert_eq!(kg, ["-3/4+17/8i", "-1/2-3/4i", "3-1/2i"].map(g));
}

#[test]
fn terms_json_schema() {
    let rows = json(&["terms", "--preset", "jg", "--from", "-1", "--to", "0"]);
    let first = rows[0].as_object().unwrap();
    assert_eq!(first.keys().collect::<Vec<_>>(), ["n", "re", "im"]);
    assert_eq!(rows[0]["n"], -1);

    let all = json(&["terms", "--preset", "kg", "--from", "-3", "--to", "3", "--method", "all"]);
    for row in all.as_array().unwrap() {
        let keys: Vec<_> = row.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["n", "re", "im", "binet", "fast", "match"]);
        assert_eq!(row["match"], true);
        assert_eq!(value(&row["binet"]), value(row));
        assert_eq!(value(&row["fast"]), value(row));
    }
}

#[test]
fn terms_csv_has_headers() {
    let out = cli(&["--format", "csv", "terms", "--preset", "kg", "--from", "0", "--to", "1"]).unwrap();
    assert_eq!(out.stdout, "n,re,im\n0,3,-1/2\n1,1,3\n");
    let all =
        cli(&["terms", "--preset", "kg", "--from", "0", "--to", "0", "--method", "all", "--format", "csv"]).unwrap();
    assert_eq!(all.stdout, "n,re,im,binet_re,binet_im,fast_re,fast_im,match\n0,3,-1/2,3,-1/2,3,-1/2,true\n");
}

#[test]
fn every_evaluator_is_selectable() {
    for method in ["recurrence", "binet", "fast"] {
        let rows = column(&json(&["terms", "--seed", "1/2,-2/3,7", "--from", "-5", "--to", "5", "--method", method]));
        assert_eq!(rows.len(), 11);
        assert_eq!(rows, column(&json(&["terms", "--seed", "1/2,-2/3,7", "--from", "-5", "--to", "5"])));
    }
}

#[test]
fn printed_values_round_trip() {
    for seed in random_seeds(40, 10) {
        let text = seed.to_string();
        let rows = json(&["terms", "--seed", &text, "--from", "-12", "--to", "12"]);
        for (n, row) in (-12..=12).zip(rows.as_array().unwrap()) {
            assert_eq!(value(row), jacobsthal::sequence::term_recurrence(&seed, n));
            let re = row["re"].as_str().unwrap();
            assert_eq!(re.parse::<Rational>().unwrap().to_string(), re, "reduced form");
        }
        let csv = cli(&["--format", "csv", "series", "--seed", &text, "--count", "8"]).unwrap();
        for (k, line) in csv.stdout.lines().skip(1).enumerate() {
            let cells: Vec<_> = line.split(',').collect();
            let x = GaussianRational::new(cells[1].parse().unwrap(), cells[2].parse().unwrap());
            assert_eq!(x, jacobsthal::sequence::term_recurrence(&seed, k as i64));
            assert_eq!(cells[3], "true");
        }
    }
}

#[test]
fn check_examples() {
    let out = cli(&["check", "--identity", "cassini", "--preset", "kg", "--n", "1..10"]).unwrap();
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.ends_with("summary: 10 holds, 0 fails\n"), "{}", out.stdout);

    let sum = json(&["check", "--identity", "sum", "--seed", "2/3,1,1/5", "--n", "0..20"]);
    assert_eq!(sum["summary"]["holds"], 21);
    assert_eq!(sum["summary"]["fails"], 0);

    let out = cli(&["check", "--identity", "docagne", "--preset", "jg", "--m", "1", "--n", "2"]).unwrap();
    assert_eq!(out.exit_code, 0);
    let row = out.stdout.lines().nth(1).unwrap();
    assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["docagne", "1;2", "holds", "-2+i", "-2+i"]);
}

#[test]
fn check_report_schema() {
    let v = json(&["check", "--identity", "step", "--preset", "jg", "--n", "-3..=3"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 7);
    let keys: Vec<_> = reports[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["identity", "seed", "status", "counterexample"]);
    assert_eq!(reports[0]["seed"], serde_json::json!(["0", "1", "1"]));
    assert!(reports.iter().all(|r| r["status"] == "holds" && r["counterexample"].is_null()));
}

#[test]
fn every_identity_is_checkable() {
    let cases: [&[&str]; 9] = [
        &["--identity", "cassini", "--n", "1..5"],
        &["--identity", "docagne", "--m", "0..3", "--n", "0..3"],
        &["--identity", "sum", "--n", "0..5"],
        &["--identity", "step", "--n", "-5..5"],
        &["--identity", "jump3", "--n", "0..5"],
        &["--identity", "window3", "--n", "0..5"],
        &["--identity", "qstep", "--q", "2..4", "--m", "0..4"],
        &["--identity", "qbinom", "--q", "1..4", "--m", "0..4"],
        &["--identity", "qgeom", "--q", "1..4", "--m", "0..4"],
    ];
    for case in cases {
        for seed in ["1,1,4", "-3/2,5,1/3"] {
            let mut args = vec!["check", "--seed", seed];
            args.extend_from_slice(case);
            let out = cli(&args).unwrap();
            assert_eq!(out.exit_code, 0, "{args:?}\n{}", out.stdout);
        }
    }
}

#[test]
fn outside_hypothesis_is_labelled() {
    let v = json(&["check", "--identity", "docagne", "--preset", "kg", "--m", "3", "--n", "1"]);
    assert_eq!(v["reports"][0]["identity"], "docagne (outside hypothesis)");
    let v = json(&["check", "--identity", "cassini", "--preset", "kg", "--n", "0"]);
    assert_eq!(v["reports"][0]["identity"], "cassini (outside hypothesis)");
}

#[test]
fn degenerate_geometric_sum_falls_back() {
    let v = json(&["check", "--identity", "qgeom", "--seed", "1,1,4", "--q", "3", "--m", "0..1"]);
    let names: Vec<_> = v["reports"].as_array().unwrap().iter().map(|r| r["identity"].clone()).collect();
    assert_eq!(names, ["qgeom (ratio-1 fallback)", "qgeom"]);
    assert_eq!(v["summary"]["fails"], 0);
}

#[test]
fn series_examples() {
    let jg = json(&["series", "--preset", "jg", "--count", "6"]);
    assert_eq!(column(&jg), ["0", "1", "1+i", "2+i", "5+2i", "9+5i"].map(g));
    let kg = json(&["series", "--preset", "kg", "--count", "1"]);
    assert_eq!(column(&kg), vec![g("3-1/2i")]);
    let flags = json(&["series", "--seed", "1,2,3", "--count", "10"]);
    assert!(flags.as_array().unwrap().iter().all(|r| r["match"] == true));
    assert_eq!(cli(&["series", "--preset", "jg", "--count", "0"]), Err(Error::EmptySeries));
}

#[test]
fn q_terms_output() {
    let v = json(&["q-terms", "--preset", "jg", "--q", "2", "--from", "0", "--to", "5"]);
    // Jg(m)^(2−r)·Jg(m+1)^r with Jg = 0, 1, 1+i, 2+i.
    assert_eq!(column(&v), ["0", "0", "1", "1+i", "2i", "1+3i"].map(g));
    assert_eq!(
        cli(&["q-terms", "--preset", "jg", "--q", "0", "--from", "0", "--to", "1"]),
        Err(Error::InvalidQ { q: 0, min: 1 })
    );
}

#[test]
fn errata_verdicts() {
    let v = json(&["errata"]);
    let entries = v.as_array().unwrap();
    let find = |name: &str| entries.iter().find(|e| e["formula"] == name).unwrap().clone();
    let jg_sum = find("jg partial-sum corollary constant");
    assert_eq!((jg_sum["printed"].as_str(), jg_sum["printed_verdict"].as_str()), (Some("-1-2i"), Some("fails")));
    assert_eq!((jg_sum["derived"].as_str(), jg_sum["derived_verdict"].as_str()), (Some("-1-i"), Some("holds")));
    let kg_cassini = find("kg cassini corollary omega(n) coefficient");
    assert_eq!(kg_cassini["printed_verdict"], "fails");
    assert_eq!(kg_cassini["derived"], "2+11i");
    assert_eq!(find("kg partial-sum corollary constant")["printed_verdict"], "holds");
    assert_eq!(cli(&["errata"]).unwrap().exit_code, 0);
    assert_eq!(cli(&["errata"]).unwrap(), cli(&["errata"]).unwrap());
}

#[test]
fn errors() {
    assert!(matches!(cli(&["terms", "--preset", "jg", "--from", "3", "--to", "1"]), Err(Error::BadRange(_))));
    assert!(matches!(cli(&["terms", "--seed", "1,x,3", "--from", "0", "--to", "1"]), Err(Error::Parse(_))));
    assert_eq!(
        cli(&["check", "--identity", "catalan", "--preset", "jg", "--n", "1"]),
        Err(Error::UnknownIdentity("catalan".into()))
    );
    assert!(matches!(cli(&["terms", "--from", "0", "--to", "1"]), Err(Error::Usage(_))));
    assert!(matches!(
        cli(&["terms", "--seed", "1,2,3", "--preset", "jg", "--from", "0", "--to", "1"]),
        Err(Error::Usage(_))
    ));
    assert_eq!(cli(&["terms", "--seed", "0,0,0", "--from", "0", "--to", "1"]), Err(Error::AllZeroSeed));
    assert!(matches!(parse_range("5..2"), Err(Error::BadRange(_))));
    assert_eq!(parse_range("-3..4").unwrap(), -3..=4);
    assert_eq!(parse_range("7").unwrap(), 7..=7);
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_jacobsthal");
    let ok = Command::new(bin)
        .args(["terms", "--preset", "jg", "--from", "0", "--to", "2", "--format", "csv"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "n,re,im\n0,0,0\n1,1,0\n2,1,1\n");

    let bad = Command::new(bin).args(["terms", "--preset", "jg", "--from", "2", "--to", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("bad range"));

    let neg = Command::new(bin).args(["--seed", "-1,2,-1/2", "terms", "--from", "-1", "--to", "-1"]).output().unwrap();
    assert!(neg.status.success(), "{}", String::from_utf8_lossy(&neg.stderr));

    let help = Command::new(bin).arg("--help").output().unwrap();
    assert!(help.status.success());
    assert!(String::from_utf8(help.stdout).unwrap().contains("errata"));
}
