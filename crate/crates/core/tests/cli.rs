use std::process::Command;

use twobridge::cli::{run, EXIT_IDENTITY_FAILED, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("twobridge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge")).args(args).output().unwrap()
}

#[test]
fn enumerate_csv_c5() {
    let (code, out, _) = call(&["enumerate", "-c", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "word,c,length,s,genus,case,palindromic\n\
         +-++--+,5,7,4,1,case2,false\n\
         +--+--+,5,7,2,2,case3,true\n\
         +--++-+,5,7,4,1,case4,false\n"
    );
}

#[test]
fn enumerate_json_has_one_record_per_word() {
    let (code, out, _) = call(&["enumerate", "-c", "7", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 11);
    assert_eq!(v[0]["c"], 7);
}

#[test]
fn enumerate_palindromic_only() {
    let (_, out, _) = call(&["enumerate", "-c", "7", "--palindromic"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn stats_csv_matches_known_rows() {
    let (code, out, _) = call(&["stats", "--min", "3", "--max", "6"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "c,t,t_p,knots,s_total,s_p_total,avg_seifert,avg_genus,epsilon");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows[0], "3,1,1,1,2,2,2/1,1/1,1/6");
    assert_eq!(rows[3], "6,5,1,3,19,3,11/3,5/3,1/12");
}

#[test]
fn stats_json_is_an_array() {
    let (_, out, _) = call(&["stats", "--min", "5", "--max", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["avg_genus"], "3/2");
    assert_eq!(v[0]["knot_count"], 2);
}

#[test]
fn word_round_trips_every_enumerated_word() {
    let (_, out, _) = call(&["enumerate", "-c", "8", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    for row in rows {
        let word = row["word"].as_str().unwrap();
        let (code, detail, _) = call(&["word", word, "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let d: serde_json::Value = serde_json::from_str(&detail).unwrap();
        assert_eq!(d["word"], row["word"]);
        assert_eq!(d["s"], row["s"]);
        assert_eq!(d["genus"], row["genus"]);
    }
}

#[test]
fn word_accepts_runs() {
    let (code, out, _) = call(&["word", "1,1,2,2,1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("+-++--+"));
    assert!(out.contains("HVVHH"));
}

#[test]
fn invalid_words_name_the_violation() {
    let (code, _, err) = call(&["word", "+-+"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not 1 mod 3"), "{err}");
    let (code, _, err) = call(&["word", "+---+"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("length 3"), "{err}");
}

#[test]
fn out_of_range_arguments_exit_2() {
    assert_eq!(call(&["enumerate", "-c", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "-c", "19"]).0, EXIT_USAGE);
    assert_eq!(call(&["stats", "--min", "7", "--max", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--min", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
}

#[test]
fn cap_can_be_raised() {
    let (code, out, _) = call(&["--cap", "19", "stats", "--min", "19", "--max", "19"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().nth(1).unwrap().starts_with("19,43691,171,21931,"));
}

#[test]
fn verify_passes_and_reports_each_identity() {
    let (code, out, _) = call(&["verify", "--max", "9"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("all 19 identities hold"));
    assert_eq!(out.matches(": PASS").count(), 19);
}

#[test]
fn verify_json() {
    let (code, out, _) = call(&["verify", "--max", "7", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 19);
}

#[test]
fn injected_fault_exits_1_with_counterexample() {
    let (code, out, _) = call(&["verify", "--max", "7", "--inject-fault"]);
    assert_eq!(code, EXIT_IDENTITY_FAILED);
    assert!(out.contains("FAIL (first counterexample:"));
}

#[test]
fn output_independent_of_thread_count() {
    for args in [&["enumerate", "-c", "12"][..], &["stats", "--min", "3", "--max", "14"], &["verify", "--max", "11"]] {
        let one = call(&[&["--threads", "1"], args].concat());
        let many = call(&[&["--threads", "8"], args].concat());
        assert_eq!(one, many, "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let ok = binary(&["word", "+-++--+"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("case2"));
    assert_eq!(binary(&["word", "+-+"]).status.code(), Some(2));
    assert_eq!(binary(&["enumerate"]).status.code(), Some(2));
    assert_eq!(binary(&["verify", "--max", "6", "--inject-fault"]).status.code(), Some(1));
    assert_eq!(binary(&["--help"]).status.code(), Some(0));
}
