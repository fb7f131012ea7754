use std::io::Write;
use std::process::{Command, Output, Stdio};

use jacksym::alpha::{alpha, frac, int};
use jacksym::cli::parse_symfun;
use jacksym::{part, Basis, SymFun};

fn jack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jack")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn symfun_out(args: &[&str]) -> SymFun {
    let o = jack(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    parse_symfun(&stdout(&o)).expect("output parses as a symmetric function")
}

#[test]
fn expand_two_row() {
    let got = symfun_out(&["expand", "-l", "2"]);
    let expected = SymFun::from_terms(
        Basis::Monomial,
        [(part![2], int(1)), (part![1, 1], int(2).div(&alpha().add(&int(1))).unwrap())],
    );
    assert_eq!(got, expected);
}

#[test]
fn expand_empty_is_one() {
    assert!(symfun_out(&["expand", "-l", "-"]).same_element(&SymFun::one()));
}

#[test]
fn expand_column_in_power_sums() {
    let got = symfun_out(&["expand", "-l", "1,1", "--basis", "p"]);
    let expected = SymFun::from_terms(Basis::PowerSum, [(part![1, 1], frac(1, 2)), (part![2], frac(-1, 2))]);
    assert_eq!(got, expected);
}

#[test]
fn apply_first_operator_on_p1() {
    let got = symfun_out(&["apply", "--op", "A1", "--in", "{p:[1]}"]);
    assert_eq!(got, SymFun::p(part![1]).scale(&alpha().neg()));
}

#[test]
fn apply_second_hamiltonian_on_p2() {
    let got = symfun_out(&["apply", "--op", "H2", "--in", "{p:[2]}"]);
    let a = alpha();
    let expected = SymFun::from_terms(
        Basis::PowerSum,
        [
            (part![1, 1], a.scale(&jacksym::field::rat(2, 1))),
            (part![2], a.mul(&a.sub(&int(1))).scale(&jacksym::field::rat(4, 1))),
        ],
    );
    assert_eq!(got, expected);
}

#[test]
fn apply_b1_on_one() {
    assert!(symfun_out(&["apply", "--op", "B1", "--in", "1"]).same_element(&SymFun::p(part![1])));
}

#[test]
fn apply_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jack"))
        .args(["apply", "--op", "H1", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"{m:[2,1]}").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let got = parse_symfun(&stdout(&o)).unwrap();
    assert_eq!(got, SymFun::m(part![2, 1]).scale(&alpha().scale(&jacksym::field::rat(3, 1))));
}

#[test]
fn output_round_trips() {
    let first = stdout(&jack(&["expand", "-l", "3,1"]));
    let f = parse_symfun(&first).unwrap();
    assert_eq!(serde_json::to_string(&f).unwrap(), first.trim());
}

#[test]
fn text_format_and_specialization() {
    let o = jack(&["expand", "-l", "2", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "m[2] + 2/(α+1)·m[1,1]");
    let o = jack(&["expand", "-l", "2", "--format", "text", "--alpha", "1/2"]);
    assert_eq!(stdout(&o).trim(), "m[2] + 4/3·m[1,1]");
}

#[test]
fn eigenvalue_coefficients() {
    let o = jack(&["eigenvalue", "-l", "2,1", "-k", "1", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "-3α");
    let o = jack(&["eigenvalue", "-l", "2,1", "--format", "text"]);
    assert!(stdout(&o).contains("A^(2): 2α^2+α"), "{}", stdout(&o));
}

#[test]
fn step_commands() {
    let o = jack(&["step", "-l", "2", "-i", "1", "--direction", "up", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "P[1] -> 1/(2α) · P[2]");
    assert_eq!(jack(&["step", "-l", "2", "-i", "2"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    assert_eq!(jack(&["verify", "commute", "--max-weight", "6", "--max-k", "3"]).status.code(), Some(0));
    assert_eq!(jack(&["verify", "detid", "--n", "3", "--m", "3", "--seeds", "50"]).status.code(), Some(0));
    let o = jack(&["verify", "hs", "--max-weight", "6", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS HS1"));
}

#[test]
fn verify_json_report() {
    let o = jack(&["verify", "kernel", "--max-weight", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], serde_json::json!(true));
}

#[test]
fn kernel_lemma_exit_code() {
    assert_eq!(jack(&["kernel", "-d", "3", "--in", "{p:[2,1]}"]).status.code(), Some(0));
    let o = jack(&["kernel", "-d", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand"][..],
        &["expand", "-l", "1,2"],
        &["expand", "-l", "x"],
        &["apply", "--op", "Q3", "--in", "1"],
        &["apply", "--op", "A1", "--in", "{p:"],
        &["verify", "everything"],
        &["expand", "-l", "2", "--alpha", "one"],
        &["expand", "-l", "2", "--alpha", "-1"],
        &["frobnicate"],
    ] {
        assert_eq!(jack(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(jack(&["--help"]).status.code(), Some(0));
}

#[test]
fn verification_failure_exits_one_with_counterexample() {
    let o = jack(&["verify", "pieri", "--max-weight", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL step-up-operator"), "{text}");
    assert!(text.contains("first counterexample"), "{text}");
    assert!(text.contains("PASS step-up-isolating-point"), "{text}");
}
