//! End-to-end tests of the binary: golden outputs, exit codes, JSON schema.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_clifford-fvs");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn inverse_golden_example() {
    let out = run(&["--signature", "2,5", "inverse", "1 - 2*e15 + 5*e134"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1/22 + 1/11*e15 - 5/22*e134\n");
}

#[test]
fn inverse_trivial_and_singular() {
    let out = run(&["--signature", "1,1", "inverse", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["--signature", "1,1", "inverse", "1 + e1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("inverse does not exist: c_N = 0"));
}

#[test]
fn inverse_trace_lines() {
    let out = run(&["--signature", "2,5", "--trace", "inverse", "1 - 2*e15 + 5*e134"]);
    assert_eq!(out.status.code(), Some(0));
    let expect = "\
t_1= -4 , m_1= 1 - 2*e15 + 5*e134
t_2= 48 , m_2= -24 + 4*e15 - 10*e134
t_3= -88 , m_3= 66 - 44*e15 + 110*e134
t_4= 484 , m_4= -484
1/22 + 1/11*e15 - 5/22*e134
";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn charpoly_renderings() {
    let out = run(&["--signature", "2,5", "charpoly", "1 - 2*e15 + 5*e134"]);
    assert_eq!(stdout(&out), "v^4 - 4*v^3 + 48*v^2 - 88*v + 484\n");

    let out = run(&["--signature", "1,0", "charpoly", "0"]);
    assert_eq!(stdout(&out), "v^2\n");

    let out = run(&["--signature", "2,0", "charpoly", "2 + e1 + e2 + e12"]);
    assert_eq!(stdout(&out), "v^2 - 4*v + 3\n");
}

#[test]
fn det_examples() {
    let out = run(&["--signature", "2,5", "det", "1 - 2*e15 + 5*e134"]);
    assert_eq!(stdout(&out), "484\n");

    let out = run(&["--signature", "1,1", "det", "1"]);
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["--signature", "1,1", "det", "1 + e1"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn matrep_dumps() {
    let out = run(&["--signature", "2,0", "matrep", "e1"]);
    let expect = "\
dim=4 basis=1,e1,e2,e12
0 1 0 0
1 0 0 0
0 0 0 -1
0 0 -1 0
";
    assert_eq!(stdout(&out), expect);

    // trace of the dump for a scalar is dim * value
    let out = run(&["--signature", "2,0", "matrep", "3"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    let trace: i64 = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.split_whitespace()
                .nth(i)
                .unwrap()
                .parse::<i64>()
                .unwrap()
        })
        .sum();
    assert_eq!(trace, 12);

    // reduced mode restricts to the span basis
    let out = run(&["--signature", "2,5", "--mode", "reduced", "matrep", "e15"]);
    assert!(stdout(&out).starts_with("dim=4 basis=1,e1,e5,e15\n"));
}

#[test]
fn verify_reports() {
    let out = run(&["--signature", "2,5", "verify", "1 - 2*e15 + 5*e134"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("inverse product A*A^-1 = A^-1*A = 1: PASS"));
    assert!(text.contains("oracle determinant det(pi(A)) matches full-mode c_N: PASS"));
    assert!(text.contains("homomorphism pi(A*A) = pi(A)^2: PASS"));
    assert!(text.contains("trace identity tr pi(A) = dim * <A>_0: PASS"));

    let out = run(&["--signature", "1,1", "verify", "1 + e1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("singular: consistent (oracle det = 0): PASS"));
}

#[test]
fn json_output_schema() {
    let out = run(&[
        "--signature", "2,5", "--json", "--trace", "inverse", "1 - 2*e15 + 5*e134",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "inverse");
    assert_eq!(v["signature"], "2,5");
    assert_eq!(v["mode"], "reduced");
    assert_eq!(v["scalar"], "rational");
    assert_eq!(v["result"]["inverse"], "1/22 + 1/11*e15 - 5/22*e134");
    assert_eq!(v["result"]["steps"], 4);
    assert_eq!(v["result"]["singular"], false);
    let coeffs: Vec<&str> = v["result"]["charpoly"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "-4", "48", "-88", "484"]);
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 4);
    assert_eq!(trace[0], "t_1= -4 , m_1= 1 - 2*e15 + 5*e134");

    let out = run(&["--signature", "2,5", "--json", "charpoly", "1 - 2*e15 + 5*e134"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["degree"], 4);

    let out = run(&["--signature", "2,0", "--json", "matrep", "e1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["dim"], 4);
    assert_eq!(v["result"]["rows"][0][1], "1");

    // singular runs still emit the JSON result before exiting 2
    let out = run(&["--signature", "1,1", "--json", "inverse", "1 + e1"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["singular"], true);
    assert_eq!(v["result"]["inverse"], serde_json::Value::Null);
}

#[test]
fn float_scalar_mode() {
    let out = run(&["--signature", "2,5", "--scalar", "f64", "inverse", "1 - 2*e15 + 5*e134"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("e15"), "unexpected output: {text}");

    // decimals are only admissible in the float field
    let out = run(&["--signature", "1,1", "--scalar", "f64", "inverse", "2.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0.4\n");
    let out = run(&["--signature", "1,1", "inverse", "2.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_parse_errors() {
    let out = run(&["inverse", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--signature"));

    let out = run(&["--signature", "2,5", "inverse", "1 + e9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("parse error"));

    let out = run(&["--signature", "bogus", "inverse", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["--signature", "2,5", "bogus-command", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stdin_expression() {
    let mut child = Command::new(BIN)
        .args(["--signature", "2,5", "inverse", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"1 - 2*e15 + 5*e134\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1/22 + 1/11*e15 - 5/22*e134\n");
}
