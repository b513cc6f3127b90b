use std::process::{Command, Output};

fn cfheight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfheight"))
        .args(args)
        .output()
        .expect("run cfheight")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn height_prints_exact_decimal_and_witness() {
    let o = cfheight(&["height", "3/7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().next(),
        Some("H = 4/7 ≈ 0.571428571429, witness k=1")
    );
    assert!(out.contains("brute force: H = 4/7"));
    assert!(out.contains("cf formula:  H = 4/7"));
}

#[test]
fn bad_fractions_are_usage_errors() {
    let o = cfheight(&["height", "2/4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("lowest terms"), "{}", stderr(&o));

    for arg in ["7/3", "0/5", "x/7", "3"] {
        assert_eq!(cfheight(&["height", arg]).status.code(), Some(2), "{arg}");
    }
    assert_eq!(
        cfheight(&["scan", "--min-den", "9", "--max-den", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(cfheight(&["scan", "--workers", "0"]).status.code(), Some(2));
    assert_eq!(cfheight(&["family", "--terms", "3"]).status.code(), Some(2));
    assert_eq!(
        cfheight(&["family", "--zero", "--terms", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cf_shows_both_forms_and_table() {
    let o = cfheight(&["cf", "5/8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with("5/8 = [0;1,1,1,2]\nalternate form: [0;1,1,1,1,1]\n"),
        "{out}"
    );
    let last: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(last, ["4", "2", "5", "8", "5", "8"]);
}

#[test]
fn scan_single_denominator() {
    let o = cfheight(&["scan", "--min-den", "2", "--max-den", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "m,r,h_num,h_den,h_float\n2,1,1,1,1.00000000000\n"
    );
}

#[test]
fn scan_tsv_to_file_matches_any_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for workers in ["1", "4"] {
        let path = dir.path().join(format!("scan-{workers}.tsv"));
        let o = cfheight(&[
            "scan",
            "--max-den",
            "80",
            "--format",
            "tsv",
            "--method",
            "cf",
            "--workers",
            workers,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(o.stdout.is_empty());
        outputs.push(std::fs::read_to_string(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    assert!(outputs[0].starts_with("m\tr\th_num\th_den\th_float\n"));
    assert!(outputs[0].contains("\n7\t3\t4\t7\t0.571428571429\n"));
}

#[test]
fn family_one_over_k() {
    let o = cfheight(&["family", "--one-over-k", "2", "--terms", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "m,r,h_num,h_den,h_float\n\
         3,1,2,3,0.666666666667\n\
         5,2,3,5,0.600000000000\n\
         7,3,4,7,0.571428571429\n"
    );
    assert!(stderr(&o).contains("limit 1/2"));
}

#[test]
fn family_quantitative() {
    let o = cfheight(&["family", "--quant", "1,2,1", "--terms", "5000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("10001,5000,5001,10001,")));
    assert_eq!(
        cfheight(&["family", "--quant", "1,2", "--terms", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_oracle_passes() {
    let o = cfheight(&["verify", "--suite", "oracle", "--max-den", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_bounds_reports_the_counterexample() {
    let o = cfheight(&["verify", "--suite", "bounds", "--max-den", "20"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("7/11, k=1: H=5/11 > 19/44"), "{out}");
    assert!(out.contains("PASS consecutive-bound"), "{out}");
}
