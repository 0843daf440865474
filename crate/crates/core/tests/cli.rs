use herglotz::cli::{run, EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
use herglotz::verify::ReportFile;

fn capture(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("herglotz").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn enumerate_three() {
    let (code, out, _) = capture(&["hecke", "enumerate", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(
        rows,
        [
            "[1,0,0,3]",
            "[1,0,1,3]",
            "[1,0,2,3]",
            "[2,1,1,2]",
            "[3,0,0,1]",
            "[3,1,0,1]",
            "[3,2,0,1]"
        ]
    );
    let (_, json, _) = capture(&[
        "hecke",
        "enumerate",
        "--n",
        "3",
        "--plus",
        "--format",
        "json",
    ]);
    assert_eq!(json.trim(), "[[2,1,1,2],[3,1,0,1],[3,2,0,1]]");
}

#[test]
fn check_cn_twelve() {
    let (code, out, _) = capture(&["hecke", "check-cn", "--n", "12", "--mode", "per-orbit"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("C_12 (per-orbit): PASS over 28 orbits"),
        "{out}"
    );
    let (code, json, _) = capture(&["hecke", "check-cn", "--n", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(json.contains(r#""point": "inf""#));
}

#[test]
fn chains_five() {
    let (code, out, _) = capture(&["hecke", "chains", "--l", "5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("chain,length,x_n"));
    let mut xs: Vec<i64> = lines
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(xs.len(), 4);
    xs.sort();
    assert_eq!(xs, vec![1, 2, 3, 4]);
    assert_eq!(capture(&["hecke", "chains", "--l", "6"]).0, EXIT_INVALID);
}

#[test]
fn eval_outputs() {
    let (code, out, _) = capture(&["eval", "mhz", "--x", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("mhz(1) = 0\n"), "{out}");
    let (code, out, _) = capture(&["eval", "hz", "--x", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["value"].as_f64().unwrap() + 0.916_240_149_844_295_8).abs() < 1e-12);
    assert!(v["err_bound"].as_f64().unwrap() < 1e-11);
}

#[test]
fn verify_single_points() {
    let (code, out, _) = capture(&["verify", "theorem1", "--l", "3", "--x", "2", "--y", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(
        out.contains("PASS theorem1") && out.contains("k=") && out.contains("excess="),
        "{out}"
    );
    let (code, out, _) = capture(&["verify", "rz", "--n", "1", "--x", "1.3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("residual=0.000000e0"), "{out}");
}

#[test]
fn verify_failure_exit_code() {
    // a tolerance far below the HZ error budget must fail
    let (code, _, _) = capture(&[
        "verify",
        "rz",
        "--n",
        "6",
        "--x",
        "0.3",
        "--tolerance",
        "1e-20",
    ]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert_eq!(capture(&["verify", "theorem2"]).0, EXIT_USAGE);
    assert_eq!(
        capture(&["verify", "theorem1", "--l", "4", "--x", "2", "--y", "3"]).0,
        EXIT_INVALID
    );
    assert_eq!(
        capture(&["verify", "theorem1", "--tolerance", "-1"]).0,
        EXIT_INVALID
    );
}

#[test]
fn verify_json_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    for p in [&p1, &p2] {
        let args = [
            "verify",
            "five-term",
            "--samples",
            "50",
            "--seed",
            "11",
            "--out",
            p.to_str().unwrap(),
        ];
        assert_eq!(capture(&args).0, EXIT_OK);
    }
    let a = std::fs::read(&p1).unwrap();
    assert_eq!(a, std::fs::read(&p2).unwrap());
    let text = String::from_utf8(a).unwrap();
    let parsed = ReportFile::from_json(&text).unwrap();
    assert_eq!(parsed.seed, 11);
    assert_eq!(parsed.reports.len(), 50);
    assert_eq!(parsed.to_json() + "\n", text);
}

#[test]
fn verify_csv_columns() {
    let (code, out, _) = capture(&[
        "verify",
        "complement",
        "--l",
        "3",
        "--x",
        "0.5,2",
        "--y",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("identity,l_or_n,x,y,residual,k,excess,pass")
    );
    assert_eq!(lines.count(), 2);
}
