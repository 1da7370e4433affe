use hurwitz_core::cli::run;

fn hnum(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hnum").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn real_both_agrees() {
    let (code, out, _) = hnum(&[
        "real", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "+", "--method", "both",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "oracle=1 tropical=1 OK");
}

#[test]
fn real_single_methods() {
    for method in ["oracle", "tropical"] {
        let (code, out, _) = hnum(&[
            "real", "-l", "3,1", "-m", "1,1,1,1", "--signs", "+-", "--method", method,
        ]);
        assert_eq!(code, 0);
        assert!(out.trim().parse::<u128>().is_ok(), "{out}");
    }
}

#[test]
fn fixed_target_five() {
    let (code, out, _) = hnum(&["fixed-target", "-d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "N=5 expected=5");
}

#[test]
fn degenerate_data_exits_3() {
    let (code, _, err) = hnum(&["real", "-g", "0", "-l", "3", "-m", "3", "--signs", "+"]);
    assert_eq!(code, 3);
    assert!(!err.is_empty());
    let (code, _, _) = hnum(&["fixed-target", "-d", "4"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["real", "-l", "3,x", "-m", "1,1,1", "--signs", "+"][..],
        &["real", "-l", "3", "-m", "1,1,1", "--signs", "+*"],
        &["real", "-l", "3", "-m", "1,1,1", "--signs", "++"],
        &["frobnicate"],
    ] {
        let (code, _, err) = hnum(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn complex_is_a_fraction() {
    let (code, out, _) = hnum(&["complex", "-l", "3", "-m", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1/3");
}

#[test]
fn enhanced_number() {
    let (code, out, _) = hnum(&["enhanced", "-l", "3", "-m", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "E=1 classes=1");
}

#[test]
fn json_output_is_one_object() {
    let (code, out, _) = hnum(&["--json", "complex", "-l", "3", "-m", "1,1,1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["complex"], "1/3");
}

#[test]
fn output_is_stable_across_runs() {
    let args = ["--json", "real", "-l", "2,2", "-m", "1,1,1,1", "--signs", "-+"];
    let first = hnum(&args);
    for _ in 0..3 {
        assert_eq!(hnum(&args), first);
    }
}

fn export(signs: &str, format: &str, path: &std::path::Path) -> (i32, String, String) {
    let path = path.to_str().unwrap();
    hnum(&[
        "export", "-l", "3", "-m", "1,1,1", "--signs", signs, "--format", format, "--out", path,
    ])
}

#[test]
fn export_writes_files() {
    let dir = std::env::temp_dir().join(format!("hnum-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("covers.json");
    let (code, out, _) = export("+", "json", &json);
    assert_eq!(code, 0);
    assert!(out.contains("1 classes"));
    let docs: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(docs.as_array().unwrap().len(), 1);

    let dot = dir.join("covers.dot");
    assert_eq!(export("-", "dot", &dot).0, 0);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    assert_eq!(export("+", "svg", &dot).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
