use serde_json::{json, Value};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("heisdouble").chain(args.iter().copied());
    let code = heisdouble_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok_json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn element(alg: &str, basis: &str, terms: &[(&[usize], &str)]) -> Value {
    let t: Vec<Value> = terms.iter().map(|(i, c)| json!({"index": i, "coeff": c})).collect();
    json!({"algebra": alg, "basis": basis, "terms": t})
}

#[test]
fn mul_example() {
    let v = ok_json(&["mul", "--expr", "M[1]*M[1]"]);
    assert_eq!(v, element("QSym", "M", &[(&[1, 1], "2"), (&[2], "1")]));
}

#[test]
fn grammar_examples() {
    ok_json(&["mul", "--expr", "M[1,2] + 2*M[3]"]);
    ok_json(&["mul", "--expr", "nh[2]*r[1,1]"]);
    let v = ok_json(&["mul", "--expr", "s[2,1]", "--basis", "m"]);
    assert_eq!(v, element("Sym", "m", &[(&[1, 1, 1], "2"), (&[2, 1], "1")]));
}

#[test]
fn convert_round_trip() {
    let there = ok_json(&["convert", "--expr", "3*F[2,1] - F[1,1,1]", "--basis", "M"]);
    let src = "3*M[2,1] + 2*M[1,1,1]";
    assert_eq!(there, ok_json(&["mul", "--expr", src]));
    let back = ok_json(&["convert", "--expr", src, "--basis", "F"]);
    assert_eq!(back, element("QSym", "F", &[(&[1, 1, 1], "-1"), (&[2, 1], "3")]));
}

#[test]
fn coproduct_pair_skew() {
    let v = ok_json(&["coproduct", "--expr", "h[2]"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(ok_json(&["pair", "--expr", "r[1,2]", "--on", "F[1,2]"]), json!({"pairing": "1"}));
    assert_eq!(ok_json(&["pair", "--expr", "m[2]", "--on", "m[2]"]), json!({"pairing": "2"}));
    let v = ok_json(&["skew", "--expr", "nh[1]", "--on", "M[2,1]"]);
    assert_eq!(v, element("QSym", "M", &[(&[2], "1")]));
}

#[test]
fn heisenberg_and_fock() {
    let v = ok_json(&["heis-mul", "--expr", "nh[1]*M[1] - M[1]*nh[1]"]);
    assert_eq!(v["terms"], json!([{"plus": [], "minus": [], "coeff": "1"}]));
    let v = ok_json(&["fock", "--expr", "1#x[1]", "--on", "xdiv[3]"]);
    assert_eq!(v, element("Gamma", "xdiv", &[(&[2], "1")]));
    let v = ok_json(&["fock", "--expr", "M[1]#1", "--on", "nh[2]", "--highest"]);
    assert_eq!(v["algebra"], "NSym");
}

#[test]
fn hecke_and_cosets() {
    let v = ok_json(&["hecke", "--expr", "t[1]*t[1]", "--c", "-1", "--d", "0"]);
    assert_eq!(v["terms"], json!([{"perm": [2, 1], "coeff": "-1"}]));
    let v = ok_json(&["hecke", "--expr", "t[1]*t[1]", "--c", "2", "--d", "3"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let v = ok_json(&["cosets", "--k", "2", "--l", "2", "--n", "2", "--m", "2"]);
    let total: u64 = v["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["cardinality"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 24);
}

#[test]
fn verify_reports() {
    let v = ok_json(&["verify", "--suite", "quasi_M", "--max-degree", "6"]);
    assert_eq!(v["failures"], json!([]));
    assert_eq!(v["suite"], "quasi_M");
    assert!(v["checks"].as_u64().unwrap() > 0);
    let v = ok_json(&["rootofunity", "--ell", "3", "--max-degree", "4"]);
    assert_eq!(v["failures"], json!([]));
    let v = ok_json(&["freeness", "--max-degree", "4"]);
    assert_eq!(v["counts"], json!([1, 0, 0, 1, 2]));
}

#[test]
fn certificate_file() {
    let dir = std::env::temp_dir().join(format!("heisdouble-cert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    ok_json(&["freeness", "--max-degree", "5", "--emit-certificate", path.to_str().unwrap()]);
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert["counts"], json!([1, 0, 0, 1, 2, 5]));
    assert_eq!(cert["generators"].as_array().unwrap().len(), 9);
    assert_eq!(cert["generators"][0]["element"]["basis"], "M");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn error_exit_codes() {
    for args in [
        &["mul", "--expr", "Q[1]"][..],
        &["mul", "--expr", "M[1,"],
        &["mul", "--expr", "M[0]"],
        &["mul", "--expr", "p[2]"],
        &["mul", "--expr", "1/2*M[1]"],
        &["pair", "--expr", "M[1]", "--on", "m[1]"],
        &["verify", "--suite", "nope"],
        &["rootofunity", "--ell", "1"],
        &["frobnicate"],
        &["mul"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn rational_mode() {
    let v = ok_json(&["--rational", "convert", "--expr", "m[2]", "--basis", "p"]);
    assert_eq!(v, element("Sym", "p", &[(&[2], "1")]));
    let v = ok_json(&["mul", "--rational", "--expr", "1/2*M[1] + 1/2*M[1]"]);
    assert_eq!(v, element("QSym", "M", &[(&[1], "1")]));
}

#[test]
fn human_view_goes_to_stderr() {
    let (code, out, err) = call(&["--human", "mul", "--expr", "M[1]*M[1] - M[2]"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<Value>(&out).is_ok());
    assert_eq!(err.trim(), "2·M[1,1]");
}
