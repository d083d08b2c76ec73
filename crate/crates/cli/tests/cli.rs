use std::fs;
use std::path::PathBuf;
use std::process::Command;

use arczeta_cli::run;
use arczeta_core::jets::{zeta_direct, GermSpec, Variant};
use arczeta_core::ring::ZetaSeries;
use proptest::prelude::*;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("arczeta").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn cube_to_order_nine() {
    let (code, out, err) = run_args(&["zeta-germ", "--germ", "x^3", "--order", "9"]);
    assert_eq!((code, err.as_str()), (0, ""));
    assert_eq!(out, "(u-1)*u^-1*T^3 + (u-1)*u^-2*T^6 + (u-1)*u^-3*T^9\n");
}

#[test]
fn binary_matches_library() {
    let o = Command::new(env!("CARGO_BIN_EXE_arczeta"))
        .args(["zeta-germ", "--germ", "x^3", "--order", "9"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap(), run_args(&["zeta-germ", "--germ", "x^3", "--order", "9"]).1);
    let o = Command::new(env!("CARGO_BIN_EXE_arczeta"))
        .args(["zeta-germ", "--germ", "x^3-y^3+z^3", "--order", "9"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let (code, _, _) = run_args(&["zeta-germ", "--germ", "x^2*y^5*z^0", "--order", "3"]);
    assert_eq!(code, 0);
    let (code, out, err) = run_args(&["zeta-germ", "--germ", "x^3-y^3+z^3", "--order", "9"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("unsupported: indefinite three-way tie"), "{err}");
    assert_eq!(run_args(&["zeta-germ", "--germ", "x^2+w^3"]).0, 1);
    assert_eq!(run_args(&["zeta-res", "--datum", "/nonexistent/datum.json"]).0, 1);
    assert_eq!(run_args(&["frobnicate"]).0, 1);
    assert_eq!(run_args(&["oracle", "--germ", "x^2+y^2+z^2", "--n", "5", "--q", "7"]).0, 2);
}

#[test]
fn classify_open_case() {
    let (code, out, _) = run_args(&["classify", "--germ", "x^3+y^6", "--order", "24", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["q"], 6);
    assert_eq!(v["status"], "open_case");
}

#[test]
fn classify_from_series_files() {
    let g: GermSpec = "x^4-y^6".parse().unwrap();
    let mut paths = Vec::new();
    for (i, v) in [Variant::Naive, Variant::Plus, Variant::Minus].into_iter().enumerate() {
        let z = zeta_direct(&g, 30, v).unwrap();
        let p = scratch(&format!("x4-y6-{i}.txt"));
        // Text form for the naive series, JSON for the sign series.
        let body = if i == 0 { z.to_string() } else { serde_json::to_string(&z).unwrap() };
        fs::write(&p, body).unwrap();
        paths.push(p.to_string_lossy().into_owned());
    }
    let mut args = vec!["classify", "--order", "30", "--series-file"];
    args.extend(paths.iter().map(String::as_str));
    let (code, out, err) = run_args(&args);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("p = 4, q = 6, eps_p = plus, eps_q = minus, status = determined"), "{out}");
    let (_, direct, _) = run_args(&["classify", "--germ", "x^4-y^6", "--order", "30"]);
    assert_eq!(out, direct);
}

#[test]
fn json_output_round_trips() {
    let (code, out, _) = run_args(&["zeta-germ", "--germ", "x^2+y^4", "--order", "16", "--sign", "plus", "--format", "json"]);
    assert_eq!(code, 0);
    let z: ZetaSeries = serde_json::from_str(&out).unwrap();
    assert_eq!(z.order(), 16);
    let mut again = serde_json::to_string_pretty(&z).unwrap();
    again.push('\n');
    assert_eq!(again, out);
}

#[test]
fn out_flag_writes_file() {
    let p = scratch("x3.txt");
    let (code, out, _) = run_args(&["zeta-germ", "--germ", "x^3", "--order", "6", "--out", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(fs::read_to_string(&p).unwrap(), "(u-1)*u^-1*T^3 + (u-1)*u^-2*T^6\n");
}

#[test]
fn resolution_datum_agrees_with_direct() {
    let p = scratch("x2y4.json");
    fs::write(&p, arczeta_core::zeta::x2_y4_datum().to_json()).unwrap();
    for sign in ["naive", "plus"] {
        let (c1, res, _) = run_args(&["zeta-res", "--datum", p.to_str().unwrap(), "--order", "24", "--sign", sign]);
        let (c2, direct, _) = run_args(&["zeta-germ", "--germ", "x^2+y^4", "--order", "24", "--sign", sign]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(res, direct, "{sign}");
    }
}

#[test]
fn beta_script() {
    let p = scratch("script.json");
    fs::write(
        &p,
        r#"{"defs": [
            {"name": "A", "expr": {"atom": {"affine": 2}}},
            {"name": "C1", "blowup": {
                "C": {"atom": {"points": 1}},
                "E": {"atom": {"points": 2}},
                "Bl": {"atom": {"sphere": 1}},
                "solve_for": "X"}}
        ]}"#,
    )
    .unwrap();
    let (code, out, err) = run_args(&["beta", "--script", p.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "A = u^2\nC1 = u\n");
    fs::write(&p, r#"{"defs": [{"name": "A", "expr": {"ref": "B"}}]}"#).unwrap();
    assert_eq!(run_args(&["beta", "--script", p.to_str().unwrap()]).0, 1);
}

#[test]
fn ts_matches_direct_sum() {
    let (code, out, _) = run_args(&["ts", "--left", "x^2", "--right", "x^4", "--order", "20"]);
    assert_eq!(code, 0);
    let (_, direct, _) = run_args(&["zeta-germ", "--germ", "x^2+y^4", "--order", "20"]);
    let mut lines = out.lines();
    assert_eq!(format!("{}\n", lines.next().unwrap()), direct);
    assert!(lines.next().unwrap().starts_with("# assumption:"));
}

#[test]
fn oracle_subcommand() {
    let (code, out, _) = run_args(&["oracle", "--germ", "x^2*y", "--n", "3", "--q", "3,5,7"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches("PASS").count(), 3);
    // x^2 + y^4 has extra F_5 points since -1 is a square mod 5.
    let (code, out, _) = run_args(&["oracle", "--germ", "x^2+y^4", "--n", "4", "--q", "3,5"]);
    assert_eq!(code, 3);
    assert!(out.contains("q = 3: count 1944 beta(q) 1944 PASS"), "{out}");
    assert!(out.contains("FAIL"));
}

#[test]
fn compare_subcommand() {
    let (code, out, _) = run_args(&["compare", "--left", "x^2+y^2+z^2", "--right", "x^2+y^4+z^4", "--order", "12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("distinguished by the naive zeta function at T^2"), "{out}");
    let (_, out, _) = run_args(&["compare", "--left", "x^3+y^4", "--right", "x^3-y^4", "--order", "12", "--naive-only"]);
    assert!(out.starts_with("not distinguished up to order 12"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--germ", "x^2-y^4", "--order", "20", "--format", "json"];
    assert_eq!(run_args(&args), run_args(&args));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lower_order_is_a_prefix(p in 1u32..6, q in 1u32..6, minus in any::<bool>(), m in 1u32..20, extra in 0u32..12) {
        let germ = format!("x^{p}{}y^{q}", if minus { "-" } else { "+" });
        for sign in ["naive", "plus", "minus"] {
            let lo = run_args(&["zeta-germ", "--germ", &germ, "--order", &m.to_string(), "--sign", sign, "--format", "json"]);
            let hi = run_args(&["zeta-germ", "--germ", &germ, "--order", &(m + extra).to_string(), "--sign", sign, "--format", "json"]);
            prop_assert_eq!((lo.0, hi.0), (0, 0));
            let lo: ZetaSeries = serde_json::from_str(&lo.1).unwrap();
            let hi: ZetaSeries = serde_json::from_str(&hi.1).unwrap();
            prop_assert_eq!(hi.truncate(m), lo);
        }
    }
}
