use std::process::{Command, Output};

use noether_core::Report;

fn noether(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noether")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check_json(group: &str, field: &str) -> (i32, String) {
    let o = noether(&["check", "--group", group, "--field", field, "--json"]);
    (o.status.code().unwrap(), stdout(&o))
}

fn no_floats(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => !n.is_f64(),
        serde_json::Value::Array(xs) => xs.iter().all(no_floats),
        serde_json::Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn decided_exits_zero() {
    let (code, out) = check_json("catalog:C8", "Q");
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.verdict, "not_retract_rational");
    assert_eq!(r.theorem.as_deref(), Some("1.2"));

    let (code, out) = check_json("catalog:SL2_7", "Q(sqrt 17)");
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.theorem.as_deref(), Some("1.5"));
}

#[test]
fn inconclusive_exits_two() {
    let (code, out) = check_json("catalog:C8", "Q(sqrt 2)");
    assert_eq!(code, 2);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.verdict, "inconclusive");
    assert_eq!(r.theorem, None);
}

#[test]
fn errors_exit_one() {
    for args in [
        ["check", "--group", "catalog:M11", "--field", "Q"],
        ["check", "--group", "catalog:C8", "--field", "Q(sqrt 4)"],
        ["check", "--group", "metacyclic:a=8,b=2,c=3,r=7", "--field", "Q"],
        ["check", "--group", "perm:(1 2);(1 2 3 4 5 6 7 8 9 10)", "--field", "Q"],
        ["check", "--group", "perm:(1 2", "--field", "Q"],
    ] {
        let o = noether(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(noether(&["oracle", "hilbert", "100000"]).status.code(), Some(1));
    assert_ne!(noether(&["oracle", "quartic", "10"]).status.code(), Some(0));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for (g, k) in [
        ("catalog:C8", "Q"),
        ("catalog:Q16", "Q(sqrt -7)"),
        ("catalog:SL2_7", "Q(sqrt 17)"),
        ("perm:(1 2);(1 2 3 4)", "Q(sqrt 5)"),
    ] {
        let (_, out) = check_json(g, k);
        let line = out.trim_end();
        assert_eq!(out.lines().count(), 1);
        let r: Report = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), line);
        assert!(no_floats(&serde_json::from_str(line).unwrap()));
    }
}

#[test]
fn json_key_order() {
    let (_, out) = check_json("catalog:C8", "Q");
    let keys = ["\"group\"", "\"field\"", "\"verdict\"", "\"theorem\"", "\"witness\"", "\"checks\"", "\"bailey_e\""];
    let positions: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["witness"], serde_json::json!({"n": 3, "d1": 3}));
    assert_eq!(v["group"]["spec"], "catalog:C8");
}

#[test]
fn field_strings_are_canonical() {
    let (_, out) = check_json("catalog:C8", "Q( sqrt(8) )");
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.field, "Q(sqrt 2)");
}

#[test]
fn every_check_has_a_detail() {
    let (_, out) = check_json("catalog:Q16", "Q(sqrt -7)");
    let r: Report = serde_json::from_str(&out).unwrap();
    assert!(r.checks.iter().all(|c| !c.detail.is_empty()));
}

#[test]
fn text_output() {
    let o = noether(&["check", "--group", "catalog:Q16", "--field", "Q(sqrt -7)"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("verdict   inconclusive"));
    assert!(out.contains("8⟨1⟩ isotropic"));
}

#[test]
fn catalog_listing() {
    let o = noether(&["catalog"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for line in [
        "Q16: order 16, sylow2 = itself, Q16 = yes",
        "SL2_7: order 336, sylow2 order 16, Q16 = yes",
        "S4: order 24, sylow2 order 8, Q16 = no",
        "SL2_9: order 720, sylow2 order 16, Q16 = yes",
        "D16: order 16, sylow2 = itself, Q16 = no",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line:?}");
    }
    assert_eq!(out.lines().count(), 72);
    assert_eq!(out, stdout(&noether(&["catalog"])));
}

#[test]
fn oracle_commands() {
    let o = noether(&["oracle", "three-squares", "10000"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "10000/10000 agree");

    let o = noether(&["oracle", "hilbert", "1000"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "reciprocity holds on 1000 samples");

    let o = noether(&["oracle", "isotropy", "60"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("all dim ≤ 4 sample forms agree"));
}
