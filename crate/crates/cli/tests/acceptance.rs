//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p noether-cli --test acceptance -- --nocapture` to see
//! the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use noether_core::galois::bailey_group;
use noether_core::groups::{
    abelian_invariants, build_group, catalog_names, is_generalized_quaternion16, two_sylow, whole,
};
use noether_core::oracle::{check_hilbert_reciprocity, check_isotropy_grid, check_three_squares};
use noether_core::quadforms::{isotropic_quad, level, three_squares_nat, Level};
use noether_core::{
    verdict, Criterion, DiagonalForm, FieldDescriptor, GroupSpec, IsotropyOutcome, Outcome, Witness,
};
use num_bigint::BigInt;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(s: &str) -> FieldDescriptor {
    s.parse().unwrap()
}

fn timed_verdict(group: &str, k: &str, limit: Duration) -> Result<noether_core::Verdict, String> {
    let start = Instant::now();
    let v = verdict(&group.parse().unwrap(), &field(k)).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(v)
}

fn c8_over_q() -> Check {
    let v = timed_verdict("catalog:C8", "Q", Duration::from_secs(1))?;
    let want = Outcome::NotRetractRational {
        criterion: Criterion::CyclicTwoPowerQuotient,
        witness: Witness::CyclicQuotient { n: 3, d1: 3 },
    };
    ensure(v.outcome == want, || format!("got {:?}", v.outcome))
}

fn sl2_7_over_q_sqrt_17() -> Check {
    let v = timed_verdict("catalog:SL2_7", "Q(sqrt 17)", Duration::from_secs(5))?;
    ensure(v.criterion() == Some(Criterion::QuaternionSylow), || format!("got {:?}", v.outcome))?;
    ensure(v.order == 336 && v.sylow2_order == 16, || format!("order {} sylow {}", v.order, v.sylow2_order))
}

fn remarks_inconclusive() -> Check {
    for (g, k, needle) in [
        ("catalog:C8", "Q(sqrt 2)", "cyclotomic extension cyclic"),
        ("catalog:Q16", "Q(sqrt -7)", "8⟨1⟩ isotropic"),
    ] {
        let v = verdict(&g.parse().unwrap(), &field(k)).map_err(|e| e.to_string())?;
        ensure(!v.is_decided(), || format!("{g} over {k} decided"))?;
        ensure(v.reasons().iter().any(|r| r.contains(needle)), || {
            format!("{g} over {k}: reasons {:?}", v.reasons())
        })?;
    }
    Ok(())
}

fn bailey_cases() -> Check {
    let e1 = bailey_group(&field("Q"), &[3, 2, 1]).map_err(|e| e.to_string())?;
    let e0 = bailey_group(&field("Q(sqrt 2)"), &[3]).map_err(|e| e.to_string())?;
    ensure(e1.e == 1 && e0.e == 0, || format!("got {e1} and {e0}"))
}

fn lemma_form_over_quadratic_fields() -> Check {
    let f = DiagonalForm::from_ints(&[1, 1, 1, -7]).unwrap();
    let decide = |d: i64| isotropic_quad(&f, &BigInt::from(d)).map_err(|e| e.to_string());
    ensure(decide(2)? == IsotropyOutcome::Isotropic, || "d = 2 not isotropic".into())?;
    let mut tested = vec![];
    for m in 2..=12i64 {
        let d = 1 + 8 * m;
        let squarefree = FieldDescriptor::quadratic(d).is_ok_and(|k| k.radicand() == Some(&BigInt::from(d)));
        if !squarefree {
            continue;
        }
        ensure(decide(d)? == IsotropyOutcome::Anisotropic, || format!("d = {d} not anisotropic"))?;
        tested.push(d);
    }
    ensure(tested.contains(&17), || format!("tested {tested:?}"))
}

fn three_squares_exhaustive() -> Check {
    let s = check_three_squares(10_000).map_err(|e| e.to_string())?;
    ensure(s.passed() && s.checked == 10_000, || format!("mismatches {:?}", s.mismatches))?;
    for n in 1..=10_000u64 {
        let mut m = n;
        while m % 4 == 0 {
            m /= 4;
        }
        let excluded = m % 8 == 7;
        let got = three_squares_nat(&BigInt::from(n)).map_err(|e| e.to_string())?;
        ensure(got != excluded, || format!("n = {n}"))?;
    }
    Ok(())
}

fn hilbert_reciprocity() -> Check {
    let s = check_hilbert_reciprocity(1000, 0x5eed).map_err(|e| e.to_string())?;
    ensure(s.passed() && s.checked == 1000, || format!("failures {:?}", s.mismatches))
}

fn isotropy_grid() -> Check {
    let s = check_isotropy_grid(60).map_err(|e| e.to_string())?;
    ensure(s.passed() && s.checked == 1000, || format!("mismatches {:?}", s.mismatches))
}

fn group_suite() -> Check {
    let mut q16_found = Vec::new();
    for name in catalog_names() {
        let g = build_group(&GroupSpec::catalog(&name).unwrap()).map_err(|e| e.to_string())?;
        let p = two_sylow(&g);
        let two_part = 1usize << g.order().trailing_zeros();
        ensure(p.order() == two_part, || format!("{name}: sylow {} vs {two_part}", p.order()))?;
        if p.order() == 16 && is_generalized_quaternion16(&p) {
            q16_found.push(name.clone());
        }
        if name == "D16" || name == "SD16" {
            ensure(!is_generalized_quaternion16(&whole(&g)), || format!("{name} recognised as Q16"))?;
        }
    }
    ensure(q16_found == ["Q16", "SL2_7", "SL2_9"], || format!("Q16 recognised for {q16_found:?}"))?;
    let q16 = build_group(&GroupSpec::catalog("Q16").unwrap()).unwrap();
    ensure(abelian_invariants(&q16) == [2, 2], || format!("{:?}", abelian_invariants(&q16)))
}

fn levels_of_imaginary_fields() -> Check {
    let mut count = 0;
    let mut d = 1i64;
    while count < 30 {
        if let Ok(k) = FieldDescriptor::quadratic(-d) {
            if k.radicand() == Some(&BigInt::from(-d)) {
                let s = level(&k);
                ensure(matches!(s, Level::One | Level::Two | Level::Four), || format!("d = {d}: {s:?}"))?;
                let four = (-d).rem_euclid(8) == 1;
                ensure((s == Level::Four) == four, || format!("d = {d}: {s:?}"))?;
                count += 1;
            }
        }
        d += 1;
    }
    Ok(())
}

const CLI_CASES: [(&str, &str); 8] = [
    ("catalog:C8", "Q"),
    ("catalog:SL2_7", "Q(sqrt 17)"),
    ("catalog:C8", "Q(sqrt 2)"),
    ("catalog:Q16", "Q(sqrt -7)"),
    ("catalog:S4", "Q"),
    ("perm:(1 2 3 4 5 6 7 8)", "Q(sqrt -1)"),
    ("metacyclic:a=8,b=2,c=4,r=7", "Q(sqrt 41)"),
    ("catalog:Ex3_3", "Q(sqrt 2)"),
];

fn cli_json_batch() -> Result<Vec<String>, String> {
    CLI_CASES
        .iter()
        .map(|(g, k)| {
            let out = Command::new(env!("CARGO_BIN_EXE_noether"))
                .args(["check", "--group", g, "--field", k, "--json"])
                .output()
                .map_err(|e| e.to_string())?;
            String::from_utf8(out.stdout).map_err(|e| e.to_string())
        })
        .collect()
}

fn determinism() -> Check {
    let first = cli_json_batch()?;
    let second = cli_json_batch()?;
    ensure(first.iter().all(|s| s.starts_with('{')), || format!("bad output {first:?}"))?;
    ensure(first == second, || "reports differ between runs".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("verdict(C8, Q) fires criterion 1.2 with n = 3 in < 1 s", c8_over_q),
        ("verdict(SL2_7, Q(sqrt 17)) fires criterion 1.5 in < 5 s", sl2_7_over_q_sqrt_17),
        ("C8 over Q(sqrt 2) and Q16 over Q(sqrt -7) are inconclusive with the expected reasons", remarks_inconclusive),
        ("bailey_group(Q, (3,2,1)) = (Z/2)^1 and bailey_group(Q(sqrt 2), (3)) = trivial", bailey_cases),
        ("<1,1,1,-7> isotropic over Q(sqrt 2), anisotropic over Q(sqrt(1+8m)), m = 2..12", lemma_form_over_quadratic_fields),
        ("three_squares_nat agrees with exhaustive search for n <= 10^4", three_squares_exhaustive),
        ("Hilbert reciprocity on 1000 seeded pairs", hilbert_reciprocity),
        ("isotropic_q agrees with the height-60 search and local obstruction oracle", isotropy_grid),
        ("2-Sylow orders, Q16 recognition and abelian_invariants(Q16) = (2,2)", group_suite),
        ("level(Q(sqrt -d)) in {1,2,4}, = 4 iff -d = 1 mod 8, 30 fields", levels_of_imaginary_fields),
        ("two CLI runs give byte-identical JSON reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
