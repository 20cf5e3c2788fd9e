use criterion::{black_box, criterion_group, criterion_main, Criterion};
use noether_bench::VERDICT_CASES;
use noether_core::groups::{abelian_invariants, build_group, two_sylow};
use noether_core::quadforms::isotropic_quad;
use noether_core::{verdict, DiagonalForm, FieldDescriptor, GroupSpec};

fn verdicts(c: &mut Criterion) {
    for (group, field) in VERDICT_CASES {
        let spec: GroupSpec = group.parse().unwrap();
        let k: FieldDescriptor = field.parse().unwrap();
        c.bench_function(&format!("verdict {group} over {field}"), |b| {
            b.iter(|| verdict(black_box(&spec), black_box(&k)).unwrap())
        });
    }
}

fn group_analyses(c: &mut Criterion) {
    let sl = build_group(&GroupSpec::catalog("SL2_7").unwrap()).unwrap();
    c.bench_function("two_sylow SL2_7", |b| b.iter(|| two_sylow(black_box(&sl)).order()));
    let ex = build_group(&GroupSpec::catalog("Ex3_3").unwrap()).unwrap();
    c.bench_function("abelian_invariants Ex3_3", |b| b.iter(|| abelian_invariants(black_box(&ex))));
}

fn isotropy(c: &mut Criterion) {
    let f = DiagonalForm::from_ints(&[1, 1, 1, -7]).unwrap();
    c.bench_function("isotropic_quad <1,1,1,-7> over Q(sqrt 17)", |b| {
        b.iter(|| isotropic_quad(black_box(&f), &17.into()).unwrap())
    });
}

criterion_group!(benches, verdicts, group_analyses, isotropy);
criterion_main!(benches);
