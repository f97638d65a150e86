use criterion::{criterion_group, criterion_main, Criterion};
use seifert_bench::{random_matrix, sample_tuples};
use seifert_core::applications::census::{enumerate_census, CensusBounds};
use seifert_core::numtheory::smith_normal_form;
use seifert_core::{
    admits_horizontal_foliation, euler_class_vanishes, trefoil_ctf, vanishes_via_oracle,
    SurgerySlope,
};
use std::hint::black_box;

fn bench_snf(c: &mut Criterion) {
    let small = random_matrix(6, 6, 1);
    let large = random_matrix(12, 12, 2);
    c.bench_function("snf 6x6", |b| {
        b.iter(|| smith_normal_form(black_box(&small)))
    });
    c.bench_function("snf 12x12", |b| {
        b.iter(|| smith_normal_form(black_box(&large)))
    });
}

fn bench_decisions(c: &mut Criterion) {
    let tuples = sample_tuples();
    c.bench_function("euler_class_vanishes batch", |b| {
        b.iter(|| {
            for m in &tuples {
                black_box(euler_class_vanishes(black_box(m)));
            }
        })
    });
    c.bench_function("vanishes_via_oracle batch", |b| {
        b.iter(|| {
            for m in &tuples {
                black_box(vanishes_via_oracle(black_box(m)));
            }
        })
    });
    c.bench_function("admits_horizontal_foliation batch", |b| {
        b.iter(|| {
            for m in &tuples {
                black_box(admits_horizontal_foliation(black_box(m)));
            }
        })
    });
}

fn bench_census(c: &mut Criterion) {
    let bounds = CensusBounds {
        genus_max: 0,
        b_min: -2,
        b_max: 0,
        max_cone_points: 3,
        max_cone_order: 5,
    };
    c.bench_function("census small box", |b| {
        b.iter(|| enumerate_census(black_box(&bounds)).count())
    });
}

fn bench_trefoil(c: &mut Criterion) {
    c.bench_function("trefoil ctf row", |b| {
        b.iter(|| {
            for p in -20..=20i64 {
                for q in 1..=4i64 {
                    if let Ok(slope) = SurgerySlope::new(p, q) {
                        black_box(trefoil_ctf(slope));
                    }
                }
            }
        })
    });
}

criterion_group!(
    benches,
    bench_snf,
    bench_decisions,
    bench_census,
    bench_trefoil
);
criterion_main!(benches);
