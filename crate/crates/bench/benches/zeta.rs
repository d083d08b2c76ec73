use arczeta_core::jets::{count_jets, zeta_direct, GermSpec, Variant};
use arczeta_core::zeta::{dl_naive, x2_y4_datum};
use arczeta_core::LaurentPoly;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn germ(s: &str) -> GermSpec {
    s.parse().expect("valid germ")
}

fn direct(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta_direct");
    for g in ["x^3+y^5", "x^2+y^4+z^6", "x^2*y^3"] {
        let g = germ(g);
        group.bench_function(g.to_string(), |b| {
            b.iter(|| zeta_direct(black_box(&g), 64, Variant::Plus).unwrap())
        });
    }
    group.finish();
}

fn resolution(c: &mut Criterion) {
    let datum = x2_y4_datum();
    c.bench_function("dl_naive x^2+y^4", |b| b.iter(|| dl_naive(black_box(&datum), 64).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let g = germ("x^2+y^4");
    c.bench_function("count_jets x^2+y^4 n=4 q=7", |b| b.iter(|| count_jets(black_box(&g), 4, 7).unwrap()));
}

fn laurent(c: &mut Criterion) {
    let p: LaurentPoly = "u^7-3*u^4+2*u-1".parse().unwrap();
    let q = p.pow(6);
    c.bench_function("laurent mul", |b| b.iter(|| black_box(&q) * black_box(&p)));
}

criterion_group!(benches, direct, resolution, enumeration, laurent);
criterion_main!(benches);
