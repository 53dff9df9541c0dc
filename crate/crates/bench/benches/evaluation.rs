use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use wreathforge_bench::{radford, smash_c4};
use wreathforge_core::catalog::Suite;
use wreathforge_core::check::{report, run_suite};
use wreathforge_core::{build_product, classify};

// `with_cap` hands back a copy with an empty derived-generator cache, so
// each iteration pays for derivation too.
fn suites(c: &mut Criterion) {
    let m = smash_c4();
    c.bench_function("smash_c4 all suites over F7", |b| {
        b.iter(|| report(black_box(&Suite::ALL), &m.with_cap(m.cap())))
    });
    c.bench_function("smash_c4 product suite over F7", |b| {
        b.iter(|| run_suite(Suite::TauBimonadFb, &m.with_cap(m.cap())))
    });
}

fn rationals(c: &mut Criterion) {
    let m = radford();
    c.bench_function("radford_h4 build product over Q", |b| {
        b.iter(|| build_product(black_box(&m)))
    });
    c.bench_function("radford_h4 classify over Q", |b| {
        b.iter(|| classify(&m.with_cap(m.cap())))
    });
}

criterion_group!(benches, suites, rationals);
criterion_main!(benches);
