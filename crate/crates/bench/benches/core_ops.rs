use criterion::{criterion_group, criterion_main, Criterion};

use hypermaps::{
    closure_cover, covering_core, families, phi_construct, regular_hypermap_from_delta_relators,
    DeltaWord, EpimorphismSpec,
};

fn bench_coset_enumeration(c: &mut Criterion) {
    // (2,2,6) triangle-group quotient: (R1 R2)^2, (R2 R0)^2, (R0 R1)^6
    let relators: Vec<DeltaWord> = ["1212", "2020", "010101010101"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    c.bench_function("todd_coxeter_2_2_6", |b| {
        b.iter(|| regular_hypermap_from_delta_relators(&relators, 100_000).unwrap())
    });
}

fn bench_covering_core(c: &mut Criterion) {
    let k = families::k_klein();
    c.bench_function("covering_core_k", |b| {
        b.iter(|| covering_core(&k, 100_000).unwrap())
    });
}

fn bench_phi(c: &mut Criterion) {
    let pp = families::pp2k(8);
    let phi5 = EpimorphismSpec::phi(5);
    c.bench_function("phi5_pp16", |b| {
        b.iter(|| phi_construct(&pp, &phi5).unwrap())
    });
}

fn bench_closure_cover(c: &mut Criterion) {
    let h = families::random_hypermap(64, 7, false).unwrap();
    c.bench_function("closure_cover_random_64", |b| b.iter(|| closure_cover(&h)));
}

criterion_group!(
    benches,
    bench_coset_enumeration,
    bench_covering_core,
    bench_phi,
    bench_closure_cover
);
criterion_main!(benches);
