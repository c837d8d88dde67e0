use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use deformap::prototwilled::deformation_cohomology;
use deformap::zoo::{enumerate_deformation_maps, DEFAULT_BUDGET};
use deformap::{balavoine_bracket, Field, MultiMap};
use deformap_bench::{dense_square_map, fixture_over};
use std::hint::black_box;

fn bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("balavoine_bracket");
    let f5 = Field::Prime(5);
    for (dim, m, n) in [(2, 2, 2), (3, 2, 2), (3, 3, 2), (3, 3, 3)] {
        let f = dense_square_map(f5, dim, m);
        let g = dense_square_map(f5, dim, n);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("dim{dim}-arity{m}x{n}")),
            &(f, g),
            |b, (f, g)| b.iter(|| balavoine_bracket(black_box(f), black_box(g)).unwrap()),
        );
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let mut group = c.benchmark_group("deformation_cohomology");
    for name in ["general-eta", "dim1-dim2-crossed-hom-host"] {
        let fx = fixture_over(name, 5);
        let s = fx.structure;
        let r = MultiMap::zeros(s.field(), &[s.space().dim_h()], s.space().dim_g()).unwrap();
        let r = if deformap::prototwilled::is_deformation_map(&s, &r)
            .unwrap()
            .is_deformation_map
        {
            r
        } else {
            enumerate_deformation_maps(&s, DEFAULT_BUDGET)
                .unwrap()
                .remove(0)
        };
        for max in [2usize, 3] {
            group.bench_function(BenchmarkId::new(name, max), |b| {
                b.iter(|| deformation_cohomology(black_box(&s), black_box(&r), max).unwrap())
            });
        }
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_deformation_maps");
    group.sample_size(10);
    for (name, p) in [
        ("general-eta", 5),
        ("dim2-dim2-direct", 5),
        ("dim2-dim2-direct", 7),
    ] {
        let s = fixture_over(name, p).structure;
        group.bench_function(BenchmarkId::new(name, format!("F{p}")), |b| {
            b.iter(|| enumerate_deformation_maps(black_box(&s), DEFAULT_BUDGET).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bracket, cohomology, enumeration);
criterion_main!(benches);
