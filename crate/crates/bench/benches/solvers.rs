use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use tlsra_bench::{geometric, union_pairs};
use tlsra_core::{approx_2lsra_k, fast3_solve, DisjointSets, MergingOrder};

fn fast3(c: &mut Criterion) {
    let mut group = c.benchmark_group("fast3");
    group.sample_size(10);
    for e in [12u32, 14, 16] {
        let inst = geometric(1 << e, e as u64);
        group.throughput(Throughput::Elements((inst.s_min() + inst.s_max()) as u64));
        group.bench_with_input(BenchmarkId::from_parameter(1usize << e), &inst, |b, inst| {
            b.iter(|| fast3_solve(inst).unwrap().op_count)
        });
    }
    group.finish();
}

fn greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy");
    group.sample_size(10);
    let inst = geometric(1 << 10, 3);
    for k in [2usize, 3, 4] {
        group.bench_with_input(BenchmarkId::new("k", k), &k, |b, &k| {
            b.iter(|| approx_2lsra_k(&inst, k, &MergingOrder::Lexicographic).unwrap().size())
        });
    }
    group.finish();
}

fn union_find(c: &mut Criterion) {
    let n = 1 << 16;
    let pairs = union_pairs(n, n);
    c.bench_function("union_find/65536", |b| {
        b.iter(|| {
            let mut sets = DisjointSets::new(n);
            for &(a, b) in &pairs {
                sets.union(a, b);
            }
            sets.set_count()
        })
    });
}

criterion_group!(benches, fast3, greedy, union_find);
criterion_main!(benches);
