use criterion::{black_box, criterion_group, criterion_main, Criterion};

use kh_tripos::power::{equality_predicate, PowerObject};
use kh_tripos::topology::{product, ContMap, FinSpace, Space};
use kh_tripos::tripos::{
    beck_chevalley_square, check_adjoint_chain, check_beck_chevalley, ClopenQuantifiers,
};

fn discrete(n: usize) -> Space {
    FinSpace::discrete(format!("D{n}"), (0..n).map(|i| format!("p{i}")).collect()).unwrap()
}

fn adjoint_chain(c: &mut Criterion) {
    let a = discrete(3);
    let b = discrete(3);
    let maps: Vec<ContMap> = ContMap::all_maps(&a, &b).collect();
    c.bench_function("adjoint_chain_3x3_all_maps", |bench| {
        bench.iter(|| {
            for f in &maps {
                black_box(check_adjoint_chain(f, &ClopenQuantifiers).unwrap());
            }
        })
    });
}

fn beck_chevalley(c: &mut Criterion) {
    let x = discrete(3);
    let k = ContMap::new("k", discrete(3), discrete(2), vec![0, 1, 1]).unwrap();
    let sq = beck_chevalley_square(&x, &k).unwrap();
    c.bench_function("beck_chevalley_3_3_2", |bench| {
        bench.iter(|| black_box(check_beck_chevalley(&sq, &ClopenQuantifiers).unwrap()))
    });
}

fn power_objects(c: &mut Criterion) {
    let mut group = c.benchmark_group("power_object");
    for n in [2usize, 3, 4] {
        let a = discrete(n);
        group.bench_function(format!("build_{n}"), |bench| {
            bench.iter(|| black_box(PowerObject::new(&a).unwrap()))
        });
        group.bench_function(format!("delta_{n}"), |bench| {
            bench.iter(|| black_box(equality_predicate(&a).unwrap()))
        });
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let s = FinSpace::sierpinski();
    let sq = product(&s, &s).unwrap().space;
    c.bench_function("product_non_discrete", |bench| {
        bench.iter(|| black_box(product(&sq, &s).unwrap()))
    });
}

criterion_group!(benches, adjoint_chain, beck_chevalley, power_objects, products);
criterion_main!(benches);
