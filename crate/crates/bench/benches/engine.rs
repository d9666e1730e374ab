use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hpi_bench::{groups, pairs_of_weight};
use hpi_core::branching::{product_hpi_expansion, ProductRoute};
use hpi_core::series::{cut_coproduct_kernel, m_pi, series_inverse};
use hpi_core::symfunc::{lr_product, plethysm, plethysm_coproduct, PlethysmCoproductRoute};
use hpi_core::{Partition, SchurExpansion, TableId};

fn symfunc(c: &mut Criterion) {
    let mut g = c.benchmark_group("symfunc");
    let pairs = pairs_of_weight(8);
    g.bench_function("lr_product weight 8", |b| {
        b.iter(|| {
            for (mu, nu) in &pairs {
                black_box(lr_product(mu, nu));
            }
        })
    });
    // plethysm results are memoized, so this measures the warm path after the first pass
    let base = SchurExpansion::basis(Partition::of(&[2, 1]));
    let exp = SchurExpansion::basis(Partition::of(&[3]));
    g.bench_function("plethysm {21}x{3}", |b| b.iter(|| black_box(plethysm(&base, &exp))));
    let one = SchurExpansion::basis(Partition::of(&[1, 1]));
    let two = SchurExpansion::basis(Partition::of(&[2, 1]));
    for route in [PlethysmCoproductRoute::Direct, PlethysmCoproductRoute::Factored] {
        g.bench_with_input(BenchmarkId::new("plethysm_coproduct", format!("{route:?}")), &route, |b, &r| {
            b.iter(|| black_box(plethysm_coproduct(&one, &two, r)))
        });
    }
    g.finish();
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for pi in groups() {
        let m = m_pi(&pi, 10);
        g.bench_with_input(BenchmarkId::new("inverse d=10", pi.label()), &m, |b, m| {
            b.iter(|| black_box(series_inverse(m).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("kernel d=8", pi.label()), &pi, |b, pi| {
            b.iter(|| black_box(cut_coproduct_kernel(pi, 8)))
        });
    }
    g.finish();
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("product_hpi");
    g.sample_size(20);
    let pairs = pairs_of_weight(6);
    for pi in groups() {
        for route in [ProductRoute::LiftMultiplyBranch, ProductRoute::Kernel] {
            g.bench_function(BenchmarkId::new(format!("{route:?}"), pi.label()), |b| {
                b.iter(|| {
                    for (mu, nu) in &pairs {
                        black_box(product_hpi_expansion(mu, nu, &pi, route));
                    }
                })
            });
        }
    }
    g.finish();
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("tables");
    for id in TableId::ALL {
        g.bench_function(id.name(), |b| b.iter(|| black_box(id.render(usize::MAX))));
    }
    g.finish();
}

criterion_group!(benches, symfunc, series, products, tables);
criterion_main!(benches);
