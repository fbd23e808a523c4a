use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fpp_core::cover::{p2_quotient_analysis, MonomialAction};
use fpp_core::exact::{int, smith_normal_form, IntMatrix};
use fpp_core::fibration::{enumerate_configurations, Multisection};
use fpp_core::lefschetz::{a_coefficients, solve_fixed_points, LefschetzProblem};
use fpp_core::singularity::{discrepancy, hj_resolve};
use fpp_core::{CyclicQuotientSingularity, ExceptionalChain};

fn singularities(c: &mut Criterion) {
    c.bench_function("hj_resolve n<=200", |b| {
        b.iter(|| {
            for n in 2u64..=200 {
                for q in 1..n {
                    if let Ok(s) = CyclicQuotientSingularity::new(n, q) {
                        black_box(hj_resolve(&s).abs_determinant());
                    }
                }
            }
        })
    });
    let chain = CyclicQuotientSingularity::new(97, 40).unwrap().resolve();
    c.bench_function("discrepancy 1/97(1,40)", |b| {
        b.iter(|| discrepancy(black_box(&chain)))
    });
}

fn exact(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..8)
        .map(|i| (0..8).map(|j| ((i * 7 + j * 3) % 11) - 5).collect())
        .collect();
    let m = IntMatrix::from_rows(&rows);
    c.bench_function("smith 8x8", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn lefschetz(c: &mut Criterion) {
    c.bench_function("a_coefficients p=31", |b| {
        b.iter(|| a_coefficients(black_box(31)).unwrap())
    });
    let problem = LefschetzProblem::new(7, int(1), 3);
    c.bench_function("solve p=7 total=3", |b| {
        b.iter(|| solve_fixed_points(black_box(&problem)).unwrap())
    });
}

fn fibrations(c: &mut Criterion) {
    let chains = vec![ExceptionalChain::a_chain(2); 4];
    let ms = Multisection {
        degree: 6,
        self_square: -3,
    };
    c.bench_function("fibres 12/8 4xA2", |b| {
        b.iter(|| enumerate_configurations(12, 8, black_box(&chains), Some(ms)).unwrap())
    });
    let action: MonomialAction = "diag(0,1,2)+cycle".parse().unwrap();
    c.bench_function("plane quotient order 9", |b| {
        b.iter(|| p2_quotient_analysis(black_box(&action)).unwrap())
    });
}

criterion_group!(benches, singularities, exact, lefschetz, fibrations);
criterion_main!(benches);
