use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use creator_game::{
    best_response, creator_utility, make_delta_grid_population, population_shares, run_sweep, stackelberg_solve,
    AlgorithmWeights, CreatorParams, GameTable, Population, ResponseRule, Scenario, SweepAxis, SweepParam, SweepSpec,
    UtilityModel, WeightDomain,
};

fn utility(c: &mut Criterion) {
    let table = GameTable::illustrative();
    let weights = AlgorithmWeights::new(1.0, 2.0, 1.5).unwrap();
    let linear = CreatorParams::linear(1.0).unwrap();
    let nonlinear = CreatorParams::new(1.0, UtilityModel::Nonlinear).unwrap();

    c.bench_function("creator_utility/linear", |b| {
        b.iter(|| creator_utility(black_box(&weights), black_box(&linear), black_box(&table.beefing)))
    });
    c.bench_function("creator_utility/nonlinear", |b| {
        b.iter(|| creator_utility(black_box(&weights), black_box(&nonlinear), black_box(&table.beefing)))
    });
    c.bench_function("best_response", |b| {
        b.iter(|| best_response(black_box(&weights), black_box(&linear), black_box(&table)))
    });
}

fn shares(c: &mut Criterion) {
    let table = GameTable::illustrative();
    let weights = AlgorithmWeights::new(2.5, 0.5, 2.0).unwrap();
    let pop = make_delta_grid_population(0.0, 5.0, 1001, UtilityModel::Linear).unwrap();
    let quantal = ResponseRule::quantal(2.0).unwrap();
    c.bench_function("population_shares/exact/1001", |b| {
        b.iter(|| population_shares(black_box(&pop), &ResponseRule::Exact, &weights, &table))
    });
    c.bench_function("population_shares/quantal/1001", |b| {
        b.iter(|| population_shares(black_box(&pop), &quantal, &weights, &table))
    });
}

fn solve(c: &mut Criterion) {
    let table = GameTable::illustrative();
    let single = Population::single(CreatorParams::linear(2.5).unwrap());
    let mut group = c.benchmark_group("stackelberg_solve/single");
    for n in [10usize, 50, 100] {
        let domain = WeightDomain::simplex(1.0, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &domain, |b, d| {
            b.iter(|| stackelberg_solve(d, &single, &ResponseRule::Exact, &table))
        });
    }
    group.finish();

    let pop = make_delta_grid_population(0.0, 5.0, 101, UtilityModel::Linear).unwrap();
    let domain = WeightDomain::simplex(1.0, 50).unwrap();
    c.bench_function("stackelberg_solve/pop101/n50", |b| {
        b.iter(|| stackelberg_solve(&domain, &pop, &ResponseRule::Exact, &table))
    });
}

fn sweep(c: &mut Criterion) {
    let fixed = Scenario {
        weights: AlgorithmWeights::new(2.5, 0.5, 2.0).unwrap(),
        creator: CreatorParams::linear(1.0).unwrap(),
        table: GameTable::illustrative(),
        rule: ResponseRule::Exact,
    };
    let spec = SweepSpec::new(
        SweepAxis::new(SweepParam::Alpha, 0.0, 3.0, 100).unwrap(),
        Some(SweepAxis::new(SweepParam::Delta, 0.0, 5.0, 100).unwrap()),
        fixed,
    )
    .unwrap();
    c.bench_function("run_sweep/100x100", |b| b.iter(|| run_sweep(black_box(&spec))));
}

criterion_group!(benches, utility, shares, solve, sweep);
criterion_main!(benches);
