// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "vibronic/gaussian.hpp"
#include "vibronic/hafnian.hpp"
#include "vibronic/marginals.hpp"
#include "vibronic/pursuit.hpp"

namespace {

using namespace vibronic;

Matrix random_symmetric(int dim, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            m(r, c) = u(rng);
            m(c, r) = m(r, c);
        }
    }
    return m;
}

ResidueChain random_residue(int n_modes, int cutoff, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ResidueChain r;
    r.n_modes = n_modes;
    r.cutoff = cutoff;
    for (int m = 0; m + 1 < n_modes; ++m) {
        Matrix t(cutoff, cutoff);
        for (int a = 0; a < cutoff; ++a) {
            for (int b = 0; b < cutoff; ++b) t(a, b) = u(rng);
        }
        r.tables.push_back(std::move(t));
    }
    return r;
}

VibronicTransition chain_transition(int n) {
    VibronicTransition t;
    t.n_modes = n;
    t.omega_initial = Vector::Constant(n, 1000.0);
    t.omega_final = Vector::Constant(n, 1100.0);
    t.displacement = Vector::Constant(n, 0.3);
    Matrix u = Matrix::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        Matrix g = Matrix::Identity(n, n);
        const double c = std::cos(0.07), s = std::sin(0.07);
        g(i, i) = c;
        g(i, i + 1) = -s;
        g(i + 1, i) = s;
        g(i + 1, i + 1) = c;
        u = g * u;
    }
    t.duschinsky = u;
    return t;
}

void BM_LoopHafnian(benchmark::State& state) {
    std::mt19937 rng(1);
    const Matrix m = random_symmetric(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(loop_hafnian(m));
    }
}
BENCHMARK(BM_LoopHafnian)->DenseRange(4, 12, 2)->Arg(16)->Arg(20);

void BM_PairPatternProbability(benchmark::State& state) {
    const GaussianState s = evolve_vacuum(build_doktorov(chain_transition(2)));
    const PatternProbabilityContext ctx = build_context(s);
    const PhotonPattern pattern{3, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pattern_probability(ctx, pattern));
    }
}
BENCHMARK(BM_PairPatternProbability);

void BM_ScanPairs(benchmark::State& state) {
    const GaussianState s =
        evolve_vacuum(build_doktorov(chain_transition(static_cast<int>(state.range(0)))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_pairs(s, 4));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanPairs)->RangeMultiplier(2)->Range(4, 32)->Complexity(benchmark::oN);

// one pursuit iteration: support detection plus residue update
void BM_PursuitIteration(benchmark::State& state) {
    std::mt19937 rng(2);
    ResidueChain r = random_residue(static_cast<int>(state.range(0)), 4, rng);
    for (auto _ : state) {
        const PhotonPattern pick = chain_argmax(r);
        subtract_column(r, pick, 1e-9);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PursuitIteration)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oN);

void BM_FullReconstruction26(benchmark::State& state) {
    const VibronicTransition t = chain_transition(26);
    for (auto _ : state) {
        const GaussianState s = evolve_vacuum(build_doktorov(t));
        const PairMarginalSet y = scan_pairs(s, 4);
        benchmark::DoNotOptimize(ptmp(y, 0.01));
    }
}
BENCHMARK(BM_FullReconstruction26)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
