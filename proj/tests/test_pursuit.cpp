// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "support.hpp"
#include "vibronic/errors.hpp"
#include "vibronic/gaussian.hpp"
#include "vibronic/marginals.hpp"
#include "vibronic/oracles.hpp"
#include "vibronic/pursuit.hpp"

using namespace vibronic;
using test_support::random_residue;

namespace {

// y = A x for a handful of spikes: each spike adds its weight to one cell of
// every pair table.
PairMarginalSet measurement_of(int n_modes, int cutoff,
                               const std::vector<std::pair<PhotonPattern, double>>& spikes) {
    PairMarginalSet pm;
    pm.n_modes = n_modes;
    pm.cutoff = cutoff;
    pm.tables.assign(static_cast<std::size_t>(n_modes - 1), Matrix::Zero(cutoff, cutoff));
    for (const auto& [pattern, weight] : spikes) {
        for (int m = 0; m + 1 < n_modes; ++m) {
            pm.tables[static_cast<std::size_t>(m)](pattern[static_cast<std::size_t>(m)],
                                                   pattern[static_cast<std::size_t>(m + 1)]) +=
                weight;
        }
    }
    return pm;
}

}  // namespace

TEST_CASE("two-mode argmax picks the best cell") {
    ResidueChain r;
    r.n_modes = 2;
    r.cutoff = 3;
    Matrix t(3, 3);
    t << 0.1, 0.2, 0.3, 0.9, 0.0, 0.1, 0.4, 0.4, 0.0;
    r.tables = {t};
    CHECK(chain_argmax(r) == PhotonPattern{1, 0});
}

TEST_CASE("all-zero residue ties break to the all-zero pattern") {
    ResidueChain r;
    r.n_modes = 4;
    r.cutoff = 4;
    r.tables.assign(3, Matrix::Zero(4, 4));
    CHECK(chain_argmax(r) == PhotonPattern{0, 0, 0, 0});
}

TEST_CASE("ties resolve to the lexicographically smallest optimum") {
    // two optimal paths score 10: (0,1,0) and (1,0,0); the smaller wins
    ResidueChain r;
    r.n_modes = 3;
    r.cutoff = 2;
    Matrix t1 = Matrix::Zero(2, 2), t2 = Matrix::Zero(2, 2);
    t1(0, 1) = 5.0;
    t1(1, 0) = 5.0;
    t2(1, 0) = 5.0;
    t2(0, 0) = 5.0;
    r.tables = {t1, t2};
    CHECK(chain_argmax(r) == PhotonPattern{0, 1, 0});
    CHECK(exhaustive_chain_argmax(r) == PhotonPattern{0, 1, 0});
}

TEST_CASE("dynamic program agrees with exhaustive search") {
    std::mt19937 rng(211);
    std::uniform_int_distribution<int> modes(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const ResidueChain r = random_residue(modes(rng), 4, rng);
        CHECK(chain_argmax(r) == exhaustive_chain_argmax(r));
    }
}

TEST_CASE("subtract_column touches exactly the selected cells") {
    ResidueChain r;
    r.n_modes = 3;
    r.cutoff = 3;
    r.tables.assign(2, Matrix::Constant(3, 3, 0.5));
    subtract_column(r, {0, 1, 2}, 0.01);
    for (int m = 0; m < 2; ++m) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                const bool hit = (m == 0 && a == 0 && b == 1) || (m == 1 && a == 1 && b == 2);
                CHECK(r.tables[static_cast<std::size_t>(m)](a, b) ==
                      doctest::Approx(hit ? 0.49 : 0.5).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("subtracting then adding a dyadic step restores the residue exactly") {
    std::mt19937 rng(223);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    ResidueChain r;
    r.n_modes = 4;
    r.cutoff = 4;
    for (int m = 0; m < 3; ++m) {
        Matrix t(4, 4);
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) t(a, b) = u(rng);
        }
        r.tables.push_back(t);
    }
    const ResidueChain before = r;
    const double step = 1.0 / 64.0;
    subtract_column(r, {1, 2, 0, 3}, step);
    subtract_column(r, {1, 2, 0, 3}, -step);
    for (int m = 0; m < 3; ++m) {
        CHECK((r.tables[static_cast<std::size_t>(m)] - before.tables[static_cast<std::size_t>(m)])
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
}

TEST_CASE("repeated subtraction empties a single-spike measurement") {
    const PhotonPattern spike{0, 2, 1};
    const double w = 0.64;
    const PairMarginalSet y = measurement_of(3, 4, {{spike, w}});
    ResidueChain r = ResidueChain::from_measurement(y);
    const double s = 0.01;
    const int picks = static_cast<int>(std::lround(w / s));
    for (int i = 0; i < picks; ++i) subtract_column(r, spike, s);
    CHECK(std::abs(r.tables[0](0, 2)) <= 1e-12);
    CHECK(std::abs(r.tables[1](2, 1)) <= 1e-12);
}

TEST_CASE("subtract_column rejects out-of-range patterns") {
    std::mt19937 rng(5);
    ResidueChain r = random_residue(3, 4, rng);
    CHECK_THROWS_AS(subtract_column(r, {0, 4, 0}, 0.01), ValidationError);
    CHECK_THROWS_AS(subtract_column(r, {0, 1}, 0.01), ValidationError);
}

TEST_CASE("ptmp on a vacuum measurement returns the all-zero spike") {
    const PairMarginalSet y = measurement_of(7, 4, {{PhotonPattern(7, 0), 1.0}});
    const SparseSpectrum spectrum = ptmp(y, 0.01);
    CHECK(spectrum.iterations_used == 100);
    REQUIRE(spectrum.weights.size() == 1);
    CHECK(spectrum.weights.at(PhotonPattern(7, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ptmp recovers two non-colliding spikes") {
    const PhotonPattern p1{0, 1, 2, 0, 1, 0, 3};
    const PhotonPattern p2{1, 2, 0, 1, 0, 2, 1};
    const PairMarginalSet y = measurement_of(7, 4, {{p1, 0.6}, {p2, 0.4}});
    const SparseSpectrum spectrum = ptmp(y, 0.01);
    CHECK(spectrum.iterations_used <= 100);
    REQUIRE(spectrum.weights.count(p1) == 1);
    REQUIRE(spectrum.weights.count(p2) == 1);
    CHECK(std::abs(spectrum.weights.at(p1) - 0.6) <= 0.01 + 1e-12);
    CHECK(std::abs(spectrum.weights.at(p2) - 0.4) <= 0.01 + 1e-12);
    SpectrumMap truth;
    truth[p1] = 0.6;
    truth[p2] = 0.4;
    CHECK(l1_distance(spectrum.weights, truth) <= 0.02 + 1e-12);
}

TEST_CASE("every recovered weight is an integer multiple of the step") {
    std::mt19937 rng(227);
    const PhotonPattern p1{3, 1, 0, 2}, p2{0, 2, 1, 1}, p3{1, 0, 3, 0};
    const PairMarginalSet y = measurement_of(4, 4, {{p1, 0.5}, {p2, 0.3}, {p3, 0.2}});
    const SparseSpectrum spectrum = ptmp(y, 0.01);
    for (const auto& [pattern, weight] : spectrum.weights) {
        const double multiple = weight / spectrum.step;
        CHECK(std::abs(multiple - std::lround(multiple)) < 1e-9);
        CHECK(weight > 0.0);
    }
    CHECK(spectrum.total_weight() <= 1.0 + spectrum.step);
}

TEST_CASE("ptmp always stops within the iteration cap") {
    std::mt19937 rng(229);
    std::uniform_real_distribution<double> u(0.0, 0.01);
    PairMarginalSet y;
    y.n_modes = 5;
    y.cutoff = 4;
    // weak, unstructured measurement: total far below one, so the cap binds;
    // a symmetric table repeated along the chain stays chain-consistent
    Matrix t = Matrix::Zero(4, 4);
    for (int a = 0; a < 4; ++a) {
        for (int b = a; b < 4; ++b) {
            t(a, b) = u(rng);
            t(b, a) = t(a, b);
        }
    }
    y.tables.assign(4, t);
    const SparseSpectrum spectrum = ptmp(y, 0.01, 40);
    CHECK(spectrum.iterations_used == 40);
}

TEST_CASE("bookkeeping identity holds bit for bit with a dyadic step") {
    // spike weights and step are multiples of 1/64, so every subtraction is
    // exact and y - residue must equal the implicit A x exactly
    const double s = 1.0 / 64.0;
    const PhotonPattern p1{0, 1, 2, 3, 0}, p2{2, 0, 1, 1, 2};
    const PairMarginalSet y = measurement_of(5, 4, {{p1, 40.0 / 64.0}, {p2, 24.0 / 64.0}});

    ResidueChain residue = ResidueChain::from_measurement(y);
    PairMarginalSet accumulated;  // A x, built by the same updates
    accumulated.n_modes = 5;
    accumulated.cutoff = 4;
    accumulated.tables.assign(4, Matrix::Zero(4, 4));

    for (int iter = 0; iter < 64; ++iter) {
        const PhotonPattern pick = chain_argmax(residue);
        subtract_column(residue, pick, s);
        for (int m = 0; m + 1 < 5; ++m) {
            accumulated.tables[static_cast<std::size_t>(m)](
                pick[static_cast<std::size_t>(m)], pick[static_cast<std::size_t>(m + 1)]) += s;
        }
        for (int m = 0; m < 4; ++m) {
            const Matrix lhs = y.tables[static_cast<std::size_t>(m)] -
                               residue.tables[static_cast<std::size_t>(m)];
            CHECK((lhs - accumulated.tables[static_cast<std::size_t>(m)]).cwiseAbs().maxCoeff() ==
                  0.0);
        }
    }
}

TEST_CASE("l1 distance basics") {
    SpectrumMap a, b;
    a[{0, 1}] = 0.5;
    a[{1, 0}] = 0.5;
    CHECK(l1_distance(a, a) == 0.0);
    b[{2, 2}] = 1.0;
    CHECK(l1_distance(a, b) == doctest::Approx(2.0).epsilon(1e-15));
    SpectrumMap c;
    c[{0, 1, 2}] = 1.0;
    CHECK_THROWS_AS(l1_distance(a, c), ValidationError);
}

TEST_CASE("ptmp validates the step size") {
    const PairMarginalSet y = measurement_of(3, 4, {{PhotonPattern{0, 0, 0}, 1.0}});
    CHECK_THROWS_AS(ptmp(y, 0.0), ValidationError);
    CHECK_THROWS_AS(ptmp(y, 1.5), ValidationError);
}
