// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "vibronic/errors.hpp"
#include "vibronic/gaussian.hpp"
#include "vibronic/marginals.hpp"
#include "vibronic/oracles.hpp"

using namespace vibronic;
using test_support::mild_transition;

namespace {

GaussianState product_displaced(double d1, double d2) {
    VibronicTransition t;
    t.n_modes = 2;
    t.omega_initial = Vector::Constant(2, 1000.0);
    t.omega_final = Vector::Constant(2, 1000.0);
    t.duschinsky = Matrix::Identity(2, 2);
    t.displacement = Vector(2);
    t.displacement << d1, d2;
    return evolve_vacuum(build_doktorov(t));
}

}  // namespace

TEST_CASE("vacuum marginals concentrate at (0, 0)") {
    const PairMarginalSet pm = scan_pairs(vacuum_state(4), 4);
    CHECK(pm.tables.size() == 3);
    for (const Matrix& t : pm.tables) {
        CHECK(t(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.sum() == doctest::Approx(1.0).epsilon(1e-12));
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                if (a != 0 || b != 0) CHECK(t(a, b) < 1e-12);
            }
        }
    }
    CHECK_NOTHROW(pm.validate());
}

TEST_CASE("product states factorize into outer products") {
    const double d1 = 0.7, d2 = 0.4;
    const PairMarginalSet pm = scan_pairs(product_displaced(d1, d2), 4);
    const auto p1 = analytic_singles(SingleModeKind::Displaced, d1, 3);
    const auto p2 = analytic_singles(SingleModeKind::Displaced, d2, 3);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(std::abs(pm.tables[0](a, b) - p1[a] * p2[b]) < 1e-10);
        }
    }
}

TEST_CASE("pair tables match the marginalized exact spectrum") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 3; ++trial) {
        const GaussianState s = evolve_vacuum(build_doktorov(mild_transition(3, rng)));
        const PairMarginalSet pm = scan_pairs(s, 4);
        const ExactSpectrum es = enumerate_exact_spectrum(s, 12, 12);
        for (int m = 0; m < 2; ++m) {
            Matrix marginal = Matrix::Zero(4, 4);
            for (const auto& [pattern, p] : es.entries) {
                const int a = pattern[static_cast<std::size_t>(m)];
                const int b = pattern[static_cast<std::size_t>(m) + 1];
                if (a < 4 && b < 4) marginal(a, b) += p;
            }
            CHECK((pm.tables[static_cast<std::size_t>(m)] - marginal).cwiseAbs().maxCoeff() <
                  1e-6);
        }
        CHECK_NOTHROW(pm.validate());
    }
}

TEST_CASE("flatten orders cells by pair, left count, right count") {
    const PairMarginalSet pm = scan_pairs(vacuum_state(2), 2);
    const Vector y = flatten_measurement(pm);
    REQUIRE(y.size() == 4);
    CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(y[1]) < 1e-12);
    CHECK(std::abs(y[2]) < 1e-12);
    CHECK(std::abs(y[3]) < 1e-12);
}

TEST_CASE("flatten preserves table layout") {
    PairMarginalSet pm;
    pm.n_modes = 2;
    pm.cutoff = 2;
    Matrix t(2, 2);
    t << 0.4, 0.3, 0.2, 0.1;
    pm.tables.push_back(t);
    const Vector y = flatten_measurement(pm);
    CHECK(y[0] == 0.4);
    CHECK(y[1] == 0.3);
    CHECK(y[2] == 0.2);
    CHECK(y[3] == 0.1);
}

TEST_CASE("flatten length is (N-1) K^2 with the first pair leading") {
    std::mt19937 rng(73);
    const GaussianState s = evolve_vacuum(build_doktorov(mild_transition(3, rng)));
    const PairMarginalSet pm = scan_pairs(s, 4);
    const Vector y = flatten_measurement(pm);
    REQUIRE(y.size() == 32);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(y[a * 4 + b] == pm.tables[0](a, b));
            CHECK(y[16 + a * 4 + b] == pm.tables[1](a, b));
        }
    }
}

TEST_CASE("raising the cutoff keeps shared entries and grows table mass") {
    std::mt19937 rng(79);
    const GaussianState s = evolve_vacuum(build_doktorov(mild_transition(3, rng)));
    const PairMarginalSet small = scan_pairs(s, 3);
    const PairMarginalSet large = scan_pairs(s, 5);
    for (std::size_t m = 0; m < small.tables.size(); ++m) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                CHECK(large.tables[m](a, b) == small.tables[m](a, b));
            }
        }
        CHECK(large.tables[m].sum() >= small.tables[m].sum());
    }
}

TEST_CASE("validate rejects malformed marginal sets") {
    PairMarginalSet pm;
    pm.n_modes = 3;
    pm.cutoff = 2;
    Matrix a(2, 2), b(2, 2);
    a << 0.5, 0.25, 0.25, 0.0;
    b << 0.75, 0.0, 0.25, 0.0;
    pm.tables = {a, b};

    SUBCASE("well formed passes") {
        // shared-mode marginals: (0.75, 0.25) both ways
        CHECK_NOTHROW(pm.validate());
    }
    SUBCASE("mass above one fails") {
        pm.tables[0](0, 0) = 0.9;
        CHECK_THROWS_AS(pm.validate(), ValidationError);
    }
    SUBCASE("negative entry fails") {
        pm.tables[0](1, 1) = -0.01;
        CHECK_THROWS_AS(pm.validate(), ValidationError);
    }
    SUBCASE("chain inconsistency fails") {
        pm.tables[1](0, 0) = 0.25;
        pm.tables[1](1, 0) = 0.75;  // shared-mode marginal now (0.25, 0.75)
        CHECK_THROWS_AS(pm.validate(), ValidationError);
    }
    SUBCASE("wrong table count fails") {
        pm.tables.pop_back();
        CHECK_THROWS_AS(pm.validate(), ValidationError);
    }
}

TEST_CASE("scan_pairs rejects degenerate inputs") {
    CHECK_THROWS_AS(scan_pairs(vacuum_state(1), 4), ValidationError);
    CHECK_THROWS_AS(scan_pairs(vacuum_state(3), 0), ValidationError);
}
