// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators shared by the unit and acceptance suites.

#pragma once

#include <random>
#include <string>

#include "vibronic/gaussian.hpp"
#include "vibronic/pursuit.hpp"
#include "vibronic/types.hpp"

namespace vibronic::test_support {

inline Matrix random_orthogonal(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) g(r, c) = gauss(rng);
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r_mat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        if (r_mat(i, i) < 0.0) q.col(i) *= -1.0;
    }
    return q;
}

struct TransitionTuning {
    double max_displacement = 1.0;
    double ratio_lo = 0.5;
    double ratio_hi = 2.0;
    double omega_lo = 800.0;
    double omega_hi = 1600.0;
};

inline VibronicTransition random_transition(int n, std::mt19937& rng,
                                            const TransitionTuning& tuning = {}) {
    std::uniform_real_distribution<double> omega(tuning.omega_lo, tuning.omega_hi);
    std::uniform_real_distribution<double> ratio(tuning.ratio_lo, tuning.ratio_hi);
    std::uniform_real_distribution<double> disp(-tuning.max_displacement,
                                                tuning.max_displacement);
    VibronicTransition t;
    t.n_modes = n;
    t.omega_initial.resize(n);
    t.omega_final.resize(n);
    t.displacement.resize(n);
    for (int i = 0; i < n; ++i) {
        t.omega_initial[i] = omega(rng);
        t.omega_final[i] = t.omega_initial[i] * ratio(rng);
        t.displacement[i] = disp(rng);
    }
    t.duschinsky = random_orthogonal(n, rng);
    return t;
}

// Gentle enough that mass above 3 photons per mode stays well below the
// chain-consistency tolerance.
inline VibronicTransition mild_transition(int n, std::mt19937& rng) {
    TransitionTuning tuning;
    tuning.max_displacement = 0.6;
    tuning.ratio_lo = 0.75;
    tuning.ratio_hi = 1.4;
    return random_transition(n, rng, tuning);
}

inline Matrix random_symmetric(int dim, std::mt19937& rng, double diag_scale = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            m(r, c) = u(rng);
            m(c, r) = m(r, c);
        }
        m(r, r) *= diag_scale;
    }
    return m;
}

inline ResidueChain random_residue(int n_modes, int cutoff, std::mt19937& rng) {
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

// Mode-mixing chain of Givens rotations; orthogonal for any angle sequence.
inline Matrix givens_chain(int n, double angle) {
    Matrix u = Matrix::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        Matrix g = Matrix::Identity(n, n);
        const double c = std::cos(angle * (1.0 + 0.1 * i));
        const double s = std::sin(angle * (1.0 + 0.1 * i));
        g(i, i) = c;
        g(i, i + 1) = -s;
        g(i + 1, i) = s;
        g(i + 1, i + 1) = c;
        u = g * u;
    }
    return u;
}

inline std::string data_file(const std::string& name) {
    return std::string(VIBRONIC_DATA_DIR) + "/" + name;
}

}  // namespace vibronic::test_support
