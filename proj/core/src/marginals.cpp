// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/marginals.hpp"

#include <string>

#include "vibronic/errors.hpp"
#include "vibronic/hafnian.hpp"

namespace vibronic {

void PairMarginalSet::validate() const {
    if (n_modes < 2) {
        throw ValidationError("pair marginals need at least 2 modes");
    }
    if (cutoff < 1) {
        throw ValidationError("cutoff must be >= 1");
    }
    if (static_cast<int>(tables.size()) != n_modes - 1) {
        throw ValidationError("expected " + std::to_string(n_modes - 1) + " tables");
    }
    for (const Matrix& t : tables) {
        if (t.rows() != cutoff || t.cols() != cutoff) {
            throw ValidationError("table shape does not match cutoff");
        }
        if (t.minCoeff() < 0.0 || t.maxCoeff() > 1.0) {
            throw ValidationError("table entry outside [0, 1]");
        }
        if (t.sum() > 1.0 + 1e-9) {
            throw ValidationError("table mass exceeds 1");
        }
    }
    // Both marginals estimate the single-mode distribution of the shared
    // mode; truncation at the cutoff keeps them from matching exactly.
    for (std::size_t m = 0; m + 1 < tables.size(); ++m) {
        const Vector right = tables[m].colwise().sum().transpose();
        const Vector left = tables[m + 1].rowwise().sum();
        if ((right - left).cwiseAbs().maxCoeff() > tol::chain_consistency) {
            throw ValidationError("chain consistency violated between pairs " +
                                  std::to_string(m) + " and " + std::to_string(m + 1));
        }
    }
}

PairMarginalSet scan_pairs(const GaussianState& state, int cutoff) {
    state.validate();
    if (state.n_modes < 2) {
        throw ValidationError("scan_pairs needs at least 2 modes");
    }
    if (cutoff < 1) {
        throw ValidationError("cutoff must be >= 1");
    }

    PairMarginalSet pm;
    pm.n_modes = state.n_modes;
    pm.cutoff = cutoff;
    pm.tables.reserve(static_cast<std::size_t>(state.n_modes - 1));

    for (int m = 0; m + 1 < state.n_modes; ++m) {
        const int pair[2] = {m, m + 1};
        const GaussianState reduced = reduce_state(state, std::span<const int>(pair, 2));
        const PatternProbabilityContext ctx = build_context(reduced);
        Matrix table(cutoff, cutoff);
        for (int a = 0; a < cutoff; ++a) {
            for (int b = 0; b < cutoff; ++b) {
                table(a, b) = pattern_probability(ctx, PhotonPattern{a, b});
            }
        }
        pm.tables.push_back(std::move(table));
    }
    return pm;
}

Vector flatten_measurement(const PairMarginalSet& pm) {
    pm.validate();
    const int k = pm.cutoff;
    Vector y(static_cast<Eigen::Index>(pm.tables.size()) * k * k);
    Eigen::Index idx = 0;
    for (const Matrix& t : pm.tables) {
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                y[idx++] = t(a, b);
            }
        }
    }
    return y;
}

}  // namespace vibronic
