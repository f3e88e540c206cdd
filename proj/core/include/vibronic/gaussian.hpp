// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Domain types for vibronic transitions and bosonic Gaussian states, plus the
// Bogoliubov (Doktorov) transformation that turns molecular data into the
// final-state covariance matrix and mean vector.
//
// Conventions used throughout:
//   * operator ordering (a_1..a_N, a†_1..a†_N); covariance is 2N x 2N,
//     the mean vector has length 2N with mean[N+i] == mean[i] (real regime)
//   * the vacuum covariance is (1/2) I, so a valid state always has
//     sigma + (1/2) I positive definite
//   * frequencies are wavenumbers in cm^-1; only their ratios enter J

#pragma once

#include <span>
#include <vector>

#include "vibronic/types.hpp"

namespace vibronic {

// Molecular input: q' = U q + d in normal coordinates, with the displacement
// already scaled to the dimensionless delta = Omega' d / sqrt(hbar).
struct VibronicTransition {
    int n_modes = 0;
    Vector omega_initial;  // cm^-1, strictly positive
    Vector omega_final;    // cm^-1, strictly positive
    Matrix duschinsky;     // N x N orthogonal
    Vector displacement;   // dimensionless delta, length N

    // Throws NotOrthogonal / ValidationError when an invariant fails.
    void validate() const;
};

// J = Omega' U Omega^-1 and the induced ladder-operator transformation
// alpha = (J - (J^T)^-1)/2, beta = (J + (J^T)^-1)/2.
struct DoktorovParameters {
    Matrix j_matrix;
    Matrix alpha;
    Matrix beta;
    Vector delta;

    int n_modes() const { return static_cast<int>(delta.size()); }
    void validate() const;
};

struct GaussianState {
    int n_modes = 0;
    Matrix covariance;  // 2N x 2N symmetric, sigma + I/2 positive definite
    Vector mean;        // length 2N, entries (<a_i>..., <a_i†>...)

    void validate() const;
};

// Vacuum on n modes: covariance I/2, zero mean.
GaussianState vacuum_state(int n_modes);

DoktorovParameters build_doktorov(const VibronicTransition& transition);

// Applies S = [[alpha, beta], [beta, alpha]] to the vacuum:
// covariance S S^T / 2, mean (delta/sqrt(2), delta/sqrt(2)).
GaussianState evolve_vacuum(const DoktorovParameters& params);

// Keeps rows/columns i and N+i for each kept mode, re-packed in the
// (a..., a†...) ordering of the subset. `modes` are 0-based, distinct, and
// kept in the given order (so a full-length permutation permutes the state).
GaussianState reduce_state(const GaussianState& state, std::span<const int> modes);

inline GaussianState reduce_state(const GaussianState& state, const std::vector<int>& modes) {
    return reduce_state(state, std::span<const int>(modes));
}

}  // namespace vibronic
