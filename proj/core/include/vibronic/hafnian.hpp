// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Loop-hafnians and photon-number-pattern probabilities of Gaussian states.
//
// The probability of a pattern n = (n_1..n_N) is F * lhaf(C), where C is the
// D matrix with rows/columns i and N+i repeated n_i times and the diagonal
// replaced by the repeated gamma vector, and
//   F = exp(-(1/2) mean^T sigma_Q^-1 mean) / (sqrt(det sigma_Q) * prod n_i!).
// The all-zero pattern reduces to the Gaussian vacuum overlap.

#pragma once

#include "vibronic/gaussian.hpp"
#include "vibronic/types.hpp"

namespace vibronic {

// Everything pattern_probability needs, precomputed once per state. Immutable
// after construction; safe to share across threads evaluating patterns.
struct PatternProbabilityContext {
    int n_modes = 0;
    Matrix sigma_q;        // sigma + I/2
    Matrix d_matrix;       // X (I - sigma_Q^-1); symmetric in the real regime
    Vector gamma;          // sigma_Q^-1 mean
    Vector mean;
    double det_sigma_q = 0.0;
    double vacuum_prob = 0.0;  // exp(-(1/2) mean^T gamma) / sqrt(det sigma_Q)
};

// Sum over all single-pair matchings of a graph with loops: each vertex is
// either looped (diagonal entry) or paired (off-diagonal entry). The
// zero-dimensional matrix has loop-hafnian 1.
//
// Memoized subset recursion over the lowest-indexed remaining vertex,
//   lhaf(S) = M_ff lhaf(S\{f}) + sum_j M_fj lhaf(S\{f, j}),
// O(2^dim * dim) worst case; dimensions stay <= 12 for pair marginals at the
// default cutoff and <= 24 under the enumeration budget.
//
// Throws OddDimension for odd inputs, TooLarge beyond dimension 32, and
// ValidationError if the matrix is asymmetric off the diagonal.
double loop_hafnian(const Matrix& m);

// Throws SingularSigmaQ when sigma + I/2 is not positive definite.
PatternProbabilityContext build_context(const GaussianState& state);

// The repeated-index matrix C for a pattern; exposed for inspection and
// reused by pattern_probability. Row order: mode rows first (each repeated
// n_i times), then the conjugate rows, diagonal overwritten with gamma.
Matrix pattern_matrix(const PatternProbabilityContext& ctx, const PhotonPattern& pattern);

// Probability of measuring `pattern` photons. Throws PatternTooLarge when
// 2 * sum(n) exceeds `hafnian_budget`. Results inside [-1e-9, 1 + 1e-9] are
// clamped to [0, 1]; anything further out raises Internal.
double pattern_probability(const PatternProbabilityContext& ctx, const PhotonPattern& pattern,
                           int hafnian_budget = kDefaultHafnianBudget);

// Overlap of the state with the N-mode vacuum,
// exp(-(1/2) mean^T (sigma + I/2)^-1 mean) / sqrt(det(sigma + I/2)).
double vacuum_probability(const GaussianState& state);

}  // namespace vibronic
