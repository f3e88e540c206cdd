// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Nearest-neighbor pair marginals: the compressed measurement vector y.

#pragma once

#include <vector>

#include "vibronic/gaussian.hpp"
#include "vibronic/types.hpp"

namespace vibronic {

// N-1 tables of K x K probabilities; tables[m](a, b) is the probability of
// a photons in mode m and b photons in mode m+1 (0-based), counts 0..K-1.
struct PairMarginalSet {
    int n_modes = 0;
    int cutoff = kDefaultCutoff;
    std::vector<Matrix> tables;

    // Entries in [0, 1], each table sums to <= 1 + 1e-9, and adjacent tables
    // agree on the shared single-mode marginal within the truncation
    // tolerance. Throws ValidationError on violation.
    void validate() const;
};

// Reduces the state to each adjacent pair and fills the K x K table with
// exact two-mode pattern probabilities. Deterministic regardless of
// evaluation order.
PairMarginalSet scan_pairs(const GaussianState& state, int cutoff = kDefaultCutoff);

// Length (N-1) * K^2 vector ordered by (pair ascending, left count
// ascending, right count ascending).
Vector flatten_measurement(const PairMarginalSet& pm);

}  // namespace vibronic
