// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Matching pursuit over the implicit pair-marginal measurement matrix. The
// measurement matrix is never materialized: a column for pattern n touches
// exactly one cell (n_m, n_m+1) in each of the N-1 residue tables, and the
// per-iteration argmax over all K^N columns is a dynamic program over the
// chain score sum_m residue[m](n_m, n_m+1).

#pragma once

#include <vector>

#include "vibronic/marginals.hpp"
#include "vibronic/types.hpp"

namespace vibronic {

// Working copy of the measurement during pursuit; entries may go negative.
struct ResidueChain {
    int n_modes = 0;
    int cutoff = 0;
    std::vector<Matrix> tables;

    static ResidueChain from_measurement(const PairMarginalSet& pm);
    void validate() const;
};

struct SparseSpectrum {
    SpectrumMap weights;      // pattern -> positive multiple of step
    double step = kDefaultStep;
    int iterations_used = 0;

    double total_weight() const;
};

// Pattern maximizing the chain score; ties break toward the
// lexicographically smallest pattern. Backward suffix-maximum sweep plus a
// forward trace that commits one coordinate at a time, O(N K^2).
PhotonPattern chain_argmax(const ResidueChain& residue);

// Subtracts step from the N-1 cells selected by the pattern, in place.
// A negative step adds the column back.
void subtract_column(ResidueChain& residue, const PhotonPattern& pattern, double step);

// Greedy reconstruction: repeatedly detect the best-matching column and move
// `step` of weight onto it; stops once the accumulated weight reaches 1 or
// after max_iter iterations. max_iter <= 0 selects ceil(1/step).
SparseSpectrum ptmp(const PairMarginalSet& y, double step = kDefaultStep, int max_iter = 0);

// Total-variation style distance sum |p_i - q_i| over the union of supports.
// Patterns must have a consistent length across both maps.
double l1_distance(const SpectrumMap& p, const SpectrumMap& q);

}  // namespace vibronic
