// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force and closed-form references. These deliberately
// avoid the memoized hafnian and the chain DP so that agreement between the
// two routes is meaningful.

#pragma once

#include <vector>

#include "vibronic/gaussian.hpp"
#include "vibronic/pursuit.hpp"
#include "vibronic/types.hpp"

namespace vibronic {

struct ExactSpectrum {
    SpectrumMap entries;
    double mass_captured = 0.0;
    int per_mode_cap = 0;
    int total_cap = 0;
};

enum class SingleModeKind {
    Displaced,  // parameter = dimensionless delta; Poisson with mean delta^2/2
    Squeezed,   // parameter = r = (1/2) ln(omega'/omega); even counts only
};

// Explicit enumeration of all single-pair matchings, no memoization.
// Accepts odd dimensions, where loops absorb the unpaired vertex. Throws
// TooLarge above dimension 10.
double brute_force_loop_hafnian(const Matrix& m);

// Scans every pattern in lexicographic order, keeping the first maximum:
// same tie-break as chain_argmax. Throws TooLarge when K^N > 1e6.
PhotonPattern exhaustive_chain_argmax(const ResidueChain& residue);

// Evaluates pattern_probability on every pattern with sum(n) <= total_cap
// and n_i <= per_mode_cap. Throws TooLarge when the pattern count exceeds
// 1e7 or 2 * total_cap exceeds the hafnian budget.
ExactSpectrum enumerate_exact_spectrum(const GaussianState& state, int per_mode_cap,
                                       int total_cap, int hafnian_budget = kDefaultHafnianBudget);

// Closed-form single-mode distributions for counts 0..n_max.
std::vector<double> analytic_singles(SingleModeKind kind, double parameter, int n_max);

}  // namespace vibronic
