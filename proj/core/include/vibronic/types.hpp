// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace vibronic {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Per-mode excitation counts. Length equals the mode count of whatever state
// or residue it indexes; std::vector's lexicographic operator< makes it a
// deterministic map key.
using PhotonPattern = std::vector<int>;

// Pattern -> probability weight, ordered lexicographically.
using SpectrumMap = std::map<PhotonPattern, double>;

// Tolerances shared across the library. All linear algebra is double
// precision; values leave headroom for mode counts up to ~50.
namespace tol {
inline constexpr double orthogonality = 1e-8;
inline constexpr double symmetry = 1e-10;
inline constexpr double hafnian_symmetry = 1e-12;
inline constexpr double mean_pairing = 1e-12;
inline constexpr double probability_clamp = 1e-9;
inline constexpr double condition_limit = 1e12;
inline constexpr double chain_consistency = 5e-3;
}  // namespace tol

inline constexpr int kDefaultCutoff = 4;         // counts 0..3 per mode
inline constexpr int kDefaultHafnianBudget = 24; // max dimension of a hafnian call
inline constexpr double kDefaultStep = 0.01;

std::string pattern_to_digits(const PhotonPattern& pattern);

}  // namespace vibronic
