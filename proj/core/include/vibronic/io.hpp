// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Transition file ingestion. Files are JSON with an explicit schema_version;
// either the molecular form (omega_initial, omega_final, duschinsky,
// displacement_dimensionless) or the precomputed form (j_matrix, delta) must
// be present, never both. omega_final is required in both forms because it
// assigns wavenumbers to reported lines.

#pragma once

#include <optional>
#include <string>

#include "vibronic/gaussian.hpp"
#include "vibronic/types.hpp"

namespace vibronic {

struct TransitionInput {
    std::string schema_version;
    int n_modes = 0;
    std::optional<VibronicTransition> transition;   // molecular form
    std::optional<DoktorovParameters> precomputed;  // j_matrix + delta form
    Vector omega_final;                             // cm^-1, line labels
    std::string metadata_json;                      // "{}" when absent

    bool is_placeholder() const;  // metadata {"placeholder": true}
    std::string molecule() const;
};

// Loads either form. Throws ParseError for malformed files (with field
// context), ValidationError when an invariant fails, IoError for unreadable
// paths.
TransitionInput load_transition(const std::string& path);

// The molecular-form loader; rejects precomputed files.
VibronicTransition parse_transition(const std::string& path);

// The transition's Doktorov parameters, built or passed through.
DoktorovParameters doktorov_parameters(const TransitionInput& input);

// Final Gaussian state of the transition (vacuum in, Bogoliubov out).
GaussianState build_final_state(const TransitionInput& input);

}  // namespace vibronic
