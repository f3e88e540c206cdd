// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/types.hpp"

#include "vibronic/errors.hpp"

namespace vibronic {

std::string pattern_to_digits(const PhotonPattern& pattern) {
    std::string s;
    s.reserve(pattern.size());
    for (int c : pattern) {
        if (c < 0 || c > 9) {
            throw ValidationError("digit rendering requires counts in 0..9");
        }
        s.push_back(static_cast<char>('0' + c));
    }
    return s;
}

}  // namespace vibronic
