// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/pursuit.hpp"

#include <cmath>
#include <map>
#include <string>

#include "vibronic/errors.hpp"

namespace vibronic {

ResidueChain ResidueChain::from_measurement(const PairMarginalSet& pm) {
    pm.validate();
    ResidueChain r;
    r.n_modes = pm.n_modes;
    r.cutoff = pm.cutoff;
    r.tables = pm.tables;
    return r;
}

void ResidueChain::validate() const {
    if (n_modes < 2 || cutoff < 1) {
        throw ValidationError("residue chain needs >= 2 modes and cutoff >= 1");
    }
    if (static_cast<int>(tables.size()) != n_modes - 1) {
        throw ValidationError("expected " + std::to_string(n_modes - 1) + " residue tables");
    }
    for (const Matrix& t : tables) {
        if (t.rows() != cutoff || t.cols() != cutoff || !t.allFinite()) {
            throw ValidationError("residue table shape/finiteness violated");
        }
    }
}

PhotonPattern chain_argmax(const ResidueChain& residue) {
    residue.validate();
    const int n = residue.n_modes;
    const int k = residue.cutoff;

    // suffix[m][i]: best achievable score of tables m..N-2 given count i in
    // mode m. Computed back to front.
    std::vector<Vector> suffix(static_cast<std::size_t>(n));
    suffix[static_cast<std::size_t>(n - 1)] = Vector::Zero(k);
    for (int m = n - 2; m >= 0; --m) {
        Vector best(k);
        const Matrix& t = residue.tables[static_cast<std::size_t>(m)];
        const Vector& next = suffix[static_cast<std::size_t>(m + 1)];
        for (int i = 0; i < k; ++i) {
            double b = t(i, 0) + next[0];
            for (int j = 1; j < k; ++j) {
                b = std::max(b, t(i, j) + next[j]);
            }
            best[i] = b;
        }
        suffix[static_cast<std::size_t>(m)] = std::move(best);
    }

    // Committing the smallest count that still attains the suffix optimum at
    // each mode yields the lexicographically smallest maximizer.
    PhotonPattern pattern(static_cast<std::size_t>(n), 0);
    int first = 0;
    for (int i = 1; i < k; ++i) {
        if (suffix[0][i] > suffix[0][first]) first = i;
    }
    pattern[0] = first;
    for (int m = 1; m < n; ++m) {
        const Matrix& t = residue.tables[static_cast<std::size_t>(m - 1)];
        const Vector& next = suffix[static_cast<std::size_t>(m)];
        const int prev = pattern[static_cast<std::size_t>(m - 1)];
        int choice = 0;
        double best = t(prev, 0) + next[0];
        for (int j = 1; j < k; ++j) {
            const double score = t(prev, j) + next[j];
            if (score > best) {
                best = score;
                choice = j;
            }
        }
        pattern[static_cast<std::size_t>(m)] = choice;
    }
    return pattern;
}

void subtract_column(ResidueChain& residue, const PhotonPattern& pattern, double step) {
    if (static_cast<int>(pattern.size()) != residue.n_modes) {
        throw ValidationError("pattern length does not match residue chain");
    }
    for (int c : pattern) {
        if (c < 0 || c >= residue.cutoff) {
            throw ValidationError("pattern entry outside 0..cutoff-1");
        }
    }
    for (int m = 0; m + 1 < residue.n_modes; ++m) {
        residue.tables[static_cast<std::size_t>(m)](pattern[static_cast<std::size_t>(m)],
                                                    pattern[static_cast<std::size_t>(m + 1)]) -= step;
    }
}

double SparseSpectrum::total_weight() const {
    double total = 0.0;
    for (const auto& [pattern, w] : weights) total += w;
    return total;
}

SparseSpectrum ptmp(const PairMarginalSet& y, double step, int max_iter) {
    if (!(step > 0.0) || step > 1.0) {
        throw ValidationError("step must be in (0, 1]");
    }
    if (max_iter <= 0) {
        max_iter = static_cast<int>(std::ceil(1.0 / step));
    }

    ResidueChain residue = ResidueChain::from_measurement(y);
    std::map<PhotonPattern, long> picks;
    int iterations = 0;
    while (iterations < max_iter) {
        const PhotonPattern support = chain_argmax(residue);
        subtract_column(residue, support, step);
        ++picks[support];
        ++iterations;
        // stop as soon as the reconstructed weights sum to one
        if (static_cast<double>(iterations) * step >= 1.0) break;
    }

    SparseSpectrum spectrum;
    spectrum.step = step;
    spectrum.iterations_used = iterations;
    for (const auto& [pattern, count] : picks) {
        spectrum.weights[pattern] = static_cast<double>(count) * step;
    }
    return spectrum;
}

double l1_distance(const SpectrumMap& p, const SpectrumMap& q) {
    std::size_t pattern_len = 0;
    bool have_len = false;
    auto check_len = [&](const PhotonPattern& pat) {
        if (!have_len) {
            pattern_len = pat.size();
            have_len = true;
        } else if (pat.size() != pattern_len) {
            throw ValidationError("spectra defined over different pattern spaces");
        }
    };

    double total = 0.0;
    auto it_p = p.begin();
    auto it_q = q.begin();
    while (it_p != p.end() || it_q != q.end()) {
        if (it_q == q.end() || (it_p != p.end() && it_p->first < it_q->first)) {
            check_len(it_p->first);
            total += std::abs(it_p->second);
            ++it_p;
        } else if (it_p == p.end() || it_q->first < it_p->first) {
            check_len(it_q->first);
            total += std::abs(it_q->second);
            ++it_q;
        } else {
            check_len(it_p->first);
            total += std::abs(it_p->second - it_q->second);
            ++it_p;
            ++it_q;
        }
    }
    return total;
}

}  // namespace vibronic
