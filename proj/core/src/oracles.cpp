// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "vibronic/errors.hpp"
#include "vibronic/hafnian.hpp"

namespace vibronic {

namespace {

double matchings_sum(const Matrix& m, std::vector<int>& vertices) {
    if (vertices.empty()) return 1.0;

    // take the first remaining vertex: loop it, or pair it with any other
    const int f = vertices.front();
    std::vector<int> rest(vertices.begin() + 1, vertices.end());

    double total = m(f, f) * matchings_sum(m, rest);
    for (std::size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> sub;
        sub.reserve(rest.size() - 1);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (i != j) sub.push_back(rest[i]);
        }
        total += m(f, rest[j]) * matchings_sum(m, sub);
    }
    return total;
}

void generate_patterns(int n_modes, int per_mode_cap, int total_cap,
                       std::vector<PhotonPattern>& out) {
    PhotonPattern current(static_cast<std::size_t>(n_modes), 0);
    // odometer over patterns in lexicographic order
    auto recurse = [&](auto&& self, int mode, int used) -> void {
        if (mode == n_modes) {
            out.push_back(current);
            return;
        }
        const int cap = std::min(per_mode_cap, total_cap - used);
        for (int c = 0; c <= cap; ++c) {
            current[static_cast<std::size_t>(mode)] = c;
            self(self, mode + 1, used + c);
        }
        current[static_cast<std::size_t>(mode)] = 0;
    };
    recurse(recurse, 0, 0);
}

double count_patterns(int n_modes, int per_mode_cap, int total_cap) {
    // number of admissible patterns, computed mode by mode over totals
    std::vector<double> by_total(static_cast<std::size_t>(total_cap) + 1, 0.0);
    by_total[0] = 1.0;
    for (int mode = 0; mode < n_modes; ++mode) {
        std::vector<double> next(by_total.size(), 0.0);
        for (int t = 0; t <= total_cap; ++t) {
            if (by_total[static_cast<std::size_t>(t)] == 0.0) continue;
            for (int c = 0; c <= per_mode_cap && t + c <= total_cap; ++c) {
                next[static_cast<std::size_t>(t + c)] += by_total[static_cast<std::size_t>(t)];
            }
        }
        by_total = std::move(next);
        double running = 0.0;
        for (double v : by_total) running += v;
        if (running > 1e7) return running;
    }
    double total = 0.0;
    for (double v : by_total) total += v;
    return total;
}

}  // namespace

double brute_force_loop_hafnian(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("brute_force_loop_hafnian requires a square matrix");
    }
    const auto dim = static_cast<int>(m.rows());
    if (dim > 10) {
        throw TooLargeError("brute-force enumeration capped at dimension 10, got " +
                            std::to_string(dim));
    }
    std::vector<int> vertices(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) vertices[static_cast<std::size_t>(i)] = i;
    return matchings_sum(m, vertices);
}

PhotonPattern exhaustive_chain_argmax(const ResidueChain& residue) {
    residue.validate();
    const int n = residue.n_modes;
    const int k = residue.cutoff;
    double n_patterns = 1.0;
    for (int i = 0; i < n; ++i) n_patterns *= k;
    if (n_patterns > 1e6) {
        throw TooLargeError("K^N exceeds 1e6");
    }

    PhotonPattern current(static_cast<std::size_t>(n), 0);
    PhotonPattern best_pattern = current;
    double best_score = -std::numeric_limits<double>::infinity();
    auto score_of = [&](const PhotonPattern& p) {
        double s = 0.0;
        for (int m = 0; m + 1 < n; ++m) {
            s += residue.tables[static_cast<std::size_t>(m)](p[static_cast<std::size_t>(m)],
                                                             p[static_cast<std::size_t>(m + 1)]);
        }
        return s;
    };

    // lexicographic scan; strict > keeps the first (smallest) maximizer
    while (true) {
        const double s = score_of(current);
        if (s > best_score) {
            best_score = s;
            best_pattern = current;
        }
        int pos = n - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == k - 1) {
            current[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++current[static_cast<std::size_t>(pos)];
    }
    return best_pattern;
}

ExactSpectrum enumerate_exact_spectrum(const GaussianState& state, int per_mode_cap,
                                       int total_cap, int hafnian_budget) {
    if (per_mode_cap < 0 || total_cap < 0) {
        throw ValidationError("enumeration caps must be >= 0");
    }
    if (2 * total_cap > hafnian_budget) {
        throw TooLargeError("2 * total_cap = " + std::to_string(2 * total_cap) +
                            " exceeds hafnian budget " + std::to_string(hafnian_budget));
    }
    if (count_patterns(state.n_modes, per_mode_cap, total_cap) > 1e7) {
        throw TooLargeError("admissible pattern count exceeds 1e7");
    }

    const PatternProbabilityContext ctx = build_context(state);
    std::vector<PhotonPattern> patterns;
    generate_patterns(state.n_modes, per_mode_cap, total_cap, patterns);

    std::vector<double> probs(patterns.size(), 0.0);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(1, patterns.size() / 64)));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            probs[i] = pattern_probability(ctx, patterns[i], hafnian_budget);
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < patterns.size();
                     i = cursor.fetch_add(1)) {
                    probs[i] = pattern_probability(ctx, patterns[i], hafnian_budget);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }

    ExactSpectrum spectrum;
    spectrum.per_mode_cap = per_mode_cap;
    spectrum.total_cap = total_cap;
    double mass = 0.0;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (probs[i] > 0.0) {
            spectrum.entries[patterns[i]] = probs[i];
        }
        mass += probs[i];
    }
    spectrum.mass_captured = mass;
    return spectrum;
}

std::vector<double> analytic_singles(SingleModeKind kind, double parameter, int n_max) {
    if (n_max < 0) {
        throw ValidationError("n_max must be >= 0");
    }
    std::vector<double> dist(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (kind == SingleModeKind::Displaced) {
        const double lambda = parameter * parameter / 2.0;
        double term = std::exp(-lambda);  // Poisson(lambda) at n = 0
        dist[0] = term;
        for (int n = 1; n <= n_max; ++n) {
            term *= lambda / n;
            dist[static_cast<std::size_t>(n)] = term;
        }
    } else {
        const double r = parameter;
        const double t = std::tanh(r);
        // P(2n) = (2n)! tanh^(2n) r / (4^n (n!)^2 cosh r), odd counts vanish
        double term = 1.0 / std::cosh(r);
        dist[0] = term;
        for (int n = 1; 2 * n <= n_max; ++n) {
            term *= t * t * (2.0 * n - 1.0) / (2.0 * n);
            dist[static_cast<std::size_t>(2 * n)] = term;
        }
    }
    return dist;
}

}  // namespace vibronic
