// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/hafnian.hpp"

#include <Eigen/Cholesky>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

// Open-addressing map from subset bitmask to a cached loop-hafnian value.
// The recursion touches far fewer subsets than 2^dim (about 1.2e5 for
// dim = 24), so a small growable table beats a dense array.
class SubsetMemo {
public:
    void reset(int dim) {
        std::size_t want = 1u << 12;
        // heuristic: reachable subsets grow roughly 2x per two dimensions
        while (want < (std::size_t{1} << std::min(dim, 18))) want <<= 1;
        if (keys_.size() != want) {
            keys_.assign(want, kEmpty);
            values_.resize(want);
        } else {
            std::fill(keys_.begin(), keys_.end(), kEmpty);
        }
        size_ = 0;
    }

    bool find(std::uint32_t key, double& out) const {
        std::size_t mask = keys_.size() - 1;
        std::size_t slot = hash(key) & mask;
        while (keys_[slot] != kEmpty) {
            if (keys_[slot] == key) {
                out = values_[slot];
                return true;
            }
            slot = (slot + 1) & mask;
        }
        return false;
    }

    void insert(std::uint32_t key, double value) {
        if (4 * (size_ + 1) > 3 * keys_.size()) grow();
        insert_nogrow(key, value);
        ++size_;
    }

private:
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    static std::size_t hash(std::uint32_t key) {
        std::uint64_t h = key;
        h *= 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(h >> 32);
    }

    void insert_nogrow(std::uint32_t key, double value) {
        std::size_t mask = keys_.size() - 1;
        std::size_t slot = hash(key) & mask;
        while (keys_[slot] != kEmpty) slot = (slot + 1) & mask;
        keys_[slot] = key;
        values_[slot] = value;
    }

    void grow() {
        std::vector<std::uint32_t> old_keys = std::move(keys_);
        std::vector<double> old_values = std::move(values_);
        keys_.assign(old_keys.size() * 2, kEmpty);
        values_.resize(old_values.size() * 2);
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] != kEmpty) insert_nogrow(old_keys[i], old_values[i]);
        }
    }

    std::vector<std::uint32_t> keys_;
    std::vector<double> values_;
    std::size_t size_ = 0;
};

double lhaf_subset(const Matrix& m, std::uint32_t subset, SubsetMemo& memo) {
    if (subset == 0) return 1.0;
    double cached;
    if (memo.find(subset, cached)) return cached;

    const int f = std::countr_zero(subset);
    const std::uint32_t rest = subset & (subset - 1);  // drop lowest bit

    double acc = m(f, f) * lhaf_subset(m, rest, memo);
    std::uint32_t partners = rest;
    while (partners != 0) {
        const int j = std::countr_zero(partners);
        partners &= partners - 1;
        acc += m(f, j) * lhaf_subset(m, rest & ~(std::uint32_t{1} << j), memo);
    }
    memo.insert(subset, acc);
    return acc;
}

void check_off_diagonal_symmetry(const Matrix& m) {
    const Eigen::Index dim = m.rows();
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = r + 1; c < dim; ++c) {
            const double gap = std::abs(m(r, c) - m(c, r));
            if (gap > tol::hafnian_symmetry * std::max(1.0, std::abs(m(r, c)))) {
                throw ValidationError("matrix not symmetric off the diagonal at (" +
                                      std::to_string(r) + "," + std::to_string(c) + ")");
            }
        }
    }
}

// Per-thread scratch keeps pattern evaluation allocation-free and lets
// callers fan out over patterns with no shared mutable cache.
double lhaf_full(const Matrix& m) {
    const int dim = static_cast<int>(m.rows());
    if (dim == 0) return 1.0;
    if (dim > 32) {
        throw TooLargeError("loop-hafnian dimension " + std::to_string(dim) + " exceeds 32");
    }
    thread_local SubsetMemo memo;
    memo.reset(dim);
    const std::uint32_t full = (dim == 32) ? 0xFFFFFFFFu : ((std::uint32_t{1} << dim) - 1);
    return lhaf_subset(m, full, memo);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

double loop_hafnian(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("loop_hafnian requires a square matrix");
    }
    const auto dim = static_cast<int>(m.rows());
    if (dim % 2 != 0) {
        throw OddDimensionError("loop_hafnian dimension " + std::to_string(dim) + " is odd");
    }
    if (dim > 32) {
        throw TooLargeError("loop_hafnian dimension " + std::to_string(dim) + " exceeds 32");
    }
    if (dim == 0) return 1.0;
    check_off_diagonal_symmetry(m);
    return lhaf_full(m);
}

PatternProbabilityContext build_context(const GaussianState& state) {
    state.validate();
    const Eigen::Index two_n = 2 * state.n_modes;
    PatternProbabilityContext ctx;
    ctx.n_modes = state.n_modes;
    ctx.mean = state.mean;
    ctx.sigma_q = state.covariance + 0.5 * Matrix::Identity(two_n, two_n);

    Eigen::LLT<Matrix> llt(ctx.sigma_q);
    if (llt.info() != Eigen::Success) {
        throw SingularSigmaQError("sigma + I/2 not positive definite");
    }
    const Matrix identity = Matrix::Identity(two_n, two_n);
    Matrix sigma_q_inv = llt.solve(identity);
    sigma_q_inv = 0.5 * (sigma_q_inv + sigma_q_inv.transpose());

    // D = X (I - sigma_Q^-1) with X the block swap. In the real-displacement
    // regime sigma_Q has the block form [[E, F], [F, E]], which makes D
    // symmetric; symmetrize to shed solver roundoff and verify.
    Matrix w = identity - sigma_q_inv;
    Matrix d(two_n, two_n);
    d.topRows(state.n_modes) = w.bottomRows(state.n_modes);
    d.bottomRows(state.n_modes) = w.topRows(state.n_modes);
    if ((d - d.transpose()).cwiseAbs().maxCoeff() > tol::symmetry) {
        throw ValidationError("covariance is not in the real-displacement block form");
    }
    ctx.d_matrix = 0.5 * (d + d.transpose());

    ctx.gamma = sigma_q_inv * state.mean;

    double log_det = 0.0;
    for (Eigen::Index i = 0; i < two_n; ++i) {
        log_det += 2.0 * std::log(llt.matrixL()(i, i));
    }
    ctx.det_sigma_q = std::exp(log_det);
    ctx.vacuum_prob =
        std::exp(-0.5 * state.mean.dot(ctx.gamma) - 0.5 * log_det);
    return ctx;
}

Matrix pattern_matrix(const PatternProbabilityContext& ctx, const PhotonPattern& pattern) {
    const int n = ctx.n_modes;
    if (static_cast<int>(pattern.size()) != n) {
        throw ValidationError("pattern length does not match mode count");
    }
    int total = 0;
    for (int c : pattern) {
        if (c < 0) throw ValidationError("pattern entries must be >= 0");
        total += c;
    }

    std::vector<int> expanded;
    expanded.reserve(static_cast<std::size_t>(2 * total));
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < pattern[static_cast<std::size_t>(i)]; ++r) expanded.push_back(i);
    }
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < pattern[static_cast<std::size_t>(i)]; ++r) expanded.push_back(n + i);
    }

    const auto dim = static_cast<Eigen::Index>(expanded.size());
    Matrix c(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            c(r, col) = ctx.d_matrix(expanded[static_cast<std::size_t>(r)],
                                     expanded[static_cast<std::size_t>(col)]);
        }
        c(r, r) = ctx.gamma[expanded[static_cast<std::size_t>(r)]];
    }
    return c;
}

double pattern_probability(const PatternProbabilityContext& ctx, const PhotonPattern& pattern,
                           int hafnian_budget) {
    const int n = ctx.n_modes;
    if (static_cast<int>(pattern.size()) != n) {
        throw ValidationError("pattern length does not match mode count");
    }
    int total = 0;
    for (int c : pattern) {
        if (c < 0) throw ValidationError("pattern entries must be >= 0");
        total += c;
    }
    if (total == 0) return ctx.vacuum_prob;
    if (2 * total > hafnian_budget) {
        throw PatternTooLargeError("pattern needs hafnian dimension " + std::to_string(2 * total) +
                                   " > budget " + std::to_string(hafnian_budget));
    }

    const Matrix c = pattern_matrix(ctx, pattern);
    double denom = 1.0;
    for (int count : pattern) denom *= factorial(count);
    const double prob = ctx.vacuum_prob / denom * lhaf_full(c);

    if (prob < -tol::probability_clamp || prob > 1.0 + tol::probability_clamp) {
        throw InternalError("pattern probability " + std::to_string(prob) + " outside [0, 1]");
    }
    return std::min(1.0, std::max(0.0, prob));
}

double vacuum_probability(const GaussianState& state) {
    return build_context(state).vacuum_prob;
}

}  // namespace vibronic
