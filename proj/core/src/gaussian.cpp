// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include <cmath>
#include <string>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

bool finite_positive(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || v[i] <= 0.0) return false;
    }
    return true;
}

}  // namespace

void VibronicTransition::validate() const {
    if (n_modes <= 0) {
        throw ValidationError("n_modes must be positive");
    }
    const auto n = static_cast<Eigen::Index>(n_modes);
    if (omega_initial.size() != n || omega_final.size() != n ||
        displacement.size() != n || duschinsky.rows() != n || duschinsky.cols() != n) {
        throw ValidationError("field dimensions inconsistent with n_modes");
    }
    if (!finite_positive(omega_initial) || !finite_positive(omega_final)) {
        throw ValidationError("frequencies must be finite and > 0");
    }
    if (!displacement.allFinite() || !duschinsky.allFinite()) {
        throw ValidationError("displacement and duschinsky must be finite");
    }
    const double defect =
        (duschinsky.transpose() * duschinsky - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect >= tol::orthogonality) {
        throw NotOrthogonalError("duschinsky not orthogonal, |U^T U - I|_max = " +
                                 std::to_string(defect));
    }
}

void DoktorovParameters::validate() const {
    const Eigen::Index n = delta.size();
    if (n <= 0 || j_matrix.rows() != n || j_matrix.cols() != n ||
        alpha.rows() != n || alpha.cols() != n || beta.rows() != n || beta.cols() != n) {
        throw ValidationError("doktorov parameter dimensions inconsistent");
    }
    Eigen::JacobiSVD<Matrix> svd(j_matrix.transpose());
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0 || smax / smin > tol::condition_limit) {
        throw SingularJError("J^T numerically singular");
    }
    const Matrix jt_inv = j_matrix.transpose().inverse();
    const double a_defect = (alpha - 0.5 * (j_matrix - jt_inv)).cwiseAbs().maxCoeff();
    const double b_defect = (beta - 0.5 * (j_matrix + jt_inv)).cwiseAbs().maxCoeff();
    if (a_defect > 1e-12 || b_defect > 1e-12) {
        throw ValidationError("alpha/beta inconsistent with J");
    }
}

void GaussianState::validate() const {
    if (n_modes <= 0) {
        throw ValidationError("n_modes must be positive");
    }
    const auto two_n = static_cast<Eigen::Index>(2 * n_modes);
    if (covariance.rows() != two_n || covariance.cols() != two_n || mean.size() != two_n) {
        throw ValidationError("state dimensions inconsistent with n_modes");
    }
    if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > tol::symmetry) {
        throw ValidationError("covariance not symmetric");
    }
    for (int i = 0; i < n_modes; ++i) {
        if (std::abs(mean[i] - mean[n_modes + i]) > tol::mean_pairing) {
            throw ValidationError("mean vector not in real-displacement form");
        }
    }
    const Matrix sigma_q = covariance + 0.5 * Matrix::Identity(two_n, two_n);
    Eigen::LLT<Matrix> llt(sigma_q);
    if (llt.info() != Eigen::Success) {
        throw ValidationError("sigma + I/2 not positive definite");
    }
}

GaussianState vacuum_state(int n_modes) {
    if (n_modes <= 0) {
        throw ValidationError("n_modes must be positive");
    }
    GaussianState state;
    state.n_modes = n_modes;
    state.covariance = 0.5 * Matrix::Identity(2 * n_modes, 2 * n_modes);
    state.mean = Vector::Zero(2 * n_modes);
    return state;
}

DoktorovParameters build_doktorov(const VibronicTransition& transition) {
    transition.validate();
    const Eigen::Index n = transition.n_modes;

    // J = Omega' U Omega^-1 with Omega = diag(omega)^(1/2). Formed entrywise
    // from the frequency ratio so equal frequencies scale by exactly one.
    Matrix j(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            j(r, c) = transition.duschinsky(r, c) *
                      std::sqrt(transition.omega_final[r] / transition.omega_initial[c]);
        }
    }

    Eigen::JacobiSVD<Matrix> svd(j.transpose());
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0 || smax / smin > tol::condition_limit) {
        throw SingularJError("J^T condition number exceeds " +
                             std::to_string(tol::condition_limit));
    }
    // LU inverse keeps trivial transitions (J = I) exact
    const Matrix jt_inv = j.transpose().inverse();

    DoktorovParameters params;
    params.j_matrix = std::move(j);
    params.alpha = 0.5 * (params.j_matrix - jt_inv);
    params.beta = 0.5 * (params.j_matrix + jt_inv);
    params.delta = transition.displacement;  // dimensionless input convention
    return params;
}

GaussianState evolve_vacuum(const DoktorovParameters& params) {
    params.validate();
    const Eigen::Index n = params.n_modes();

    Matrix s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = params.alpha;
    s.topRightCorner(n, n) = params.beta;
    s.bottomLeftCorner(n, n) = params.beta;
    s.bottomRightCorner(n, n) = params.alpha;

    GaussianState state;
    state.n_modes = static_cast<int>(n);
    // S sigma_vac S^T with sigma_vac = I/2; symmetrize away roundoff.
    Matrix cov = 0.5 * (s * s.transpose());
    state.covariance = 0.5 * (cov + cov.transpose());
    state.mean = Vector::Zero(2 * n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    state.mean.head(n) = inv_sqrt2 * params.delta;
    state.mean.tail(n) = inv_sqrt2 * params.delta;
    state.validate();
    return state;
}

GaussianState reduce_state(const GaussianState& state, std::span<const int> modes) {
    state.validate();
    if (modes.empty()) {
        throw BadModeIndexError("mode subset must be non-empty");
    }
    std::vector<bool> seen(static_cast<std::size_t>(state.n_modes), false);
    for (int m : modes) {
        if (m < 0 || m >= state.n_modes) {
            throw BadModeIndexError("mode index " + std::to_string(m) + " out of range");
        }
        if (seen[static_cast<std::size_t>(m)]) {
            throw BadModeIndexError("mode index " + std::to_string(m) + " repeated");
        }
        seen[static_cast<std::size_t>(m)] = true;
    }

    const auto k = static_cast<Eigen::Index>(modes.size());
    std::vector<Eigen::Index> keep(static_cast<std::size_t>(2 * k));
    for (Eigen::Index i = 0; i < k; ++i) {
        keep[static_cast<std::size_t>(i)] = modes[static_cast<std::size_t>(i)];
        keep[static_cast<std::size_t>(k + i)] = state.n_modes + modes[static_cast<std::size_t>(i)];
    }

    GaussianState reduced;
    reduced.n_modes = static_cast<int>(k);
    reduced.covariance.resize(2 * k, 2 * k);
    reduced.mean.resize(2 * k);
    for (Eigen::Index r = 0; r < 2 * k; ++r) {
        reduced.mean[r] = state.mean[keep[static_cast<std::size_t>(r)]];
        for (Eigen::Index c = 0; c < 2 * k; ++c) {
            reduced.covariance(r, c) =
                state.covariance(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(c)]);
        }
    }
    return reduced;
}

}  // namespace vibronic
