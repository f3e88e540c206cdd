// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/io.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

using nlohmann::json;

Vector parse_vector(const json& j, const std::string& field, int expected) {
    if (!j.is_array() || static_cast<int>(j.size()) != expected) {
        throw ParseError(field + " must be an array of length " + std::to_string(expected));
    }
    Vector v(expected);
    for (int i = 0; i < expected; ++i) {
        const json& e = j[static_cast<std::size_t>(i)];
        if (!e.is_number()) {
            throw ParseError(field + "[" + std::to_string(i) + "] is not a number");
        }
        v[i] = e.get<double>();
    }
    return v;
}

Matrix parse_matrix(const json& j, const std::string& field, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
        throw ParseError(field + " must be " + std::to_string(n) + " rows");
    }
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError(field + " row " + std::to_string(r) + " must have " +
                             std::to_string(n) + " entries");
        }
        for (int c = 0; c < n; ++c) {
            const json& e = row[static_cast<std::size_t>(c)];
            if (!e.is_number()) {
                throw ParseError(field + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                 "] is not a number");
            }
            m(r, c) = e.get<double>();
        }
    }
    return m;
}

}  // namespace

bool TransitionInput::is_placeholder() const {
    const json meta = json::parse(metadata_json);
    return meta.is_object() && meta.value("placeholder", false);
}

std::string TransitionInput::molecule() const {
    const json meta = json::parse(metadata_json);
    if (meta.is_object()) return meta.value("molecule", std::string{});
    return {};
}

TransitionInput load_transition(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open transition file: " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(path + ": top level must be an object");
    }

    TransitionInput input;
    if (!doc.contains("schema_version") || !doc["schema_version"].is_string()) {
        throw ParseError("schema_version missing or not a string");
    }
    input.schema_version = doc["schema_version"].get<std::string>();
    if (input.schema_version != "1") {
        throw ParseError("unsupported schema_version '" + input.schema_version + "'");
    }
    if (!doc.contains("n_modes") || !doc["n_modes"].is_number_integer()) {
        throw ParseError("n_modes missing or not an integer");
    }
    input.n_modes = doc["n_modes"].get<int>();
    if (input.n_modes <= 0) {
        throw ValidationError("n_modes must be positive");
    }

    const bool molecular = doc.contains("duschinsky") || doc.contains("omega_initial") ||
                           doc.contains("displacement_dimensionless");
    const bool precomputed = doc.contains("j_matrix") || doc.contains("delta");
    if (molecular == precomputed) {
        throw ValidationError(
            "exactly one of the molecular form (omega_initial, omega_final, duschinsky, "
            "displacement_dimensionless) or the precomputed form (j_matrix, delta) is required");
    }
    if (!doc.contains("omega_final")) {
        throw ParseError("omega_final is required");
    }
    input.omega_final = parse_vector(doc["omega_final"], "omega_final", input.n_modes);

    if (molecular) {
        for (const char* field : {"omega_initial", "duschinsky", "displacement_dimensionless"}) {
            if (!doc.contains(field)) {
                throw ParseError(std::string(field) + " is required in the molecular form");
            }
        }
        VibronicTransition t;
        t.n_modes = input.n_modes;
        t.omega_initial = parse_vector(doc["omega_initial"], "omega_initial", input.n_modes);
        t.omega_final = input.omega_final;
        t.duschinsky = parse_matrix(doc["duschinsky"], "duschinsky", input.n_modes);
        t.displacement = parse_vector(doc["displacement_dimensionless"],
                                      "displacement_dimensionless", input.n_modes);
        try {
            t.validate();
        } catch (const Error& e) {
            // parse-time contract: invariant violations surface as
            // ValidationError naming the broken invariant
            if (e.kind() == ErrorKind::ValidationError) throw;
            throw ValidationError(e.what());
        }
        input.transition = std::move(t);
    } else {
        for (const char* field : {"j_matrix", "delta"}) {
            if (!doc.contains(field)) {
                throw ParseError(std::string(field) + " is required in the precomputed form");
            }
        }
        const Matrix j = parse_matrix(doc["j_matrix"], "j_matrix", input.n_modes);
        const Vector delta = parse_vector(doc["delta"], "delta", input.n_modes);
        Eigen::JacobiSVD<Matrix> svd(j.transpose());
        const double smin = svd.singularValues().minCoeff();
        const double smax = svd.singularValues().maxCoeff();
        if (smin <= 0.0 || smax / smin > tol::condition_limit) {
            throw SingularJError("j_matrix transpose numerically singular");
        }
        const Matrix jt_inv = j.transpose().inverse();
        DoktorovParameters params;
        params.j_matrix = j;
        params.alpha = 0.5 * (j - jt_inv);
        params.beta = 0.5 * (j + jt_inv);
        params.delta = delta;
        params.validate();
        input.precomputed = std::move(params);
    }

    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) {
            throw ParseError("metadata must be an object");
        }
        input.metadata_json = doc["metadata"].dump();
    } else {
        input.metadata_json = "{}";
    }
    return input;
}

VibronicTransition parse_transition(const std::string& path) {
    TransitionInput input = load_transition(path);
    if (!input.transition) {
        throw ValidationError("file '" + path + "' uses the precomputed form; molecular form required");
    }
    return *std::move(input.transition);
}

DoktorovParameters doktorov_parameters(const TransitionInput& input) {
    if (input.transition) {
        return build_doktorov(*input.transition);
    }
    return *input.precomputed;
}

GaussianState build_final_state(const TransitionInput& input) {
    return evolve_vacuum(doktorov_parameters(input));
}

}  // namespace vibronic
