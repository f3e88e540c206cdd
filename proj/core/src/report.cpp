// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#include "vibronic/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "vibronic/errors.hpp"
#include "vibronic/marginals.hpp"
#include "vibronic/oracles.hpp"
#include "vibronic/pursuit.hpp"

namespace vibronic {

std::string format_number(double value) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

namespace {

using nlohmann::ordered_json;

bool needs_count_encoding(const SpectrumReport& report) {
    for (const SpectrumLine& line : report.lines) {
        for (int c : line.pattern) {
            if (c > 9) return true;
        }
    }
    return false;
}

std::string render_pattern(const PhotonPattern& pattern, bool counts) {
    if (!counts) return pattern_to_digits(pattern);
    std::string s;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(pattern[i]);
    }
    return s;
}

PhotonPattern parse_pattern(const std::string& text, bool counts) {
    PhotonPattern pattern;
    if (!counts) {
        pattern.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw ParseError("pattern '" + text + "' is not a digit string");
            }
            pattern.push_back(ch - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            int value = 0;
            const char* first = text.data() + pos;
            const char* last = text.data() + comma;
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last || value < 0) {
                throw ParseError("pattern '" + text + "' has a bad count");
            }
            pattern.push_back(value);
            pos = comma + 1;
            if (comma == text.size()) break;
        }
    }
    if (pattern.empty()) {
        throw ParseError("empty pattern field");
    }
    return pattern;
}

void sort_lines(std::vector<SpectrumLine>& lines) {
    std::sort(lines.begin(), lines.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
        if (a.probability != b.probability) return a.probability > b.probability;
        return a.pattern < b.pattern;
    });
}

std::vector<SpectrumLine> lines_from_map(const SpectrumMap& weights, const Vector& omega_final) {
    std::vector<SpectrumLine> lines;
    lines.reserve(weights.size());
    for (const auto& [pattern, probability] : weights) {
        if (probability <= 0.0) continue;
        lines.push_back({pattern_wavenumber(omega_final, pattern), pattern, probability});
    }
    sort_lines(lines);
    return lines;
}

void write_csv(const SpectrumReport& report, std::ostream& out) {
    const bool counts = needs_count_encoding(report);
    out << "wavenumber_cm1,pattern,probability\n";
    for (const SpectrumLine& line : report.lines) {
        out << format_number(line.wavenumber_cm1) << ',';
        if (counts) {
            out << '"' << render_pattern(line.pattern, true) << '"';
        } else {
            out << render_pattern(line.pattern, false);
        }
        out << ',' << format_number(line.probability) << '\n';
    }
}

void write_json(const SpectrumReport& report, std::ostream& out) {
    const bool counts = needs_count_encoding(report);
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["method"] = report.method;
    doc["n_modes"] = report.n_modes;
    doc["pattern_encoding"] = counts ? "counts" : "digits";
    ordered_json params = ordered_json::object();
    if (report.cutoff) params["cutoff"] = *report.cutoff;
    if (report.step) params["step"] = *report.step;
    if (report.max_iter) params["max_iter"] = *report.max_iter;
    if (report.iterations_used) params["iterations_used"] = *report.iterations_used;
    if (report.budget_per_mode) params["budget_per_mode"] = *report.budget_per_mode;
    if (report.budget_total) params["budget_total"] = *report.budget_total;
    if (report.mass_captured) params["mass_captured"] = *report.mass_captured;
    doc["parameters"] = std::move(params);
    if (report.l1_vs_reference) doc["l1_vs_reference"] = *report.l1_vs_reference;
    ordered_json lines = ordered_json::array();
    for (const SpectrumLine& line : report.lines) {
        ordered_json entry;
        entry["wavenumber_cm1"] = line.wavenumber_cm1;
        entry["pattern"] = render_pattern(line.pattern, counts);
        entry["probability"] = line.probability;
        lines.push_back(std::move(entry));
    }
    doc["lines"] = std::move(lines);
    out << doc.dump(2) << '\n';
}

SpectrumReport read_json(const std::string& text, const std::string& path) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    SpectrumReport report;
    try {
        if (doc.value("schema_version", std::string{}) != "1") {
            throw ParseError("unsupported report schema_version");
        }
        report.method = doc.at("method").get<std::string>();
        report.n_modes = doc.at("n_modes").get<int>();
        const bool counts = doc.value("pattern_encoding", std::string("digits")) == "counts";
        const ordered_json& params = doc.at("parameters");
        if (params.contains("cutoff")) report.cutoff = params["cutoff"].get<int>();
        if (params.contains("step")) report.step = params["step"].get<double>();
        if (params.contains("max_iter")) report.max_iter = params["max_iter"].get<int>();
        if (params.contains("iterations_used"))
            report.iterations_used = params["iterations_used"].get<int>();
        if (params.contains("budget_per_mode"))
            report.budget_per_mode = params["budget_per_mode"].get<int>();
        if (params.contains("budget_total")) report.budget_total = params["budget_total"].get<int>();
        if (params.contains("mass_captured"))
            report.mass_captured = params["mass_captured"].get<double>();
        if (doc.contains("l1_vs_reference"))
            report.l1_vs_reference = doc["l1_vs_reference"].get<double>();
        for (const ordered_json& entry : doc.at("lines")) {
            SpectrumLine line;
            line.wavenumber_cm1 = entry.at("wavenumber_cm1").get<double>();
            line.pattern = parse_pattern(entry.at("pattern").get<std::string>(), counts);
            line.probability = entry.at("probability").get<double>();
            report.lines.push_back(std::move(line));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return report;
}

SpectrumReport read_csv(const std::string& text, const std::string& path) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header != "wavenumber_cm1,pattern,probability") {
        throw ParseError(path + ": missing csv header 'wavenumber_cm1,pattern,probability'");
    }
    SpectrumReport report;
    report.method = "unknown";
    std::string row;
    int line_no = 1;
    while (std::getline(in, row)) {
        ++line_no;
        if (row.empty()) continue;
        const std::size_t first = row.find(',');
        const std::size_t last = row.rfind(',');
        if (first == std::string::npos || last == first) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected 3 columns");
        }
        SpectrumLine line;
        auto to_double = [&](const std::string& field) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{} || ptr != field.data() + field.size()) {
                throw ParseError(path + ":" + std::to_string(line_no) + ": bad number '" + field +
                                 "'");
            }
            return v;
        };
        line.wavenumber_cm1 = to_double(row.substr(0, first));
        std::string pattern_field = row.substr(first + 1, last - first - 1);
        if (pattern_field.size() >= 2 && pattern_field.front() == '"' &&
            pattern_field.back() == '"') {
            line.pattern = parse_pattern(pattern_field.substr(1, pattern_field.size() - 2), true);
        } else {
            line.pattern = parse_pattern(pattern_field, false);
        }
        line.probability = to_double(row.substr(last + 1));
        report.lines.push_back(std::move(line));
    }
    if (!report.lines.empty()) {
        report.n_modes = static_cast<int>(report.lines.front().pattern.size());
    }
    return report;
}

}  // namespace

double pattern_wavenumber(const Vector& omega_final, const PhotonPattern& pattern) {
    if (static_cast<int>(pattern.size()) != omega_final.size()) {
        throw ValidationError("pattern length does not match frequency list");
    }
    double w = 0.0;
    for (Eigen::Index i = 0; i < omega_final.size(); ++i) {
        w += pattern[static_cast<std::size_t>(i)] * omega_final[i];
    }
    return w;
}

SpectrumReport run_reconstruct(const TransitionInput& input, int cutoff, double step,
                               int max_iter) {
    const GaussianState state = build_final_state(input);
    const PairMarginalSet y = scan_pairs(state, cutoff);
    const SparseSpectrum spectrum = ptmp(y, step, max_iter);

    SpectrumReport report;
    report.method = "ptmp";
    report.n_modes = input.n_modes;
    report.cutoff = cutoff;
    report.step = step;
    report.max_iter = max_iter > 0 ? max_iter : static_cast<int>(std::ceil(1.0 / step));
    report.iterations_used = spectrum.iterations_used;
    report.lines = lines_from_map(spectrum.weights, input.omega_final);
    return report;
}

SpectrumReport run_exact(const TransitionInput& input, int budget_per_mode, int budget_total,
                         int hafnian_budget) {
    const GaussianState state = build_final_state(input);
    const ExactSpectrum spectrum =
        enumerate_exact_spectrum(state, budget_per_mode, budget_total, hafnian_budget);

    SpectrumReport report;
    report.method = "exact";
    report.n_modes = input.n_modes;
    report.budget_per_mode = budget_per_mode;
    report.budget_total = budget_total;
    report.mass_captured = spectrum.mass_captured;
    report.lines = lines_from_map(spectrum.entries, input.omega_final);
    return report;
}

void write_report(const SpectrumReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Csv) {
        write_csv(report, out);
    } else {
        write_json(report, out);
    }
    if (!out) {
        throw IoError("failed writing report stream");
    }
}

void write_report(const SpectrumReport& report, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_report(report, format, out);
}

SpectrumReport read_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open report '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw ParseError(path + ": empty report");
    }
    return text[first] == '{' ? read_json(text, path) : read_csv(text, path);
}

SpectrumMap spectrum_map(const SpectrumReport& report) {
    SpectrumMap map;
    for (const SpectrumLine& line : report.lines) {
        map[line.pattern] += line.probability;
    }
    return map;
}

double report_l1(const SpectrumReport& a, const SpectrumReport& b) {
    return l1_distance(spectrum_map(a), spectrum_map(b));
}

void write_marginals(const PairMarginalSet& pm, ReportFormat format, std::ostream& out) {
    pm.validate();
    if (format == ReportFormat::Csv) {
        out << "pair,count_left,count_right,probability\n";
        for (std::size_t m = 0; m < pm.tables.size(); ++m) {
            for (int a = 0; a < pm.cutoff; ++a) {
                for (int b = 0; b < pm.cutoff; ++b) {
                    out << (m + 1) << ',' << a << ',' << b << ','
                        << format_number(pm.tables[m](a, b)) << '\n';
                }
            }
        }
    } else {
        ordered_json doc;
        doc["schema_version"] = "1";
        doc["n_modes"] = pm.n_modes;
        doc["cutoff"] = pm.cutoff;
        ordered_json tables = ordered_json::array();
        for (const Matrix& t : pm.tables) {
            ordered_json rows = ordered_json::array();
            for (int a = 0; a < pm.cutoff; ++a) {
                ordered_json row = ordered_json::array();
                for (int b = 0; b < pm.cutoff; ++b) row.push_back(t(a, b));
                rows.push_back(std::move(row));
            }
            tables.push_back(std::move(rows));
        }
        doc["tables"] = std::move(tables);
        out << doc.dump(2) << '\n';
    }
    if (!out) {
        throw IoError("failed writing marginal tables");
    }
}

void write_marginals(const PairMarginalSet& pm, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_marginals(pm, format, out);
}

}  // namespace vibronic
