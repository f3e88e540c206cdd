// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spectrum reports: the stick-spectrum tables produced by reconstruction or
// exact enumeration, and their CSV/JSON serialization. Output is
// deterministic byte for byte: lines are ordered by descending probability
// with lexicographic pattern tie-break, and numbers are written in the
// shortest form that parses back to the same double.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vibronic/io.hpp"
#include "vibronic/marginals.hpp"
#include "vibronic/types.hpp"

namespace vibronic {

// Shortest decimal form that parses back to the same double, always with a
// decimal point (so "1.0", "0.31", "1566.5").
std::string format_number(double value);

struct SpectrumLine {
    double wavenumber_cm1 = 0.0;
    PhotonPattern pattern;
    double probability = 0.0;

    friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

struct SpectrumReport {
    std::string method;  // "ptmp" | "exact"
    int n_modes = 0;
    std::vector<SpectrumLine> lines;  // sorted by descending probability

    // run parameters; which ones are set depends on the method
    std::optional<int> cutoff;
    std::optional<double> step;
    std::optional<int> max_iter;
    std::optional<int> iterations_used;
    std::optional<int> budget_per_mode;
    std::optional<int> budget_total;
    std::optional<double> mass_captured;
    std::optional<double> l1_vs_reference;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

enum class ReportFormat { Csv, Json };

// Frequency-weighted wavenumber of a pattern, sum_i n_i * omega_final_i.
double pattern_wavenumber(const Vector& omega_final, const PhotonPattern& pattern);

// Marginal scan followed by matching pursuit. max_iter <= 0 selects the
// default ceil(1/step).
SpectrumReport run_reconstruct(const TransitionInput& input, int cutoff = kDefaultCutoff,
                               double step = kDefaultStep, int max_iter = 0);

// Exhaustive enumeration within the stated budgets; zero-probability
// patterns are omitted from the line list, captured mass is reported.
SpectrumReport run_exact(const TransitionInput& input, int budget_per_mode = 3,
                         int budget_total = 9, int hafnian_budget = kDefaultHafnianBudget);

void write_report(const SpectrumReport& report, ReportFormat format, std::ostream& out);
void write_report(const SpectrumReport& report, ReportFormat format, const std::string& path);

// Reads either format back (format sniffed from the first non-space byte).
SpectrumReport read_report(const std::string& path);

// pattern -> probability view of the lines.
SpectrumMap spectrum_map(const SpectrumReport& report);

// l1 distance between the two reports' spectra.
double report_l1(const SpectrumReport& a, const SpectrumReport& b);

// Pair-marginal tables. CSV columns are pair,count_left,count_right,
// probability with 1-based pair indices (pair m covers modes m and m+1);
// JSON nests the K x K tables row-major.
void write_marginals(const PairMarginalSet& pm, ReportFormat format, std::ostream& out);
void write_marginals(const PairMarginalSet& pm, ReportFormat format, const std::string& path);

}  // namespace vibronic
