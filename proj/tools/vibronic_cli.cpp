// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: parses transition files, runs the marginal scan
// and the pursuit reconstruction (or exact enumeration), and writes spectrum
// tables. Every failure exits nonzero with a single "error: Kind: detail"
// line on stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "vibronic/errors.hpp"
#include "vibronic/io.hpp"
#include "vibronic/marginals.hpp"
#include "vibronic/report.hpp"
#include "vibronic/types.hpp"

namespace {

vibronic::ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return vibronic::ReportFormat::Csv;
    if (name == "json") return vibronic::ReportFormat::Json;
    throw vibronic::ValidationError("unknown format '" + name + "' (expected csv or json)");
}

void emit_report(const vibronic::SpectrumReport& report, const std::string& format,
                 const std::string& output) {
    const auto fmt = parse_format(format);
    if (output == "-") {
        vibronic::write_report(report, fmt, std::cout);
    } else {
        vibronic::write_report(report, fmt, output);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse vibronic spectra from nearest-neighbor photon marginals"};
    app.require_subcommand(1);

    std::string input_path;
    std::string output = "-";
    std::string format = "csv";
    int cutoff = vibronic::kDefaultCutoff;
    double step = vibronic::kDefaultStep;
    int max_iter = 0;
    int budget_per_mode = 3;
    int budget_total = 9;
    std::string reference_path;

    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "Reconstruct the sparse spectrum by matching pursuit");
    reconstruct->add_option("--input", input_path, "transition file")->required();
    reconstruct->add_option("--cutoff", cutoff, "photon counts per mode run 0..cutoff-1");
    reconstruct->add_option("--step", step, "pursuit step size");
    reconstruct->add_option("--max-iter", max_iter, "iteration cap (default ceil(1/step))");
    reconstruct->add_option("--format", format, "csv or json");
    reconstruct->add_option("--output", output, "output path, - for stdout");
    reconstruct->add_option("--reference", reference_path,
                            "report to compare against; adds l1_vs_reference");

    CLI::App* exact = app.add_subcommand(
        "exact", "Enumerate the exact spectrum within a photon budget");
    exact->add_option("--input", input_path, "transition file")->required();
    exact->add_option("--budget-per-mode", budget_per_mode, "max photons per mode");
    exact->add_option("--budget-total", budget_total, "max total photons");
    exact->add_option("--format", format, "csv or json");
    exact->add_option("--output", output, "output path, - for stdout");

    CLI::App* marginals = app.add_subcommand(
        "marginals", "Write the nearest-neighbor pair marginal tables");
    marginals->add_option("--input", input_path, "transition file")->required();
    marginals->add_option("--cutoff", cutoff, "photon counts per mode run 0..cutoff-1");
    marginals->add_option("--format", format, "csv or json");
    marginals->add_option("--output", output, "output path, - for stdout");

    std::string report_a;
    std::string report_b;
    CLI::App* compare = app.add_subcommand("compare", "l1 distance between two reports");
    compare->add_option("report_a", report_a, "first report (csv or json)")->required();
    compare->add_option("report_b", report_b, "second report (csv or json)")->required();
    compare->add_option("--output", output, "output path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reconstruct->parsed()) {
            const vibronic::TransitionInput input = vibronic::load_transition(input_path);
            vibronic::SpectrumReport report =
                vibronic::run_reconstruct(input, cutoff, step, max_iter);
            if (!reference_path.empty()) {
                report.l1_vs_reference =
                    vibronic::report_l1(report, vibronic::read_report(reference_path));
            }
            emit_report(report, format, output);
        } else if (exact->parsed()) {
            const vibronic::TransitionInput input = vibronic::load_transition(input_path);
            emit_report(vibronic::run_exact(input, budget_per_mode, budget_total), format, output);
        } else if (marginals->parsed()) {
            const vibronic::TransitionInput input = vibronic::load_transition(input_path);
            const vibronic::GaussianState state = vibronic::build_final_state(input);
            const vibronic::PairMarginalSet pm = vibronic::scan_pairs(state, cutoff);
            const auto fmt = parse_format(format);
            if (output == "-") {
                vibronic::write_marginals(pm, fmt, std::cout);
            } else {
                vibronic::write_marginals(pm, fmt, output);
            }
        } else if (compare->parsed()) {
            const double l1 = vibronic::report_l1(vibronic::read_report(report_a),
                                                  vibronic::read_report(report_b));
            if (output == "-") {
                std::cout << vibronic::format_number(l1) << '\n';
            } else {
                std::ofstream out(output);
                if (!out) throw vibronic::IoError("cannot open '" + output + "' for writing");
                out << vibronic::format_number(l1) << '\n';
            }
        }
    } catch (const vibronic::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
