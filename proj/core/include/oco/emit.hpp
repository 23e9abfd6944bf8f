// Deterministic CSV and SVG emission of experiment results.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oco/runner.hpp"

namespace oco {

enum class EmitFormat { Csv, SvgLines };

/// Shortest round-trip decimal rendering of a double (std::to_chars).
std::string format_double(double value);

/// CSV with the fixed schema
///   algorithm,T,cum_loss_mean,cum_loss_sd,ccv_mean,ccv_sd,plain_violation_mean,regret_static_mean
/// one row per algorithm x checkpoint, byte-identical for identical inputs.
std::string results_csv(const ResultTable& results);

/// One line chart per metric column: a polyline per algorithm on linear axes.
/// Returns (file name, contents) pairs.
std::vector<std::pair<std::string, std::string>> results_svgs(const ResultTable& results);

/// Write results under out_dir ("results.csv" always; the SVG charts when
/// format is SvgLines). Returns the written paths.
std::vector<std::filesystem::path> emit(const ResultTable& results, const std::filesystem::path& out_dir,
                                        EmitFormat format);

/// Minimal reader for the CSV schema above (used by the exponent fitter).
struct CsvRow {
    std::string algorithm;
    std::size_t T = 0;
    double cum_loss_mean = 0.0;
    double cum_loss_sd = 0.0;
    double ccv_mean = 0.0;
    double ccv_sd = 0.0;
    double plain_violation_mean = 0.0;
    double regret_static_mean = 0.0;
};
std::vector<CsvRow> read_results_csv(const std::filesystem::path& path);

}  // namespace oco
