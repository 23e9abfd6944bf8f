// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "oco/errors.hpp"

namespace oco {

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string results_csv(const ResultTable& results) {
    std::string out = "algorithm,T,cum_loss_mean,cum_loss_sd,ccv_mean,ccv_sd,plain_violation_mean,regret_static_mean\n";
    for (const AlgorithmResult& algo : results.algorithms) {
        for (const CheckpointRow& row : algo.rows) {
            out += algo.name;
            out += ',';
            out += std::to_string(row.T);
            out += ',';
            out += format_double(row.cum_loss_mean);
            out += ',';
            out += format_double(row.cum_loss_sd);
            out += ',';
            out += format_double(row.ccv_mean);
            out += ',';
            out += format_double(row.ccv_sd);
            out += ',';
            out += format_double(row.plain_violation_mean);
            out += ',';
            out += format_double(row.regret_static_mean);
            out += '\n';
        }
    }
    return out;
}

namespace {

struct MetricColumn {
    const char* name;
    double (*get)(const CheckpointRow&);
};

constexpr MetricColumn kMetricColumns[] = {
    {"cum_loss_mean", [](const CheckpointRow& r) { return r.cum_loss_mean; }},
    {"ccv_mean", [](const CheckpointRow& r) { return r.ccv_mean; }},
    {"plain_violation_mean", [](const CheckpointRow& r) { return r.plain_violation_mean; }},
    {"regret_static_mean", [](const CheckpointRow& r) { return r.regret_static_mean; }},
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fixed2(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, ptr);
}

std::string svg_chart(const ResultTable& results, const MetricColumn& metric) {
    constexpr double width = 640.0, height = 480.0, pad = 56.0;

    double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
    double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
    for (const AlgorithmResult& algo : results.algorithms) {
        for (const CheckpointRow& row : algo.rows) {
            tmin = std::min(tmin, static_cast<double>(row.T));
            tmax = std::max(tmax, static_cast<double>(row.T));
            vmin = std::min(vmin, metric.get(row));
            vmax = std::max(vmax, metric.get(row));
        }
    }
    if (!std::isfinite(tmin)) tmin = tmax = 0.0;
    if (!std::isfinite(vmin)) vmin = vmax = 0.0;
    if (tmax == tmin) tmax = tmin + 1.0;
    if (vmax == vmin) vmax = vmin + 1.0;

    auto sx = [&](double t) { return pad + (t - tmin) / (tmax - tmin) * (width - 2.0 * pad); };
    auto sy = [&](double v) { return height - pad - (v - vmin) / (vmax - vmin) * (height - 2.0 * pad); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
    s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    // axes
    s += "<line x1=\"" + fixed2(pad) + "\" y1=\"" + fixed2(height - pad) + "\" x2=\"" + fixed2(width - pad) +
         "\" y2=\"" + fixed2(height - pad) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fixed2(pad) + "\" y1=\"" + fixed2(pad) + "\" x2=\"" + fixed2(pad) + "\" y2=\"" +
         fixed2(height - pad) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed2(width / 2.0) + "\" y=\"" + fixed2(height - 12.0) +
         "\" text-anchor=\"middle\" font-size=\"13\">T</text>\n";
    s += "<text x=\"16\" y=\"" + fixed2(height / 2.0) + "\" font-size=\"13\" transform=\"rotate(-90 16 " +
         fixed2(height / 2.0) + ")\" text-anchor=\"middle\">" + std::string(metric.name) + "</text>\n";
    s += "<text x=\"" + fixed2(pad) + "\" y=\"" + fixed2(height - pad + 16.0) +
         "\" font-size=\"11\" text-anchor=\"middle\">" + format_double(tmin) + "</text>\n";
    s += "<text x=\"" + fixed2(width - pad) + "\" y=\"" + fixed2(height - pad + 16.0) +
         "\" font-size=\"11\" text-anchor=\"middle\">" + format_double(tmax) + "</text>\n";
    s += "<text x=\"" + fixed2(pad - 6.0) + "\" y=\"" + fixed2(height - pad) +
         "\" font-size=\"11\" text-anchor=\"end\">" + format_double(vmin) + "</text>\n";
    s += "<text x=\"" + fixed2(pad - 6.0) + "\" y=\"" + fixed2(pad + 4.0) +
         "\" font-size=\"11\" text-anchor=\"end\">" + format_double(vmax) + "</text>\n";

    std::size_t color = 0;
    double legend_y = pad;
    for (const AlgorithmResult& algo : results.algorithms) {
        const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
        ++color;
        if (!algo.rows.empty()) {
            s += "<polyline fill=\"none\" stroke=\"";
            s += stroke;
            s += "\" stroke-width=\"1.5\" points=\"";
            for (const CheckpointRow& row : algo.rows) {
                s += fixed2(sx(static_cast<double>(row.T)));
                s += ',';
                s += fixed2(sy(metric.get(row)));
                s += ' ';
            }
            s += "\"/>\n";
        }
        s += "<text x=\"" + fixed2(width - pad + 4.0) + "\" y=\"" + fixed2(legend_y) +
             "\" font-size=\"11\" fill=\"" + std::string(stroke) + "\">" + algo.name + "</text>\n";
        legend_y += 14.0;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> results_svgs(const ResultTable& results) {
    std::vector<std::pair<std::string, std::string>> files;
    for (const MetricColumn& metric : kMetricColumns)
        files.emplace_back(std::string(metric.name) + ".svg", svg_chart(results, metric));
    return files;
}

std::vector<std::filesystem::path> emit(const ResultTable& results, const std::filesystem::path& out_dir,
                                        EmitFormat format) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("emit: cannot create output directory " + out_dir.string());

    std::vector<std::filesystem::path> written;
    auto write_file = [&](const std::filesystem::path& path, const std::string& contents) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("emit: cannot open " + path.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoError("emit: write failed for " + path.string());
        written.push_back(path);
    };

    write_file(out_dir / "results.csv", results_csv(results));
    if (format == EmitFormat::SvgLines)
        for (const auto& [name, contents] : results_svgs(results)) write_file(out_dir / name, contents);
    return written;
}

std::vector<CsvRow> read_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("read_results_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("read_results_csv: empty file " + path.string());
    if (line.rfind("algorithm,T,", 0) != 0)
        throw std::invalid_argument("read_results_csv: unexpected header in " + path.string());

    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        CsvRow row;
        auto next = [&]() {
            if (!std::getline(ss, field, ','))
                throw std::invalid_argument("read_results_csv: short row in " + path.string());
            return field;
        };
        row.algorithm = next();
        row.T = static_cast<std::size_t>(std::stoull(next()));
        row.cum_loss_mean = std::stod(next());
        row.cum_loss_sd = std::stod(next());
        row.ccv_mean = std::stod(next());
        row.ccv_sd = std::stod(next());
        row.plain_violation_mean = std::stod(next());
        row.regret_static_mean = std::stod(next());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace oco
