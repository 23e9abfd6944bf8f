// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oco/errors.hpp"

namespace oco {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, std::string_view separators) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (separators.find(ch) != std::string_view::npos) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad integer value for '" + key + "': " + value);
    }
}

using ParamMap = std::map<std::string, std::string>;

ParamMap parse_params(const std::string& token, std::string_view body, std::string_view allowed_keys) {
    ParamMap params;
    for (const std::string& pair : split(std::string(body), ",")) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value in algorithm spec '" + token + "'");
        const std::string key = trim(pair.substr(0, eq));
        const std::string value = trim(pair.substr(eq + 1));
        if (("," + std::string(allowed_keys) + ",").find("," + key + ",") == std::string::npos)
            throw std::invalid_argument("config: unknown key '" + key + "' in algorithm spec '" + token + "'");
        params[key] = value;
    }
    return params;
}

double require(const ParamMap& params, const std::string& token, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("config: algorithm spec '" + token + "' is missing '" + key + "'");
    return parse_double(key, it->second);
}

Schedule parse_schedule(const std::string& token, const ParamMap& params, std::size_t T) {
    std::string kind = "anytime";
    if (auto it = params.find("schedule"); it != params.end()) kind = it->second;
    if (kind == "fixed_horizon")
        return Schedule::fixed_horizon_convex(require(params, token, "alpha0"), require(params, token, "c"), T,
                                              require(params, token, "gamma0"));
    if (kind == "anytime")
        return Schedule::anytime_dynamic(require(params, token, "alpha0"), require(params, token, "c"),
                                         require(params, token, "gamma0"));
    if (kind == "strongly_convex")
        return Schedule::strongly_convex(require(params, token, "mu"), require(params, token, "gamma0"));
    if (kind == "path_informed")
        return Schedule::path_informed(require(params, token, "c"), require(params, token, "path_length"),
                                       require(params, token, "gamma0"));
    throw std::invalid_argument("config: unknown schedule kind '" + kind + "' in '" + token + "'");
}

AlgorithmSpec parse_algorithm(const std::string& token, std::size_t T) {
    if (token == "table2_basic") return AlgorithmSpec::table2_basic(T);
    if (token == "table2_expert") return AlgorithmSpec::table2_expert(T);
    if (token == "table3_basic") return AlgorithmSpec::table3_basic();
    if (token == "zero_penalty_ogd") return AlgorithmSpec::table2_zero_penalty(T);

    const std::size_t colon = token.find(':');
    const std::string family = colon == std::string::npos ? token : token.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : token.substr(colon + 1);

    if (family == "basic" || family == "ogd") {
        const ParamMap params =
            parse_params(token, body, "schedule,alpha0,c,gamma0,mu,path_length,label");
        Schedule schedule = parse_schedule(token, params, T);
        std::string label = family == "basic" ? "basic" : "ogd";
        if (auto it = params.find("label"); it != params.end()) label = it->second;
        return family == "basic" ? AlgorithmSpec::basic(label, std::move(schedule))
                                 : AlgorithmSpec::zero_penalty_ogd(label, std::move(schedule));
    }
    if (family == "expert") {
        const ParamMap params = parse_params(token, body, "kappa,c,alpha0,beta0,gamma0,family,label");
        ExpertStepFamily step_family = ExpertStepFamily::PerRoundT;
        if (auto it = params.find("family"); it != params.end()) {
            if (it->second == "per_round_t")
                step_family = ExpertStepFamily::PerRoundT;
            else if (it->second == "fixed_horizon_T")
                step_family = ExpertStepFamily::FixedHorizonT;
            else
                throw std::invalid_argument("config: unknown expert step family '" + it->second + "'");
        }
        MetaParams meta = MetaParams::from_theorem3(T, require(params, token, "kappa"), require(params, token, "c"),
                                                    require(params, token, "alpha0"), require(params, token, "beta0"),
                                                    require(params, token, "gamma0"), step_family);
        std::string label = "expert";
        if (auto it = params.find("label"); it != params.end()) label = it->second;
        return AlgorithmSpec::expert(label, std::move(meta));
    }
    throw std::invalid_argument("config: unknown algorithm '" + token + "'");
}

}  // namespace

ExperimentConfig parse_config_text(std::string_view text) {
    std::map<std::string, std::string> fields;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) + " is not 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (fields.count(key))
            throw std::invalid_argument("config: duplicate key '" + key + "'");
        fields[key] = value;
    }

    ExperimentConfig config;
    std::string algorithms_value;
    for (const auto& [key, value] : fields) {
        if (key == "kind") {
            if (value == "online_lp")
                config.kind = ExperimentKind::OnlineLP;
            else if (value == "online_qp")
                config.kind = ExperimentKind::OnlineQP;
            else
                throw std::invalid_argument("config: unknown kind '" + value + "'");
        } else if (key == "p") {
            config.p = static_cast<std::size_t>(parse_uint(key, value));
        } else if (key == "m") {
            config.m = static_cast<std::size_t>(parse_uint(key, value));
        } else if (key == "T") {
            config.T = static_cast<std::size_t>(parse_uint(key, value));
        } else if (key == "repetitions") {
            config.repetitions = static_cast<std::size_t>(parse_uint(key, value));
        } else if (key == "seed") {
            config.seed = parse_uint(key, value);
        } else if (key == "checkpoints") {
            config.checkpoints.clear();
            for (const std::string& item : split(value, ", \t"))
                config.checkpoints.push_back(static_cast<std::size_t>(parse_uint(key, item)));
        } else if (key == "algorithms") {
            algorithms_value = value;
        } else if (key == "out_dir") {
            config.out_dir = value;
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }

    for (const std::string& token : split(algorithms_value, " \t"))
        config.algorithms.push_back(parse_algorithm(token, config.T));

    config.validate();
    return config;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace oco
