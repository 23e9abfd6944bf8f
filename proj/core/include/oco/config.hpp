// Flat key = value experiment-config files.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <filesystem>
#include <string_view>

#include "oco/runner.hpp"

namespace oco {

/// Parse the flat structured-text config format. Keys mirror the
/// ExperimentConfig fields exactly; unknown keys are an error.
///
///   kind         = online_lp            # online_lp | online_qp
///   p            = 2
///   m            = 3
///   T            = 5000
///   repetitions  = 50
///   seed         = 42
///   checkpoints  = 625, 1250, 2500, 5000
///   algorithms   = table2_basic table2_expert zero_penalty_ogd
///   out_dir      = out
///
/// `algorithms` is a whitespace-separated list. Each entry is a preset
/// (table2_basic, table2_expert, table3_basic, zero_penalty_ogd) or an
/// explicit spec `family:key=value,key=value,...` with families
///
///   basic / ogd   schedule=fixed_horizon|anytime|strongly_convex|path_informed,
///                 alpha0=, c=, gamma0=, mu=, path_length=, label=
///   expert        kappa=, c=, alpha0=, beta0=, gamma0=,
///                 family=per_round_t|fixed_horizon_T, label=
///
/// Fixed-horizon schedules and the expert recipe resolve against the file's T.
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

}  // namespace oco
