// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace oco {

// invalid-argument conditions use std::invalid_argument directly.

struct UnsupportedOperation : std::runtime_error {
    explicit UnsupportedOperation(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleProblem : std::runtime_error {
    explicit InfeasibleProblem(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oco
