#pragma once

#include <stdexcept>
#include <string>

namespace bt {

// Invalid or inconsistent configuration (unknown keys, bad values).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / file-format failures (bad magic, truncation, count mismatch).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite loss or gradient encountered mid-run.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand shapes do not conform for an operation. Carries the operation name
// and the offending shape strings.
struct ShapeError : std::runtime_error {
    std::string op;
    std::string lhs_shape;
    std::string rhs_shape;
    ShapeError(std::string op_, std::string lhs, std::string rhs)
        : std::runtime_error("shape mismatch in " + op_ + ": " + lhs + " vs " + rhs),
          op(std::move(op_)), lhs_shape(std::move(lhs)), rhs_shape(std::move(rhs)) {}
};

} // namespace bt
