#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Invalid configuration (e.g. more correction terms than implemented).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A hard resource guard was exceeded (sieve size, exponent range, ...).
struct CapacityError : std::length_error {
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Adaptive refinement hit its depth limit before reaching the tolerance.
struct ToleranceError : std::runtime_error {
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

// A high-precision input does not carry enough certified digits, or the
// precision-escalation loop hit its limit.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zetalab
