#pragma once

#include <stdexcept>
#include <string>

namespace semsup {

// Exit-code mapping used by the CLI: 2 / 3 / 4 / 5 respectively.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IntegratorError : std::runtime_error {
    explicit IntegratorError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleSizeError : std::runtime_error {
    explicit OracleSizeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace semsup
