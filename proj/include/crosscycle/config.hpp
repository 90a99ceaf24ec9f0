#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "crosscycle/families.hpp"

namespace crosscycle {

// Malformed or inconsistent run configuration; the executable maps this to
// exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fully validated run description. Exactly one of example / system is set.
// When box is present, only solutions inside it are reported.
struct RunConfig {
    std::optional<std::string> example;
    std::optional<PiecewiseSystem> system;
    double tol = 1e-9;       // algebraic solve tolerance
    double ode_tol = 1e-12;  // integrator tolerance for cycle verification
    std::optional<std::array<double, 4>> box;  // x_lo, x_hi, y_lo, y_hi
    std::string out_path;                      // empty writes to stdout
    std::string svg_path;                      // empty suppresses the figure
    std::string format = "csv";                // csv | json
    bool zoom = false;
};

// Parses the documented JSON schema (version 1). Coefficients are exact:
// JSON integers, "p/q" fractions, or decimal strings. Non-integer JSON
// number literals are rejected so no value silently passes through binary
// floating point. Throws ConfigError naming the offending field.
RunConfig parse_config(const std::string& json_text);

// parse_config over the contents of path.
RunConfig load_config(const std::string& path);

// The system a config denotes: a registry lookup or the inline system.
const PiecewiseSystem& config_system(const RunConfig& cfg);

}  // namespace crosscycle
