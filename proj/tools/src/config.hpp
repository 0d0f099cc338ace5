#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "striptr/strip/geometry.hpp"

namespace striptr::cli {

enum class OutputFormat { table, records };

/// Everything a command needs. Values come from the config file; command-line
/// flags override them afterwards.
struct RunConfig {
    StripGeometry geometry;
    int g_max = 3;
    long precision_bits = 256;
    int q_order = 3;
    int degree = 2;
    OutputFormat format = OutputFormat::table;
    unsigned long seed = 0;
};

/// Default precision: STRIPTR_PRECISION if set and valid, else 256.
long default_precision();

/// Builds a RunConfig from JSON of the form
///   {"alphas": ["Q"], "betas": [], "framing": 0,
///    "kahler_values": {"Q": "1/2"}, "kahler_variables": ["Q"],
///    "g_max": 3, "precision_bits": 256, "q_order": 3, "degree": 2, "seed": 0}
/// Parameters are rational strings, or monomials evaluated through
/// kahler_values (which then also serve as labels). Rational parameters can
/// be labelled with "alpha_labels"/"beta_labels". Any Kahler key attaches a
/// Kahler map; kahler_variables defaults to every name in use. Throws
/// ParseError for malformed input.
RunConfig parse_config(const nlohmann::json &j);
RunConfig load_config(const std::filesystem::path &path);

} // namespace striptr::cli
