#pragma once
// ============================================================================
// config: run configuration, file format, validation
//
// The config file is a flat key = value text file with dotted keys (one
// nesting level), '#' comments, and blank lines. CLI flags override file
// values. Validation failures carry the offending line number and map to
// exit code 2.
// ============================================================================

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mdimlab/common.hpp"

namespace mdim {

struct run_config {
    std::string system;               // cantor-psi | cantor-phi | cantor-shift |
                                      // interval-phi | interval-psi | interval-varphi
    double alpha = 0;                 // required for cantor systems
    std::int32_t j = 1;               // cantor-psi tower index
    std::int32_t s = 1;               // interval tower parameters
    std::int32_t r = 1;

    std::string ladder_kind = "pinned";   // pinned | geometric | explicit
    std::int32_t k_max = 0;               // pinned/geometric rung count
    std::vector<double> ladder_values;    // explicit ladder

    std::int32_t n1 = 0;              // horizon window
    std::int32_t n2 = 0;

    std::size_t grid = 4096;          // interval sample size
    std::size_t family_cap = 2048;    // word family materialization cap
    std::uint64_t seed = 20260815;

    double snowflake_a = 0;           // 0 = no wrapper
    double gauge_a = 0;               // 0 = no gauge wrapper (power gauge)

    std::string out_dir = "out";
    bool deterministic = false;

    std::string suite = "all";        // verify
    std::string parameter;            // sweep
    std::vector<double> values;       // sweep
};

// raw key/value view of a config file; insertion order preserved separately
struct config_file {
    std::map<std::string, std::string> kv;
    std::vector<std::string> order;
};

config_file parse_config_file(const std::string& path);
config_file parse_config_text(const std::string& text, const std::string& origin);

// applies file keys onto cfg (unknown keys are validation errors)
void apply_config_file(run_config& cfg, const config_file& f);

// full cross-field validation; every command runs this before acting
void validate_config(const run_config& cfg, const std::string& command);

// canonical serialization (the export-config payload, also echoed in report
// headers); stable key order, values in %.9g
std::string render_config(const run_config& cfg);

// helpers shared with the CLI
std::vector<double> parse_double_list(const std::string& csv, const std::string& what);
void parse_window(const std::string& text, std::int32_t* n1, std::int32_t* n2);

// resolved scale ladder for the configured system (pinned rungs for word
// systems, geometric 3^-q for interval systems, or the explicit list)
std::vector<double> resolve_ladder(const run_config& cfg);

bool is_cantor_system(const std::string& system);
bool is_interval_system(const std::string& system);

}  // namespace mdim
