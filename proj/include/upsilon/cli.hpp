#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace upsilon::cli {

inline constexpr int schema_version = 1;

/// Everything a run depends on; a report echoes it so runs can be replayed.
struct RunConfig {
    std::string command;

    // positional arguments of the generators
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t delta = 0;
    std::int64_t height = 0;
    std::uint64_t k = 0;

    std::string input;         // graph file (edge list, or .json)
    std::string output;        // generated artifact: graph file, curve file, or bundle directory
    std::string graph_output;  // gen-torus: intersection graph edge list
    std::string bundle;        // certify / trace / upsilon: bundle directory
    std::string subset;        // trace: JSON array of vertex indices

    std::uint64_t seed = 1;
    std::string seed_source = "default";  // default | flag | env
    std::size_t trials = 100;
    double slack = 0.1;
    std::size_t max_attempts = 10;
    std::size_t exact_cap = 24;
    std::size_t curve_budget = 2048;
    std::size_t greedy_budget = 1000;
    std::size_t mixing_samples = 1000;
    std::string mode = "exact";    // exact | random | greedy
    std::string format = "json";   // json | csv
    bool grid_p = false;
    std::vector<std::pair<std::size_t, std::size_t>> sweep;  // report: (n, Δ) pairs
};

struct RunOutput {
    int exit_code = 0;
    nlohmann::json report;
    std::string table;  // CSV body when format == "csv"
};

nlohmann::json config_to_json(const RunConfig& config);

/// Executes one subcommand. Throws upsilon::Error on bad input or infeasible
/// parameters; verification failures are reported with exit_code 1.
RunOutput run(const RunConfig& config);

/// The report without wall-clock fields, for run-to-run comparison.
nlohmann::json strip_timing(nlohmann::json report);

/// Parses "n:Δ,n:Δ,..." sweep lists.
std::vector<std::pair<std::size_t, std::size_t>> parse_sweep(const std::string& text);

} // namespace upsilon::cli
