// Command-line front end: generation, Υ search, certification, tracing, sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "upsilon/cli.hpp"
#include "upsilon/error.hpp"

namespace {

using upsilon::cli::RunConfig;

void emit_error(const std::string& kind, const std::string& message)
{
    nlohmann::json err = {{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig config;
    std::string report_path;
    std::string sweep;

    if (const char* env = std::getenv("UPSILON_SEED")) {
        try {
            config.seed = std::stoull(env);
            config.seed_source = "env";
        } catch (const std::exception&) {
            emit_error("invalid_argument", "UPSILON_SEED is not an unsigned integer");
            return 2;
        }
    }

    CLI::App app{"Unique-neighbor invariant toolkit"};
    app.require_subcommand(1);
    app.add_option("--report", report_path, "Write the report here instead of stdout");

    auto add_seed = [&](CLI::App* sub) {
        sub->add_option_function<std::uint64_t>(
               "--seed",
               [&](const std::uint64_t& s) {
                   config.seed = s;
                   config.seed_source = "flag";
               },
               "RNG seed (default: $UPSILON_SEED or 1)");
    };
    auto add_search = [&](CLI::App* sub) {
        add_seed(sub);
        sub->add_option("--trials", config.trials, "Randomized trials");
        sub->add_option("--budget", config.greedy_budget, "Greedy toggle budget");
        sub->add_flag("--grid-p", config.grid_p, "Pick the best dyadic p by the closed-form expectation");
    };
    auto add_assembly = [&](CLI::App* sub) {
        sub->add_option("--slack", config.slack, "Ramanujan slack multiplier");
        sub->add_option("--max-attempts", config.max_attempts, "Resampling attempts per block");
    };

    auto* gen_enemy = app.add_subcommand("gen-enemy", "Build and certify an enemy graph bundle");
    gen_enemy->add_option("n", config.n)->required();
    gen_enemy->add_option("delta", config.delta)->required();
    gen_enemy->add_option("--out", config.output, "Bundle directory")->required();
    add_seed(gen_enemy);
    add_assembly(gen_enemy);

    auto* gen_random = app.add_subcommand("gen-random", "Uniform simple graph with n vertices and m edges");
    gen_random->add_option("n", config.n)->required();
    gen_random->add_option("m", config.m)->required();
    gen_random->add_option("--out", config.output, "Graph file (.json for JSON)")->required();
    add_seed(gen_random);

    auto* gen_torus = app.add_subcommand("gen-torus", "Maximum k-system of torus curves up to a height");
    gen_torus->add_option("height", config.height)->required();
    gen_torus->add_option("k", config.k)->required();
    gen_torus->add_option("--out", config.output, "Curve system JSON");
    gen_torus->add_option("--graph-out", config.graph_output, "Intersection graph edge list");
    gen_torus->add_option("--curve-budget", config.curve_budget, "Maximum number of curves searched");

    auto* upsilon_cmd = app.add_subcommand("upsilon", "Compute or bound the unique-neighbor invariant");
    upsilon_cmd->add_option("--input", config.input, "Graph file");
    upsilon_cmd->add_option("--bundle", config.bundle, "Bundle directory (uses its graph)");
    upsilon_cmd->add_option("--mode", config.mode, "exact | random | greedy")
        ->check(CLI::IsMember({"exact", "random", "greedy"}));
    upsilon_cmd->add_option("--cap", config.exact_cap, "Largest n for exact search");
    add_search(upsilon_cmd);

    auto* certify_cmd = app.add_subcommand("certify", "Re-verify bundle certificates and sampled mixing");
    certify_cmd->add_option("--bundle", config.bundle)->required();
    certify_cmd->add_option("--samples", config.mixing_samples, "Mixing checks per block");
    add_seed(certify_cmd);

    auto* trace_cmd = app.add_subcommand("trace", "Trace the upper-bound decomposition on a subset");
    trace_cmd->add_option("--bundle", config.bundle)->required();
    trace_cmd->add_option("--subset", config.subset, "JSON array of vertex indices (default: search output)");
    add_search(trace_cmd);

    auto* report_cmd = app.add_subcommand("report", "Sweep enemy graphs and tabulate Υ estimates");
    report_cmd->add_option("--sweep", sweep, "Comma-separated n:Δ pairs");
    report_cmd->add_option("--format", config.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    add_search(report_cmd);
    add_assembly(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 2;
    }

    int exit_code = 0;
    try {
        config.command = app.get_subcommands().front()->get_name();
        if (!sweep.empty())
            config.sweep = upsilon::cli::parse_sweep(sweep);
        const auto out = upsilon::cli::run(config);
        const std::string body = !out.table.empty() ? out.table : out.report.dump(2) + "\n";
        if (report_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(report_path, std::ios::binary);
            if (!f)
                throw upsilon::Error(upsilon::ErrorKind::io, "cannot write " + report_path);
            f << body;
        }
        exit_code = out.exit_code;
    } catch (const upsilon::Error& e) {
        emit_error(upsilon::to_string(e.kind()), e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return exit_code;
}
