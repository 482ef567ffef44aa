#include "upsilon/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "upsilon/bundle_io.hpp"
#include "upsilon/enemy.hpp"
#include "upsilon/generators.hpp"
#include "upsilon/graph_io.hpp"
#include "upsilon/search.hpp"
#include "upsilon/torus.hpp"

namespace upsilon::cli {

using nlohmann::json;

namespace {

json witness_json(const VertexSubset& s)
{
    return s.members();
}

json result_json(const UpsilonResult& r)
{
    json out = {{"mode", to_string(r.mode)},
                {"value", r.value},
                {"witness", witness_json(r.witness)},
                {"trials_used", r.trials_used},
                {"p", nullptr},
                {"expectation_at_p", nullptr},
                {"guarantee", nullptr}};
    if (r.probability)
        out["p"] = *r.probability;
    if (r.expectation_at_p)
        out["expectation_at_p"] = *r.expectation_at_p;
    if (r.guarantee)
        out["guarantee"] = *r.guarantee;
    return out;
}

json trace_json(const ProofTrace& trace, const EnemyParams& params)
{
    auto buckets = json::array();
    for (std::size_t j = 1; j <= trace.buckets.size(); ++j) {
        const auto& b = trace.buckets[j - 1];
        buckets.push_back({{"j", j}, {"edges_from_selection", b.edges}, {"unique", b.unique_count}});
    }
    auto tail = json::array();
    for (const auto& tb : trace.tail)
        tail.push_back({{"j", tb.j}, {"c", tb.c}, {"bound", tb.bound}, {"holds", tb.holds}});
    json out = {{"selection_size", trace.selection.size()},
                {"total_unique", trace.total_unique},
                {"buckets", std::move(buckets)},
                {"j0", nullptr},
                {"pivot", nullptr},
                {"pivot_edges", trace.pivot_edges},
                {"head", {{"unique", trace.head_unique}, {"edges", trace.head_edges}, {"bound", 2 * params.t},
                          {"holds", trace.head_holds}}},
                {"middle", {{"last", trace.middle_last}, {"unique", trace.middle_unique},
                            {"bound", trace.middle_bound}, {"holds", trace.middle_holds}}},
                {"tail", {{"unique", trace.tail_unique}, {"buckets", std::move(tail)}, {"holds", trace.tail_holds}}},
                {"pivot_holds", trace.pivot_holds},
                {"holds", trace.holds()}};
    if (trace.j0)
        out["j0"] = *trace.j0;
    if (trace.pivot)
        out["pivot"] = *trace.pivot;
    return out;
}

json params_json(const EnemyParams& p)
{
    return {{"n_target", p.n_target}, {"delta_target", p.delta_target}, {"k", p.k},
            {"t", p.t},               {"vertices", p.vertex_count()},   {"max_degree", p.max_degree()}};
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::invalid_argument, what);
}

Graph input_graph(const RunConfig& c)
{
    if (!c.input.empty())
        return load_graph(c.input);
    if (!c.bundle.empty())
        return load_bundle(c.bundle).graph;
    throw Error(ErrorKind::invalid_argument, "an --input graph or --bundle directory is required");
}

RandomizedOptions randomized_options(const RunConfig& c)
{
    return {c.trials, c.seed, c.grid_p};
}

// Randomized search followed by greedy improvement of its best witness.
std::pair<UpsilonResult, UpsilonResult> search_pair(const Graph& g, const RunConfig& c)
{
    auto randomized = randomized_lower_bound(g, randomized_options(c));
    auto greedy = greedy_improve(g, randomized.witness, c.greedy_budget);
    return {std::move(randomized), std::move(greedy)};
}

RunOutput cmd_gen_enemy(const RunConfig& c)
{
    require(!c.output.empty(), "gen-enemy needs --out <directory>");
    const auto params = derive_params(c.n, c.delta);
    const auto bundle = assemble_enemy_graph(params, c.slack, c.max_attempts, c.seed);
    save_bundle(c.output, bundle);

    auto certs = json::array();
    for (const auto& cert : bundle.certificates)
        certs.push_back({{"i", cert.i}, {"j", cert.j}, {"d", cert.degree}, {"lambda2", cert.lambda2},
                         {"threshold", cert.threshold}, {"attempts", cert.attempts}});
    RunOutput out;
    out.report["result"] = {{"params", params_json(params)},
                            {"edges", bundle.graph.num_edges()},
                            {"max_degree", degree_stats(bundle.graph).max_degree},
                            {"certificates", std::move(certs)}};
    return out;
}

RunOutput cmd_gen_random(const RunConfig& c)
{
    require(!c.output.empty(), "gen-random needs --out <file>");
    const auto g = random_simple_graph(c.n, c.m, c.seed);
    if (c.output.ends_with(".json")) {
        std::ofstream f(c.output, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::io, "cannot write " + c.output);
        f << graph_to_json(g).dump() << '\n';
    } else {
        save_edge_list(c.output, g);
    }
    const auto stats = degree_stats(g);
    RunOutput out;
    out.report["result"] = {{"n", g.order()}, {"m", g.num_edges()}, {"max_degree", stats.max_degree},
                            {"has_isolated", stats.has_isolated}};
    return out;
}

RunOutput cmd_gen_torus(const RunConfig& c)
{
    const auto found = max_k_system(c.height, c.k, c.curve_budget);
    const auto g = to_intersection_graph(found.witness);
    if (!c.output.empty()) {
        std::ofstream f(c.output, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::io, "cannot write " + c.output);
        f << curves_to_json(found.witness.curves).dump() << '\n';
    }
    if (!c.graph_output.empty())
        save_edge_list(c.graph_output, g);
    RunOutput out;
    out.report["result"] = {{"height", c.height},
                            {"k", c.k},
                            {"size", found.size},
                            {"curves", curves_to_json(found.witness.curves)},
                            {"is_k_system", is_k_system(found.witness.curves, c.k)},
                            {"intersection_graph", graph_to_json(g)}};
    return out;
}

RunOutput cmd_upsilon(const RunConfig& c)
{
    const auto g = input_graph(c);
    const auto stats = degree_stats(g);
    UpsilonResult result;
    if (c.mode == "exact") {
        result = upsilon_exact(g, c.exact_cap);
    } else if (c.mode == "random") {
        result = randomized_lower_bound(g, randomized_options(c));
    } else if (c.mode == "greedy") {
        VertexSubset start(g.order());
        std::optional<UpsilonResult> seeded;
        if (!stats.has_isolated && g.order() > 0) {
            seeded = randomized_lower_bound(g, randomized_options(c));
            start = seeded->witness;
        }
        result = greedy_improve(g, start, c.greedy_budget);
        if (seeded) {
            result.probability = seeded->probability;
            result.expectation_at_p = seeded->expectation_at_p;
            result.guarantee = seeded->guarantee;
        }
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown mode '" + c.mode + "' (exact | random | greedy)");
    }
    RunOutput out;
    out.report["result"] = result_json(result);
    out.report["result"]["n"] = g.order();
    out.report["result"]["max_degree"] = stats.max_degree;
    return out;
}

RunOutput cmd_certify(const RunConfig& c)
{
    require(!c.bundle.empty(), "certify needs --bundle <directory>");
    const auto bundle = load_bundle(c.bundle);
    auto blocks = json::array();
    bool ok = true;
    std::size_t index = 0;
    for (std::size_t i = 1; i <= bundle.params.k; ++i) {
        for (std::size_t j = i; j <= bundle.params.k; ++j, ++index) {
            const auto block = extract_block(bundle, i, j);
            bool regular = true;
            std::vector<std::size_t> left(block.t, 0), right(block.t, 0);
            for (const auto& e : block.edges) {
                ++left[e.u];
                ++(block.bipartite ? right[e.v] : left[e.v]);
            }
            for (std::size_t x = 0; x < block.t; ++x)
                regular = regular && left[x] == block.degree && (!block.bipartite || right[x] == block.degree);

            const auto& stored = bundle.certificate(i, j);
            PowerIterationOptions power;
            power.seed = split_seed(c.seed, index);
            const double lambda2 = second_eigenvalue(block, power);
            const auto recheck = certify(i, j, block.degree, lambda2, stored.slack);
            const auto mixing = sampled_mixing(bundle, i, j, c.mixing_samples, split_seed(c.seed, 1000 + index));
            const bool block_ok = regular && recheck.certified && mixing.passed == mixing.checks;
            ok = ok && block_ok;
            blocks.push_back({{"i", i},
                              {"j", j},
                              {"d", block.degree},
                              {"regular", regular},
                              {"stored_lambda2", stored.lambda2},
                              {"lambda2", lambda2},
                              {"threshold", recheck.threshold},
                              {"certified", recheck.certified},
                              {"mixing_checks", mixing.checks},
                              {"mixing_passed", mixing.passed},
                              {"mixing_worst_ratio", mixing.worst_ratio},
                              {"ok", block_ok}});
        }
    }
    RunOutput out;
    out.exit_code = ok ? 0 : 1;
    out.report["result"] = {{"params", params_json(bundle.params)}, {"blocks", std::move(blocks)}, {"ok", ok}};
    return out;
}

RunOutput cmd_trace(const RunConfig& c)
{
    require(!c.bundle.empty(), "trace needs --bundle <directory>");
    const auto bundle = load_bundle(c.bundle);
    const std::size_t n = bundle.graph.order();
    auto traces = json::array();
    bool ok = true;
    auto add = [&](const std::string& source, const VertexSubset& sel) {
        const auto trace = proof_trace(bundle, sel);
        ok = ok && trace.holds() && trace.total_unique == unique_neighbor_count(bundle.graph, sel);
        auto entry = trace_json(trace, bundle.params);
        entry["source"] = source;
        traces.push_back(std::move(entry));
    };
    if (!c.subset.empty()) {
        std::ifstream f(c.subset, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::io, "cannot read " + c.subset);
        json j;
        try {
            f >> j;
            const auto members = j.get<std::vector<Vertex>>();
            add("file", VertexSubset::from_indices(n, members));
        } catch (const json::exception& ex) {
            throw Error(ErrorKind::parse, c.subset + ": " + ex.what());
        }
    } else {
        auto [randomized, greedy] = search_pair(bundle.graph, c);
        add("randomized", randomized.witness);
        add("greedy", greedy.witness);
    }
    RunOutput out;
    out.exit_code = ok ? 0 : 1;
    out.report["result"] = {{"params", params_json(bundle.params)}, {"traces", std::move(traces)}, {"ok", ok}};
    return out;
}

RunOutput cmd_report(const RunConfig& c)
{
    auto sweep = c.sweep;
    if (sweep.empty())
        sweep = {{256, 16}, {1024, 64}, {2048, 256}};
    auto rows = json::array();
    std::ostringstream csv;
    csv << "n_target,delta_target,k,t,vertices,best_randomized,best_greedy,expectation_at_p,"
           "n_over_log_delta,n_loglog_over_log_delta,ratio\n";
    for (std::size_t idx = 0; idx < sweep.size(); ++idx) {
        const auto [n, delta] = sweep[idx];
        const auto params = derive_params(n, delta);
        const auto bundle = assemble_enemy_graph(params, c.slack, c.max_attempts, split_seed(c.seed, idx));
        auto cfg = c;
        cfg.seed = split_seed(c.seed, 1000 + idx);
        auto [randomized, greedy] = search_pair(bundle.graph, cfg);

        const double vertices = static_cast<double>(params.vertex_count());
        const double log_delta = std::log2(static_cast<double>(delta));
        const double loglog = std::log2(log_delta);
        const double best = static_cast<double>(std::max(randomized.value, greedy.value));
        const double ratio = best * log_delta / (vertices * loglog);
        rows.push_back({{"n_target", n},
                        {"delta_target", delta},
                        {"k", params.k},
                        {"t", params.t},
                        {"vertices", params.vertex_count()},
                        {"best_randomized", randomized.value},
                        {"best_greedy", greedy.value},
                        {"expectation_at_p", *randomized.expectation_at_p},
                        {"n_over_log_delta", vertices / log_delta},
                        {"n_loglog_over_log_delta", vertices * loglog / log_delta},
                        {"ratio", ratio}});
        const auto& r = rows.back();
        csv << n << ',' << delta << ',' << params.k << ',' << params.t << ',' << params.vertex_count() << ','
            << randomized.value << ',' << greedy.value << ',' << r["expectation_at_p"].dump() << ','
            << r["n_over_log_delta"].dump() << ',' << r["n_loglog_over_log_delta"].dump() << ','
            << r["ratio"].dump() << '\n';
    }
    RunOutput out;
    out.report["result"] = {{"rows", std::move(rows)}};
    if (c.format == "csv")
        out.table = csv.str();
    return out;
}

} // namespace

json config_to_json(const RunConfig& c)
{
    auto sweep = json::array();
    for (const auto& [n, delta] : c.sweep)
        sweep.push_back({n, delta});
    return {{"command", c.command},
            {"n", c.n},
            {"m", c.m},
            {"delta", c.delta},
            {"height", c.height},
            {"k", c.k},
            {"input", c.input},
            {"output", c.output},
            {"graph_output", c.graph_output},
            {"bundle", c.bundle},
            {"subset", c.subset},
            {"seed", c.seed},
            {"seed_source", c.seed_source},
            {"trials", c.trials},
            {"slack", c.slack},
            {"max_attempts", c.max_attempts},
            {"exact_cap", c.exact_cap},
            {"curve_budget", c.curve_budget},
            {"greedy_budget", c.greedy_budget},
            {"mixing_samples", c.mixing_samples},
            {"mode", c.mode},
            {"format", c.format},
            {"grid_p", c.grid_p},
            {"sweep", std::move(sweep)}};
}

RunOutput run(const RunConfig& config)
{
    if (config.format != "json" && config.format != "csv")
        throw Error(ErrorKind::invalid_argument, "unknown format '" + config.format + "' (json | csv)");

    const auto start = std::chrono::steady_clock::now();
    RunOutput out;
    if (config.command == "gen-enemy")
        out = cmd_gen_enemy(config);
    else if (config.command == "gen-random")
        out = cmd_gen_random(config);
    else if (config.command == "gen-torus")
        out = cmd_gen_torus(config);
    else if (config.command == "upsilon")
        out = cmd_upsilon(config);
    else if (config.command == "certify")
        out = cmd_certify(config);
    else if (config.command == "trace")
        out = cmd_trace(config);
    else if (config.command == "report")
        out = cmd_report(config);
    else
        throw Error(ErrorKind::invalid_argument, "unknown command '" + config.command + "'");
    const auto elapsed = std::chrono::steady_clock::now() - start;

    out.report["schema_version"] = schema_version;
    out.report["command"] = config.command;
    out.report["config"] = config_to_json(config);
    out.report["wall_clock_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    return out;
}

json strip_timing(json report)
{
    report.erase("wall_clock_ms");
    return report;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sweep(const std::string& text)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos)
                throw std::invalid_argument(item);
            std::size_t used = 0;
            const auto n = std::stoull(item.substr(0, colon), &used);
            const auto rest = item.substr(colon + 1);
            const auto delta = std::stoull(rest, &used);
            if (used != rest.size())
                throw std::invalid_argument(item);
            out.emplace_back(n, delta);
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "sweep entry '" + item + "' is not n:Δ");
        }
    }
    return out;
}

} // namespace upsilon::cli
