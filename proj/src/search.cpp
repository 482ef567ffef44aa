#include "upsilon/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace upsilon {

const char* to_string(SearchMode mode) noexcept
{
    switch (mode) {
    case SearchMode::exact: return "exact";
    case SearchMode::randomized: return "randomized";
    case SearchMode::greedy: return "greedy";
    }
    return "unknown";
}

UpsilonResult upsilon_exact(const Graph& g, std::size_t cap)
{
    const std::size_t n = g.order();
    if (n > cap || n > 62)
        throw Error(ErrorKind::too_large, "exact search on " + std::to_string(n) +
                                              " vertices exceeds the cap of " + std::to_string(cap));

    std::vector<std::uint32_t> counts(n, 0);
    std::vector<bool> selected(n, false);
    std::size_t unique = 0;
    std::size_t best = 0;
    std::uint64_t best_code = 0;

    const std::uint64_t steps = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < steps; ++step) {
        const auto x = static_cast<Vertex>(std::countr_zero(step));
        const bool adding = !selected[x];
        selected[x] = adding;
        if (adding) {
            for (Vertex w : g.neighbors(x)) {
                const auto c = counts[w]++;
                if (c == 0)
                    ++unique;
                else if (c == 1)
                    --unique;
            }
        } else {
            for (Vertex w : g.neighbors(x)) {
                const auto c = counts[w]--;
                if (c == 1)
                    --unique;
                else if (c == 2)
                    ++unique;
            }
        }
        if (unique > best) {
            best = unique;
            best_code = step ^ (step >> 1);
        }
    }

    UpsilonResult result;
    result.value = best;
    result.witness = VertexSubset(n);
    for (Vertex v = 0; v < n; ++v)
        if ((best_code >> v) & 1U)
            result.witness.insert(v);
    result.mode = SearchMode::exact;
    result.trials_used = static_cast<std::size_t>(steps);
    return result;
}

double expected_unique(const Graph& g, double p)
{
    double total = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::size_t d = g.degree(v);
        if (d == 0)
            continue;
        total += static_cast<double>(d) * p * std::pow(1.0 - p, static_cast<double>(d - 1));
    }
    return total;
}

double log2_max_degree(std::size_t max_degree)
{
    return std::max(1.0, std::log2(static_cast<double>(max_degree)));
}

DyadicChoice dyadic_probability(const DegreeProfile& profile, std::size_t n)
{
    if (!profile.isolated.empty())
        throw Error(ErrorKind::isolated_vertices,
                    std::to_string(profile.isolated.size()) + " isolated vertices; the dyadic bound needs none");
    if (profile.bucket_count() == 0)
        throw Error(ErrorKind::invalid_argument, "graph has no vertices");

    DyadicChoice choice;
    for (std::size_t j = 1; j <= profile.bucket_count(); ++j) {
        const std::size_t size = profile.bucket(j).size();
        if (size > choice.bucket_size) {
            choice.bucket = j;
            choice.bucket_size = size;
        }
    }
    choice.probability = std::ldexp(1.0, -static_cast<int>(choice.bucket));
    choice.guarantee = static_cast<double>(n) / (8.0 * log2_max_degree(profile.max_degree));
    return choice;
}

double best_dyadic_probability(const Graph& g)
{
    const auto stats = degree_stats(g);
    const std::size_t levels = std::max<std::size_t>(1, degree_bucket(stats.max_degree));
    double best_p = 0.5;
    double best_value = -1.0;
    for (std::size_t j = 1; j <= levels; ++j) {
        const double p = std::ldexp(1.0, -static_cast<int>(j));
        const double value = expected_unique(g, p);
        if (value > best_value) {
            best_value = value;
            best_p = p;
        }
    }
    return best_p;
}

VertexSubset sample_selection(const Graph& g, double p, Rng& rng)
{
    VertexSubset sel(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (rng.bernoulli(p))
            sel.insert(v);
    return sel;
}

VertexSubset sample_selection(const Graph& g, double p, std::uint64_t seed)
{
    Rng rng(seed);
    return sample_selection(g, p, rng);
}

UpsilonResult randomized_lower_bound(const Graph& g, const RandomizedOptions& options, const TrialVisitor& visit)
{
    if (options.trials == 0)
        throw Error(ErrorKind::invalid_argument, "randomized search needs at least one trial");
    const auto stats = degree_stats(g);
    const auto choice = dyadic_probability(stats.profile, g.order());
    const double p = options.grid_search_p ? best_dyadic_probability(g) : choice.probability;

    UpsilonResult result;
    result.mode = SearchMode::randomized;
    result.witness = VertexSubset(g.order());
    bool have = false;
    for (std::size_t i = 0; i < options.trials; ++i) {
        auto rng = Rng::split(options.seed, i);
        auto sel = sample_selection(g, p, rng);
        const std::size_t value = unique_neighbor_count(g, sel);
        if (visit)
            visit(i, sel, value);
        if (!have || value > result.value) {
            result.value = value;
            result.witness = std::move(sel);
            have = true;
        }
    }
    result.trials_used = options.trials;
    result.probability = p;
    result.expectation_at_p = expected_unique(g, p);
    result.guarantee = choice.guarantee;
    return result;
}

UpsilonResult randomized_lower_bound(const Graph& g, std::size_t trials, std::uint64_t seed)
{
    return randomized_lower_bound(g, RandomizedOptions{trials, seed, false});
}

UpsilonResult greedy_improve(const Graph& g, const VertexSubset& start, std::size_t budget)
{
    const std::size_t n = g.order();
    if (start.universe() != n)
        throw Error(ErrorKind::invalid_argument, "start subset is over a different vertex count");

    VertexSubset sel = start;
    auto counts = selected_neighbor_counts(g, sel);
    std::size_t value = 0;
    for (auto c : counts)
        value += c == 1 ? 1 : 0;

    // Change in |U| at a neighbor whose selected count goes up / down by one.
    auto gain_up = [](std::uint32_t c) { return c == 0 ? 1 : (c == 1 ? -1 : 0); };
    auto gain_down = [](std::uint32_t c) { return c == 1 ? -1 : (c == 2 ? 1 : 0); };

    std::size_t toggles = 0;
    while (toggles < budget) {
        long best_gain = 0;
        Vertex best_vertex = 0;
        for (Vertex x = 0; x < n; ++x) {
            long gain = 0;
            if (sel.contains(x)) {
                for (Vertex w : g.neighbors(x))
                    gain += gain_down(counts[w]);
            } else {
                for (Vertex w : g.neighbors(x))
                    gain += gain_up(counts[w]);
            }
            if (gain > best_gain) {
                best_gain = gain;
                best_vertex = x;
            }
        }
        if (best_gain <= 0)
            break;
        const bool adding = !sel.contains(best_vertex);
        sel.toggle(best_vertex);
        for (Vertex w : g.neighbors(best_vertex)) {
            if (adding)
                ++counts[w];
            else
                --counts[w];
        }
        value += static_cast<std::size_t>(best_gain);
        ++toggles;
    }

    UpsilonResult result;
    result.value = value;
    result.witness = std::move(sel);
    result.mode = SearchMode::greedy;
    result.trials_used = toggles;
    return result;
}

} // namespace upsilon
