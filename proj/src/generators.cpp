#include "upsilon/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "upsilon/rng.hpp"

namespace upsilon {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) noexcept
{
    return (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
}

} // namespace

Graph random_simple_graph(std::size_t n, std::size_t m, std::uint64_t seed)
{
    const std::uint64_t pairs = n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2;
    if (m > pairs)
        throw Error(ErrorKind::infeasible, "cannot place " + std::to_string(m) + " edges on " +
                                               std::to_string(n) + " vertices");

    // Sample whichever of the edge set and its complement is smaller.
    const bool complement = m > pairs / 2;
    const std::uint64_t draws = complement ? pairs - m : m;

    Rng rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(draws * 2);
    std::vector<Edge> picked;
    picked.reserve(draws);
    while (picked.size() < draws) {
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n));
        if (u == v || !chosen.insert(pair_key(u, v)).second)
            continue;
        picked.push_back({std::min(u, v), std::max(u, v)});
    }
    if (!complement)
        return build_graph(n, picked);

    std::vector<Edge> edges;
    edges.reserve(m);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!chosen.contains(pair_key(u, v)))
                edges.push_back({u, v});
    return build_graph(n, edges);
}

} // namespace upsilon
