#include "upsilon/graph.hpp"

#include <algorithm>
#include <string>

namespace upsilon {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_graph: return "invalid_graph";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::too_large: return "too_large";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::isolated_vertices: return "isolated_vertices";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::certification_failed: return "certification_failed";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

// VertexSubset

VertexSubset::VertexSubset(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0)
{
}

VertexSubset VertexSubset::from_indices(std::size_t universe, std::span<const Vertex> indices)
{
    VertexSubset s(universe);
    for (Vertex v : indices) {
        if (v >= universe)
            throw Error(ErrorKind::invalid_argument,
                        "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(universe));
        if (s.contains(v))
            throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " listed twice");
        s.insert(v);
    }
    return s;
}

VertexSubset VertexSubset::full(std::size_t universe)
{
    return range(universe, 0, universe);
}

VertexSubset VertexSubset::range(std::size_t universe, std::size_t first, std::size_t count)
{
    VertexSubset s(universe);
    for (std::size_t v = first; v < first + count; ++v)
        s.insert(static_cast<Vertex>(v));
    return s;
}

std::size_t VertexSubset::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<Vertex> VertexSubset::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const noexcept
{
    if (other.universe_ != universe_)
        return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0)
            return false;
    return true;
}

std::size_t VertexSubset::intersection_size(const VertexSubset& other) const noexcept
{
    std::size_t total = 0;
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w)
        total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return total;
}

// Graph

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    if (u >= n_ || v >= n_)
        return false;
    if (has_neighbor_bits())
        return (neighbor_bits_[u * bit_words_ + (v >> 6)] >> (v & 63)) & 1U;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

std::string pair_text(const Edge& e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::size_t bit_word_budget)
{
    if (n > UINT32_MAX)
        throw Error(ErrorKind::too_large, "vertex count exceeds 32-bit index range");

    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw Error(ErrorKind::invalid_graph,
                        "edge " + pair_text(e) + " has an endpoint >= n=" + std::to_string(n));
        if (e.u == e.v)
            throw Error(ErrorKind::invalid_graph, "self-loop " + pair_text(e));
        normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(normalized.begin(), normalized.end());
    if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end())
        throw Error(ErrorKind::invalid_graph, "duplicate edge " + pair_text(*dup));

    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : normalized) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];
    g.adjacency_.resize(2 * normalized.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lexicographic edge order fills each list in increasing neighbor order.
    for (const Edge& e : normalized)
        g.adjacency_[cursor[e.v]++] = e.u;
    for (const Edge& e : normalized)
        g.adjacency_[cursor[e.u]++] = e.v;

    const std::size_t words = (n + 63) / 64;
    if (n > 0 && words <= bit_word_budget) {
        g.bit_words_ = words;
        g.neighbor_bits_.assign(n * words, 0);
        for (const Edge& e : normalized) {
            g.neighbor_bits_[e.u * words + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
            g.neighbor_bits_[e.v * words + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
        }
    }
    g.edges_ = std::move(normalized);
    return g;
}

std::size_t degree_bucket(std::size_t degree) noexcept
{
    if (degree == 0)
        return 0;
    if (degree <= 2)
        return 1;
    return static_cast<std::size_t>(std::bit_width(degree - 1));
}

DegreeStats degree_stats(const Graph& g)
{
    DegreeStats stats;
    const std::size_t n = g.order();
    for (Vertex v = 0; v < n; ++v)
        stats.max_degree = std::max(stats.max_degree, g.degree(v));

    stats.profile.max_degree = stats.max_degree;
    stats.profile.isolated = VertexSubset(n);
    stats.profile.buckets.assign(degree_bucket(stats.max_degree), VertexSubset(n));
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t j = degree_bucket(g.degree(v));
        if (j == 0) {
            stats.profile.isolated.insert(v);
            stats.has_isolated = true;
        } else {
            stats.profile.buckets[j - 1].insert(v);
        }
    }
    return stats;
}

std::vector<std::uint32_t> selected_neighbor_counts(const Graph& g, const VertexSubset& sel)
{
    std::vector<std::uint32_t> counts(g.order(), 0);
    sel.for_each([&](Vertex s) {
        for (Vertex w : g.neighbors(s))
            ++counts[w];
    });
    return counts;
}

namespace {

// Bit-vector path: |N(v) & sel| == 1 without touching adjacency lists.
bool has_unique_selected_neighbor(const Graph& g, const VertexSubset& sel, Vertex v) noexcept
{
    auto nb = g.neighbor_bits(v);
    auto sw = sel.words();
    int seen = 0;
    for (std::size_t w = 0; w < nb.size(); ++w) {
        seen += std::popcount(nb[w] & sw[w]);
        if (seen > 1)
            return false;
    }
    return seen == 1;
}

} // namespace

VertexSubset unique_neighbors(const Graph& g, const VertexSubset& sel)
{
    const std::size_t n = g.order();
    VertexSubset out(n);
    if (g.has_neighbor_bits()) {
        for (Vertex v = 0; v < n; ++v)
            if (has_unique_selected_neighbor(g, sel, v))
                out.insert(v);
        return out;
    }
    auto counts = selected_neighbor_counts(g, sel);
    for (Vertex v = 0; v < n; ++v)
        if (counts[v] == 1)
            out.insert(v);
    return out;
}

std::size_t unique_neighbor_count(const Graph& g, const VertexSubset& sel)
{
    const std::size_t n = g.order();
    std::size_t total = 0;
    if (g.has_neighbor_bits()) {
        for (Vertex v = 0; v < n; ++v)
            total += has_unique_selected_neighbor(g, sel, v) ? 1 : 0;
        return total;
    }
    auto counts = selected_neighbor_counts(g, sel);
    for (auto c : counts)
        total += c == 1 ? 1 : 0;
    return total;
}

std::size_t edges_between(const Graph& g, const VertexSubset& a, const VertexSubset& b)
{
    // The count is 1_a^T A 1_b, symmetric in (a, b); walk the smaller side.
    const bool a_smaller = a.size() <= b.size();
    const VertexSubset& walk = a_smaller ? a : b;
    const VertexSubset& probe = a_smaller ? b : a;
    std::size_t total = 0;
    walk.for_each([&](Vertex u) {
        for (Vertex w : g.neighbors(u))
            total += probe.contains(w) ? 1 : 0;
    });
    return total;
}

} // namespace upsilon
