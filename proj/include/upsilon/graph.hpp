#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "upsilon/error.hpp"

namespace upsilon {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

/// A set of vertices of a graph on n vertices, stored as a bit vector.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::size_t universe);

    /// Throws Error(invalid_argument) on an index >= universe or a repeated index.
    static VertexSubset from_indices(std::size_t universe, std::span<const Vertex> indices);
    static VertexSubset full(std::size_t universe);
    /// The contiguous range [first, first + count).
    static VertexSubset range(std::size_t universe, std::size_t first, std::size_t count);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const noexcept
    {
        return (words_[v >> 6] >> (v & 63)) & 1U;
    }
    void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void toggle(Vertex v) noexcept { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }

    std::vector<Vertex> members() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// True when every member of *this is also in other.
    bool is_subset_of(const VertexSubset& other) const noexcept;
    std::size_t intersection_size(const VertexSubset& other) const noexcept;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const VertexSubset&) const = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted neighbor lists (CSR). Graphs whose order fits
/// the bit-word budget additionally carry one neighbor bit vector per vertex.
class Graph {
public:
    static constexpr std::size_t default_bit_words = 1;

    Graph() = default;

    std::size_t order() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    /// Edges with u < v, sorted lexicographically.
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept;

    bool has_neighbor_bits() const noexcept { return bit_words_ != 0; }
    std::size_t bit_words() const noexcept { return bit_words_; }
    std::span<const std::uint64_t> neighbor_bits(Vertex v) const noexcept
    {
        return {neighbor_bits_.data() + v * bit_words_, bit_words_};
    }

    friend Graph build_graph(std::size_t n, std::span<const Edge> edges, std::size_t bit_word_budget);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::size_t bit_words_ = 0;
    std::vector<std::uint64_t> neighbor_bits_;
};

/// Validates and builds a simple graph. Pairs may be given in either
/// orientation. Throws Error(invalid_graph) naming the offending pair on a
/// self-loop, duplicate edge, or out-of-range endpoint.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  std::size_t bit_word_budget = Graph::default_bit_words);

/// Degree bucket of a vertex: 0 for isolated vertices, otherwise the j >= 1
/// with 2^(j-1) <= d <= 2^j, taking the lower j when d is a power of two.
std::size_t degree_bucket(std::size_t degree) noexcept;

struct DegreeProfile {
    std::vector<VertexSubset> buckets; // buckets[j - 1] holds bucket j
    VertexSubset isolated;
    std::size_t max_degree = 0;

    const VertexSubset& bucket(std::size_t j) const { return buckets.at(j - 1); }
    std::size_t bucket_count() const noexcept { return buckets.size(); }
};

struct DegreeStats {
    std::size_t max_degree = 0;
    bool has_isolated = false;
    DegreeProfile profile;
};

DegreeStats degree_stats(const Graph& g);

/// Number of selected neighbors of every vertex.
std::vector<std::uint32_t> selected_neighbor_counts(const Graph& g, const VertexSubset& sel);

/// U(sel): the vertices with exactly one neighbor in sel.
VertexSubset unique_neighbors(const Graph& g, const VertexSubset& sel);
std::size_t unique_neighbor_count(const Graph& g, const VertexSubset& sel);

/// Ordered pairs (u, v) with u in a, v in b and uv an edge. An edge with both
/// endpoints in the overlap of a and b is counted twice.
std::size_t edges_between(const Graph& g, const VertexSubset& a, const VertexSubset& b);

} // namespace upsilon
