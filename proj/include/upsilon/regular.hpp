#pragma once

#include <cstdint>
#include <vector>

#include "upsilon/graph.hpp"

namespace upsilon {

/// One regular block of the enemy graph, in local coordinates.
///
/// Bipartite blocks join two sides of t vertices each and list edges as
/// (left, right). Diagonal blocks live on a single set of t vertices and
/// list edges with u < v.
struct RegularBlock {
    std::size_t t = 0;
    std::size_t degree = 0;
    bool bipartite = false;
    std::vector<Edge> edges;
};

/// d-regular simple bipartite graph on two t-sets: a union of d random
/// perfect matchings, each repaired by random transpositions until it avoids
/// the earlier ones. For 2d > t the (t-d)-regular complement is sampled instead.
RegularBlock random_regular_bipartite(std::size_t t, std::size_t d, std::uint64_t seed);

/// d-regular simple graph on t vertices: configuration-model pairing with
/// loops and repeated pairs removed by random double-edge switches. For
/// 2d > t-1 the (t-1-d)-regular complement is sampled instead.
/// Throws Error(invalid_argument) unless d < t and d*t is even.
RegularBlock random_regular(std::size_t t, std::size_t d, std::uint64_t seed);

/// The block as a standalone graph (bipartite blocks number the right side t..2t-1).
Graph block_graph(const RegularBlock& block);

} // namespace upsilon
