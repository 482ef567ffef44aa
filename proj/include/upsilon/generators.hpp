#pragma once

#include <cstdint>

#include "upsilon/graph.hpp"

namespace upsilon {

/// Uniform simple graph with exactly m edges (Erdős–Rényi G(n, m)).
Graph random_simple_graph(std::size_t n, std::size_t m, std::uint64_t seed);

} // namespace upsilon
