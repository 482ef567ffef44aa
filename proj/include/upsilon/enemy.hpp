#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "upsilon/graph.hpp"
#include "upsilon/regular.hpp"
#include "upsilon/spectral.hpp"

namespace upsilon {

/// Shape of the extremal construction: k parts V_1..V_k of t vertices each,
/// with every vertex of V_i having 2^(i+j) neighbors in V_j.
struct EnemyParams {
    std::size_t n_target = 0;
    std::size_t delta_target = 0;
    std::size_t k = 0;
    std::size_t t = 0;

    std::size_t degree(std::size_t i, std::size_t j) const noexcept { return std::size_t{1} << (i + j); }
    std::size_t vertex_count() const noexcept { return k * t; }
    /// Degree of a vertex in V_k, the largest in the graph.
    std::size_t max_degree() const noexcept;
};

/// k = floor(floor(log2 Δ) / 2); t = smallest power of two >= n / (2k),
/// doubled once if it equals the diagonal degree 4^k (a simple 4^k-regular
/// graph needs more than 4^k vertices). Throws Error(infeasible) when
/// k = 0 or t < 4^k.
EnemyParams derive_params(std::size_t n_target, std::size_t delta_target);

struct EnemyGraphBundle {
    Graph graph;
    EnemyParams params;
    std::vector<VertexSubset> parts;                // parts[i - 1] = V_i = [(i-1)t, it)
    std::vector<SpectralCertificate> certificates;  // blocks (i, j), i <= j, row-major

    const VertexSubset& part(std::size_t i) const { return parts.at(i - 1); }
    std::size_t part_of(Vertex v) const noexcept { return v / params.t + 1; }
    /// Certificate of the block joining V_i and V_j, in either order.
    const SpectralCertificate& certificate(std::size_t i, std::size_t j) const;
};

struct AssemblyOptions {
    double slack = 0.1;
    std::size_t max_attempts = 10;
    std::uint64_t seed = 1;
    PowerIterationOptions power{};
};

/// Samples, certifies and unions all k(k+1)/2 blocks. Block b (row-major over
/// i <= j) attempt a draws from seed stream split(split(seed, b), a).
/// Throws Error(certification_failed) naming the block and its best λ2.
EnemyGraphBundle assemble_enemy_graph(const EnemyParams& params, const AssemblyOptions& options);
EnemyGraphBundle assemble_enemy_graph(const EnemyParams& params, double slack, std::size_t max_attempts,
                                      std::uint64_t seed);

/// Block (i, j) read back out of the assembled graph, in local coordinates.
RegularBlock extract_block(const EnemyGraphBundle& bundle, std::size_t i, std::size_t j);

struct MixingCheck {
    std::size_t edges = 0;         // |E(A, B)|
    double deviation = 0.0;        // | |E(A,B)| - d |A||B| / t |
    double bound_paper = 0.0;      // 2 sqrt(d |A||B|)
    double bound_certified = 0.0;  // λ2 sqrt(|A||B|)
    bool pass = false;             // deviation <= bound_certified
};

/// Throws Error(invalid_argument) unless a ⊂ V_i and b ⊂ V_j.
MixingCheck mixing_check(const EnemyGraphBundle& bundle, std::size_t i, std::size_t j, const VertexSubset& a,
                         const VertexSubset& b);

struct MixingSummary {
    std::size_t checks = 0;
    std::size_t passed = 0;
    double worst_ratio = 0.0;  // max deviation / bound_certified over nonempty pairs
};

/// Runs `samples` mixing checks on block (i, j) with uniformly random
/// A ⊂ V_i, B ⊂ V_j whose sizes cycle through t/16, t/4, t/2.
MixingSummary sampled_mixing(const EnemyGraphBundle& bundle, std::size_t i, std::size_t j, std::size_t samples,
                             std::uint64_t seed);

struct BucketTrace {
    std::size_t edges = 0;  // |E(V', V_j)|
    VertexSubset unique;    // U_j = U(V') ∩ V_j
    std::size_t unique_count = 0;
};

struct TailBound {
    std::size_t j = 0;
    double c = 0.0;      // λ2 / sqrt(d) of block (i*, j)
    double bound = 0.0;  // 4 c^2 t k 2^(j0 - j)
    bool holds = false;
};

/// Decomposition of |U(V')| into the part sums used by the upper-bound
/// argument: head j < j0, middle j0 <= j <= j0 + ceil(log2 k), tail beyond.
struct ProofTrace {
    VertexSubset selection;
    std::vector<BucketTrace> buckets; // buckets[j - 1]
    std::size_t total_unique = 0;

    std::optional<std::size_t> j0;
    std::optional<std::size_t> pivot;  // i* maximizing |E(V_i', V_j0)|
    std::size_t pivot_edges = 0;

    std::size_t head_unique = 0;
    std::size_t head_edges = 0;
    std::size_t middle_last = 0;  // last index of the middle range
    std::size_t middle_unique = 0;
    std::size_t middle_bound = 0;
    std::size_t tail_unique = 0;
    std::vector<TailBound> tail;

    bool pivot_holds = true;   // k |E(V_i*', V_j0)| >= t
    bool head_holds = false;   // head_unique <= head_edges < 2t
    bool middle_holds = true;  // middle_unique <= middle_bound
    bool tail_holds = true;

    bool holds() const noexcept { return pivot_holds && head_holds && middle_holds && tail_holds; }
};

ProofTrace proof_trace(const EnemyGraphBundle& bundle, const VertexSubset& selection);

} // namespace upsilon
