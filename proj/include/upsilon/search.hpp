#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "upsilon/graph.hpp"
#include "upsilon/rng.hpp"

namespace upsilon {

enum class SearchMode { exact, randomized, greedy };

const char* to_string(SearchMode mode) noexcept;

/// A witnessed lower bound on (or, in exact mode, the value of) the
/// unique-neighbor invariant: value == |U(witness)|.
struct UpsilonResult {
    std::size_t value = 0;
    VertexSubset witness;
    SearchMode mode = SearchMode::exact;
    std::size_t trials_used = 0;
    std::optional<double> probability;
    std::optional<double> expectation_at_p;
    std::optional<double> guarantee;
};

inline constexpr std::size_t default_exact_cap = 24;

/// Maximum of |U(V')| over all 2^n subsets, visited in Gray-code order with
/// incrementally maintained selected-neighbor counts. The witness is the
/// first maximizer in that order. Throws Error(too_large) when n > cap.
UpsilonResult upsilon_exact(const Graph& g, std::size_t cap = default_exact_cap);

/// Sum over v of d(v) p (1-p)^(d(v)-1): the expected size of U(V') when each
/// vertex joins V' independently with probability p.
double expected_unique(const Graph& g, double p);

struct DyadicChoice {
    std::size_t bucket = 0;      // j*
    std::size_t bucket_size = 0; // |V_j*|
    double probability = 0.0;    // 2^-j*
    double guarantee = 0.0;      // n / (8 log2 Δ)
};

/// log2 of the maximum degree, clamped below at 1.
double log2_max_degree(std::size_t max_degree);

/// Largest degree bucket (ties to the smaller j) and p = 2^-j*.
/// Throws Error(isolated_vertices) when the profile has isolated vertices.
DyadicChoice dyadic_probability(const DegreeProfile& profile, std::size_t n);

/// Best dyadic p in {2^-1, ..., 2^-ceil(log2 Δ)} by the closed-form expectation.
double best_dyadic_probability(const Graph& g);

VertexSubset sample_selection(const Graph& g, double p, Rng& rng);
VertexSubset sample_selection(const Graph& g, double p, std::uint64_t seed);

struct RandomizedOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    bool grid_search_p = false;
};

/// Called once per trial, in trial order, with the sampled selection and |U|.
using TrialVisitor = std::function<void(std::size_t trial, const VertexSubset& selection, std::size_t value)>;

/// Draws `trials` independent selections at the dyadic p (trial i uses stream
/// i of the seed) and keeps the best; ties go to the earliest trial.
UpsilonResult randomized_lower_bound(const Graph& g, const RandomizedOptions& options,
                                     const TrialVisitor& visit = {});
UpsilonResult randomized_lower_bound(const Graph& g, std::size_t trials, std::uint64_t seed);

/// Steepest-ascent hill climbing over single-vertex toggles of the selection.
/// Stops after `budget` toggles or at a local maximum; ties go to the lowest vertex.
UpsilonResult greedy_improve(const Graph& g, const VertexSubset& start, std::size_t budget);

} // namespace upsilon
