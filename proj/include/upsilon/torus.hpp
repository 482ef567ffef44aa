#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "upsilon/graph.hpp"

namespace upsilon {

/// Essential simple closed curve on the torus, as a primitive slope (p, q)
/// normalized so that p > 0, or p = 0 and q = 1.
class TorusCurve {
public:
    /// Throws Error(invalid_argument) for (0, 0) or non-primitive pairs.
    TorusCurve(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t height() const noexcept;

    bool operator==(const TorusCurve&) const = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// Enumeration order: height, then p, then |q|, then positive q first.
bool curve_order(const TorusCurve& a, const TorusCurve& b) noexcept;

/// |p s - q r|, the geometric intersection number of the two slopes.
std::uint64_t intersection_number(const TorusCurve& a, const TorusCurve& b) noexcept;

struct CurveSystem {
    std::vector<TorusCurve> curves;
    std::uint64_t k = 0;
};

/// Pairwise distinct and pairwise intersecting at most k times.
bool is_k_system(std::span<const TorusCurve> curves, std::uint64_t k);

/// All normalized curves with max(|p|, |q|) <= height, in curve_order.
std::vector<TorusCurve> curves_up_to_height(std::int64_t height);

inline constexpr std::size_t default_curve_budget = 2048;

struct KSystemResult {
    std::size_t size = 0;
    CurveSystem witness;
};

/// Largest k-system among curves of height <= height, by branch and bound
/// over the compatibility graph. The witness is the lexicographically least
/// maximum in curve_order. Throws Error(too_large) when more than
/// `curve_budget` curves would be searched.
KSystemResult max_k_system(std::int64_t height, std::uint64_t k, std::size_t curve_budget = default_curve_budget);

/// One vertex per curve, edges between curves that intersect.
Graph to_intersection_graph(const CurveSystem& system);

/// [[p, q], ...]
nlohmann::json curves_to_json(std::span<const TorusCurve> curves);
std::vector<TorusCurve> curves_from_json(const nlohmann::json& j);

} // namespace upsilon
