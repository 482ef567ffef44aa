#include "upsilon/enemy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "upsilon/rng.hpp"

namespace upsilon {

std::size_t EnemyParams::max_degree() const noexcept
{
    std::size_t total = 0;
    for (std::size_t j = 1; j <= k; ++j)
        total += degree(k, j);
    return total;
}

EnemyParams derive_params(std::size_t n_target, std::size_t delta_target)
{
    if (delta_target < 4)
        throw Error(ErrorKind::infeasible,
                    "Δ=" + std::to_string(delta_target) + " gives k = 0 parts; need Δ >= 4");
    if (n_target == 0)
        throw Error(ErrorKind::infeasible, "n must be positive");

    EnemyParams params;
    params.n_target = n_target;
    params.delta_target = delta_target;
    const auto log_delta = static_cast<std::size_t>(std::bit_width(delta_target)) - 1;
    params.k = log_delta / 2;
    const std::size_t half = (n_target + 2 * params.k - 1) / (2 * params.k);
    params.t = std::bit_ceil(half);

    const std::size_t diagonal = params.degree(params.k, params.k);
    if (params.t < diagonal)
        throw Error(ErrorKind::infeasible, "t = " + std::to_string(params.t) + " < d[" + std::to_string(params.k) +
                                               "][" + std::to_string(params.k) + "] = " + std::to_string(diagonal) +
                                               "; n is too small for Δ");
    if (params.t == diagonal)
        params.t *= 2;
    return params;
}

const SpectralCertificate& EnemyGraphBundle::certificate(std::size_t i, std::size_t j) const
{
    if (i > j)
        std::swap(i, j);
    for (const auto& cert : certificates)
        if (cert.i == i && cert.j == j)
            return cert;
    throw Error(ErrorKind::invalid_argument,
                "no certificate for block (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

EnemyGraphBundle assemble_enemy_graph(const EnemyParams& params, const AssemblyOptions& options)
{
    const std::size_t k = params.k;
    const std::size_t t = params.t;
    if (k == 0 || t <= params.degree(k, k))
        throw Error(ErrorKind::infeasible, "enemy parameters do not admit simple diagonal blocks");
    if (options.max_attempts == 0)
        throw Error(ErrorKind::invalid_argument, "max_attempts must be positive");

    EnemyGraphBundle bundle;
    bundle.params = params;
    std::vector<Edge> edges;
    std::size_t block_index = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t j = i; j <= k; ++j, ++block_index) {
            const std::size_t d = params.degree(i, j);
            const std::uint64_t block_seed = split_seed(options.seed, block_index);
            std::optional<RegularBlock> accepted;
            double best_lambda = INFINITY;
            for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
                const std::uint64_t seed = split_seed(block_seed, attempt);
                auto block = i == j ? random_regular(t, d, seed) : random_regular_bipartite(t, d, seed);
                auto power = options.power;
                power.seed = seed;
                const double lambda = second_eigenvalue(block, power);
                best_lambda = std::min(best_lambda, lambda);
                auto cert = certify(i, j, d, lambda, options.slack, attempt + 1);
                if (cert.certified) {
                    bundle.certificates.push_back(cert);
                    accepted = std::move(block);
                    break;
                }
            }
            if (!accepted)
                throw Error(ErrorKind::certification_failed,
                            "block (" + std::to_string(i) + "," + std::to_string(j) + ") d=" + std::to_string(d) +
                                ": best λ2 = " + std::to_string(best_lambda) + " after " +
                                std::to_string(options.max_attempts) + " attempts, threshold " +
                                std::to_string(ramanujan_threshold(d) * (1.0 + options.slack)));

            const auto left = static_cast<Vertex>((i - 1) * t);
            const auto right = static_cast<Vertex>((j - 1) * t);
            for (const Edge& e : accepted->edges)
                edges.push_back({left + e.u, right + e.v});
        }
    }

    const std::size_t n = params.vertex_count();
    bundle.graph = build_graph(n, edges);
    for (std::size_t i = 1; i <= k; ++i)
        bundle.parts.push_back(VertexSubset::range(n, (i - 1) * t, t));
    return bundle;
}

EnemyGraphBundle assemble_enemy_graph(const EnemyParams& params, double slack, std::size_t max_attempts,
                                      std::uint64_t seed)
{
    AssemblyOptions options;
    options.slack = slack;
    options.max_attempts = max_attempts;
    options.seed = seed;
    return assemble_enemy_graph(params, options);
}

RegularBlock extract_block(const EnemyGraphBundle& bundle, std::size_t i, std::size_t j)
{
    if (i > j)
        std::swap(i, j);
    const std::size_t t = bundle.params.t;
    const auto left = static_cast<Vertex>((i - 1) * t);
    const auto right = static_cast<Vertex>((j - 1) * t);
    RegularBlock block{t, bundle.params.degree(i, j), i != j, {}};
    for (Vertex u = left; u < left + t; ++u)
        for (Vertex w : bundle.graph.neighbors(u))
            if (bundle.part_of(w) == j && (i != j || u < w))
                block.edges.push_back({u - left, w - right});
    return block;
}

namespace {

void check_part_index(const EnemyParams& params, std::size_t i)
{
    if (i < 1 || i > params.k)
        throw Error(ErrorKind::invalid_argument,
                    "part index " + std::to_string(i) + " outside 1.." + std::to_string(params.k));
}

} // namespace

MixingCheck mixing_check(const EnemyGraphBundle& bundle, std::size_t i, std::size_t j, const VertexSubset& a,
                         const VertexSubset& b)
{
    check_part_index(bundle.params, i);
    check_part_index(bundle.params, j);
    if (!a.is_subset_of(bundle.part(i)))
        throw Error(ErrorKind::invalid_argument, "A is not contained in V_" + std::to_string(i));
    if (!b.is_subset_of(bundle.part(j)))
        throw Error(ErrorKind::invalid_argument, "B is not contained in V_" + std::to_string(j));

    const std::uint64_t t = bundle.params.t;
    const std::uint64_t d = bundle.params.degree(i, j);
    const std::uint64_t size_a = a.size();
    const std::uint64_t size_b = b.size();

    MixingCheck check;
    // Neighbor lists are sorted, so the neighbors inside V_j form one contiguous run.
    const auto lo = static_cast<Vertex>((j - 1) * t);
    const auto hi = static_cast<Vertex>(j * t);
    a.for_each([&](Vertex u) {
        const auto nb = bundle.graph.neighbors(u);
        for (auto it = std::lower_bound(nb.begin(), nb.end(), lo); it != nb.end() && *it < hi; ++it)
            check.edges += b.contains(*it) ? 1 : 0;
    });
    // |e - d ab / t| = |e t - d ab| / t, kept exact in integers.
    const std::uint64_t scaled = std::uint64_t{check.edges} * t;
    const std::uint64_t expected = d * size_a * size_b;
    const std::uint64_t gap = scaled > expected ? scaled - expected : expected - scaled;
    check.deviation = static_cast<double>(gap) / static_cast<double>(t);
    const double area = static_cast<double>(size_a) * static_cast<double>(size_b);
    check.bound_paper = 2.0 * std::sqrt(static_cast<double>(d) * area);
    check.bound_certified = bundle.certificate(i, j).lambda2 * std::sqrt(area);
    check.pass = check.deviation <= check.bound_certified;
    return check;
}

namespace {

VertexSubset random_part_subset(const EnemyGraphBundle& bundle, std::size_t i, std::size_t size, Rng& rng)
{
    const std::size_t t = bundle.params.t;
    const auto first = static_cast<Vertex>((i - 1) * t);
    std::vector<Vertex> pool(t);
    for (std::size_t x = 0; x < t; ++x)
        pool[x] = first + static_cast<Vertex>(x);
    VertexSubset out(bundle.graph.order());
    for (std::size_t x = 0; x < size; ++x) {
        std::swap(pool[x], pool[x + rng.below(t - x)]);
        out.insert(pool[x]);
    }
    return out;
}

} // namespace

MixingSummary sampled_mixing(const EnemyGraphBundle& bundle, std::size_t i, std::size_t j, std::size_t samples,
                             std::uint64_t seed)
{
    const std::size_t t = bundle.params.t;
    const std::size_t sizes[] = {std::max<std::size_t>(1, t / 16), std::max<std::size_t>(1, t / 4),
                                 std::max<std::size_t>(1, t / 2)};
    Rng rng(seed);
    MixingSummary summary;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t size = sizes[s % 3];
        auto a = random_part_subset(bundle, i, size, rng);
        auto b = random_part_subset(bundle, j, size, rng);
        const auto check = mixing_check(bundle, i, j, a, b);
        ++summary.checks;
        summary.passed += check.pass ? 1 : 0;
        if (check.bound_certified > 0.0)
            summary.worst_ratio = std::max(summary.worst_ratio, check.deviation / check.bound_certified);
    }
    return summary;
}

ProofTrace proof_trace(const EnemyGraphBundle& bundle, const VertexSubset& selection)
{
    const auto& params = bundle.params;
    const std::size_t k = params.k;
    const std::size_t t = params.t;
    const Graph& g = bundle.graph;
    if (selection.universe() != g.order())
        throw Error(ErrorKind::invalid_argument, "selection is over a different vertex count");

    ProofTrace trace;
    trace.selection = selection;
    trace.buckets.assign(k, BucketTrace{0, VertexSubset(g.order()), 0});

    // part_edges[i][j] = |E(V_i', V_j)|, 1-based.
    std::vector<std::vector<std::size_t>> part_edges(k + 1, std::vector<std::size_t>(k + 1, 0));
    std::vector<std::uint32_t> counts(g.order(), 0);
    selection.for_each([&](Vertex s) {
        auto& row = part_edges[bundle.part_of(s)];
        for (Vertex w : g.neighbors(s)) {
            ++counts[w];
            ++row[bundle.part_of(w)];
        }
    });
    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t i = 1; i <= k; ++i)
            trace.buckets[j - 1].edges += part_edges[i][j];
    for (Vertex v = 0; v < g.order(); ++v) {
        if (counts[v] == 1) {
            auto& bucket = trace.buckets[bundle.part_of(v) - 1];
            bucket.unique.insert(v);
            ++bucket.unique_count;
            ++trace.total_unique;
        }
    }

    for (std::size_t j = 1; j <= k && !trace.j0; ++j)
        if (trace.buckets[j - 1].edges >= t)
            trace.j0 = j;

    const std::size_t head_end = trace.j0 ? *trace.j0 : k + 1;
    for (std::size_t j = 1; j < head_end; ++j) {
        trace.head_unique += trace.buckets[j - 1].unique_count;
        trace.head_edges += trace.buckets[j - 1].edges;
    }
    trace.head_holds = trace.head_unique <= trace.head_edges && trace.head_edges < 2 * t;
    if (!trace.j0)
        return trace;

    const std::size_t j0 = *trace.j0;
    std::size_t pivot = 1;
    for (std::size_t i = 2; i <= k; ++i)
        if (part_edges[i][j0] > part_edges[pivot][j0])
            pivot = i;
    trace.pivot = pivot;
    trace.pivot_edges = part_edges[pivot][j0];
    trace.pivot_holds = k * trace.pivot_edges >= t;

    const auto span = static_cast<std::size_t>(std::bit_width(k - 1)); // ceil(log2 k)
    trace.middle_last = std::min(k, j0 + span);
    for (std::size_t j = j0; j <= trace.middle_last; ++j)
        trace.middle_unique += trace.buckets[j - 1].unique_count;
    trace.middle_bound = t * (span + 1);
    trace.middle_holds = trace.middle_unique <= trace.middle_bound;

    for (std::size_t j = trace.middle_last + 1; j <= k; ++j) {
        const double d = static_cast<double>(params.degree(pivot, j));
        TailBound tail;
        tail.j = j;
        tail.c = bundle.certificate(pivot, j).lambda2 / std::sqrt(d);
        tail.bound = 4.0 * tail.c * tail.c * static_cast<double>(t * k) *
                     std::ldexp(1.0, static_cast<int>(j0) - static_cast<int>(j));
        const std::size_t observed = trace.buckets[j - 1].unique_count;
        tail.holds = static_cast<double>(observed) <= tail.bound;
        trace.tail_unique += observed;
        trace.tail_holds = trace.tail_holds && tail.holds;
        trace.tail.push_back(tail);
    }
    return trace;
}

} // namespace upsilon
