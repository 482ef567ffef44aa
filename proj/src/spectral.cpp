#include "upsilon/spectral.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "upsilon/rng.hpp"

namespace upsilon {

namespace {

// Compressed rows of a 0/1 matrix given as (row, column) pairs.
struct Rows {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> columns;

    Rows(std::size_t rows, const std::vector<Edge>& entries, bool transpose, bool symmetric)
        : offsets(rows + 1, 0)
    {
        for (const Edge& e : entries) {
            ++offsets[(transpose ? e.v : e.u) + 1];
            if (symmetric)
                ++offsets[e.v + 1];
        }
        std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
        columns.resize(offsets.back());
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const Edge& e : entries) {
            if (transpose)
                columns[cursor[e.v]++] = e.u;
            else
                columns[cursor[e.u]++] = e.v;
            if (symmetric)
                columns[cursor[e.v]++] = e.u;
        }
    }

    void apply(const std::vector<double>& x, std::vector<double>& y) const
    {
        for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
            double sum = 0.0;
            for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k)
                sum += x[columns[k]];
            y[r] = sum;
        }
    }
};

void remove_mean(std::vector<double>& x)
{
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    for (auto& v : x)
        v -= mean;
}

double norm(const std::vector<double>& x)
{
    return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

} // namespace

double second_eigenvalue(const RegularBlock& block, const PowerIterationOptions& options)
{
    const std::size_t t = block.t;
    if (t < 2)
        return 0.0;

    const Rows forward(t, block.edges, false, !block.bipartite);
    const Rows backward(t, block.edges, block.bipartite, !block.bipartite);

    Rng rng(options.seed);
    std::vector<double> x(t), y(t), z(t);
    for (auto& v : x)
        v = rng.unit() - 0.5;
    remove_mean(x);
    double len = norm(x);
    if (len == 0.0)
        return 0.0;
    for (auto& v : x)
        v /= len;

    double previous = -1.0;
    for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
        forward.apply(x, y);
        const double estimate = norm(y);
        backward.apply(y, z);
        remove_mean(z);
        len = norm(z);
        if (len == 0.0 || estimate == 0.0)
            return estimate;
        for (std::size_t k = 0; k < t; ++k)
            x[k] = z[k] / len;
        if (previous >= 0.0 && std::abs(estimate - previous) <= options.tol * std::max(1.0, estimate))
            return estimate;
        previous = estimate;
    }
    throw Error(ErrorKind::not_converged,
                "power iteration did not converge in " + std::to_string(options.max_iter) + " steps");
}

double ramanujan_threshold(std::size_t degree)
{
    return degree == 0 ? 0.0 : 2.0 * std::sqrt(static_cast<double>(degree - 1));
}

SpectralCertificate certify(std::size_t i, std::size_t j, std::size_t degree, double lambda2, double slack,
                            std::size_t attempts)
{
    SpectralCertificate cert;
    cert.i = i;
    cert.j = j;
    cert.degree = degree;
    cert.lambda2 = lambda2;
    cert.threshold = ramanujan_threshold(degree);
    cert.slack = slack;
    cert.attempts = attempts;
    cert.certified = lambda2 <= cert.threshold * (1.0 + slack);
    return cert;
}

} // namespace upsilon
