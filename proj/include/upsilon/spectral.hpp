#pragma once

#include <cstdint>

#include "upsilon/regular.hpp"

namespace upsilon {

struct PowerIterationOptions {
    double tol = 1e-6;
    std::size_t max_iter = 10000;
    std::uint64_t seed = 1;
};

/// Second-largest singular value of a regular block's adjacency operator.
///
/// Power iteration on A^T A (bipartite: the biadjacency matrix; diagonal: the
/// adjacency matrix) restricted to the complement of the all-ones vector,
/// which carries the top singular value d. Each iterate's ||A x|| is a lower
/// bound on the answer; iteration stops once it moves by at most
/// tol * max(1, estimate). Throws Error(not_converged) after max_iter steps.
double second_eigenvalue(const RegularBlock& block, const PowerIterationOptions& options = {});

/// 2 sqrt(d - 1), the Ramanujan bound for a d-regular graph.
double ramanujan_threshold(std::size_t degree);

struct SpectralCertificate {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t degree = 0;
    double lambda2 = 0.0;
    double threshold = 0.0;
    double slack = 0.0;
    std::size_t attempts = 0;
    bool certified = false;
};

/// Certified iff lambda2 <= 2 sqrt(d - 1) * (1 + slack); the boundary is inclusive.
SpectralCertificate certify(std::size_t i, std::size_t j, std::size_t degree, double lambda2, double slack,
                            std::size_t attempts = 1);

} // namespace upsilon
