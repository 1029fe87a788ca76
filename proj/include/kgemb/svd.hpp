#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "kgemb/sparse.hpp"

namespace kgemb {

// Rank-k factorization A ~ U diag(S) V^T with orthonormal-column U, V and
// S sorted non-increasing, all >= 0.
struct SvdResult {
    Eigen::MatrixXd u;  // n x k
    Eigen::VectorXd s;  // k
    Eigen::MatrixXd v;  // m x k
};

// Randomized range-finder scheme: Gaussian test matrix with `oversampling`
// extra columns, then power iterations until the top-k Ritz values
// stabilize (at least min_power_iterations, at most max_power_iterations),
// then an exact small SVD of the projected matrix by one-sided Jacobi.
//
// Deterministic for a fixed seed on a given platform: the generator is the
// fully-specified std::mt19937_64 with an explicit Box-Muller transform, so
// cross-platform differences are limited to libm rounding.
struct SvdOptions {
    int oversampling = 10;
    int min_power_iterations = 4;
    int max_power_iterations = 64;
    double ritz_tol = 1e-10;
};

// Throws RankTooLarge when k < 1 or k > min(rows, cols); NonFiniteInput on
// non-finite dense entries. Each column of U carries a deterministic sign:
// its largest-magnitude entry is positive.
SvdResult truncated_svd(const SparseMatrix& m, int k, std::uint64_t seed,
                        const SvdOptions& options = {});
SvdResult truncated_svd(const Eigen::MatrixXd& m, int k, std::uint64_t seed,
                        const SvdOptions& options = {});

}  // namespace kgemb
