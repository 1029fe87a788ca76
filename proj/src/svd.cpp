#include "kgemb/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "kgemb/errors.hpp"

namespace kgemb {

namespace {

// Box-Muller over the fully-specified mt19937_64, so the stream does not
// depend on the standard library's distribution implementation.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();        // [0, 1)
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

Eigen::MatrixXd gaussian_matrix(int rows, int cols, std::uint64_t seed) {
    GaussianSampler sampler(seed);
    Eigen::MatrixXd m(rows, cols);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            m(r, c) = sampler.next();
        }
    }
    return m;
}

Eigen::MatrixXd thin_q(const Eigen::MatrixXd& y) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

// One-sided Jacobi: orthogonalizes the columns of g in place, accumulating
// the right rotations in z, so that g_in = g_out * z^T with z orthogonal.
void jacobi_orthogonalize(Eigen::MatrixXd& g, Eigen::MatrixXd& z) {
    const int l = static_cast<int>(g.cols());
    z = Eigen::MatrixXd::Identity(l, l);
    const double tol = 1e-15;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (int i = 0; i < l - 1; ++i) {
            for (int j = i + 1; j < l; ++j) {
                double a = g.col(i).squaredNorm();
                double b = g.col(j).squaredNorm();
                double c = g.col(i).dot(g.col(j));
                if (a == 0.0 || b == 0.0) {
                    continue;
                }
                double scale = std::sqrt(a * b);
                worst = std::max(worst, std::abs(c) / scale);
                if (std::abs(c) <= tol * scale) {
                    continue;
                }
                double zeta = (b - a) / (2.0 * c);
                double t = (zeta >= 0 ? 1.0 : -1.0) /
                           (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double cs = 1.0 / std::sqrt(1.0 + t * t);
                double sn = cs * t;
                Eigen::VectorXd gi = g.col(i);
                g.col(i) = cs * gi - sn * g.col(j);
                g.col(j) = sn * gi + cs * g.col(j);
                Eigen::VectorXd zi = z.col(i);
                z.col(i) = cs * zi - sn * z.col(j);
                z.col(j) = sn * zi + cs * z.col(j);
            }
        }
        if (worst <= tol) {
            break;
        }
    }
}

// Exact thin SVD of a tall matrix c (m x l, l <= m): c = w diag(s) z^T.
// Columns of w are orthonormal even for zero singular values (completed
// from coordinate basis vectors).
void jacobi_svd_thin(Eigen::MatrixXd c, Eigen::MatrixXd& w, Eigen::VectorXd& s,
                     Eigen::MatrixXd& z) {
    const int l = static_cast<int>(c.cols());
    jacobi_orthogonalize(c, z);
    s.resize(l);
    for (int j = 0; j < l; ++j) {
        s(j) = c.col(j).norm();
    }
    // sort non-increasing, stable to keep determinism for ties
    std::vector<int> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return s(a) > s(b); });
    Eigen::MatrixXd c_sorted(c.rows(), l);
    Eigen::MatrixXd z_sorted(z.rows(), l);
    Eigen::VectorXd s_sorted(l);
    for (int j = 0; j < l; ++j) {
        c_sorted.col(j) = c.col(order[j]);
        z_sorted.col(j) = z.col(order[j]);
        s_sorted(j) = s(order[j]);
    }
    z = z_sorted;
    s = s_sorted;

    w.resize(c.rows(), l);
    for (int j = 0; j < l; ++j) {
        if (s_sorted(j) > 0.0) {
            w.col(j) = c_sorted.col(j) / s_sorted(j);
        } else {
            // complete with the first coordinate vector that keeps the
            // columns orthonormal
            for (int basis = 0; basis < c.rows(); ++basis) {
                Eigen::VectorXd cand = Eigen::VectorXd::Zero(c.rows());
                cand(basis) = 1.0;
                for (int prev = 0; prev < j; ++prev) {
                    cand -= w.col(prev).dot(cand) * w.col(prev);
                }
                double n = cand.norm();
                if (n > 0.5) {
                    w.col(j) = cand / n;
                    break;
                }
            }
        }
    }
}

// Ritz values: singular values of a small square matrix, descending.
Eigen::VectorXd singular_values_small(Eigen::MatrixXd r) {
    Eigen::MatrixXd z;
    jacobi_orthogonalize(r, z);
    Eigen::VectorXd s(r.cols());
    for (int j = 0; j < r.cols(); ++j) {
        s(j) = r.col(j).norm();
    }
    std::sort(s.data(), s.data() + s.size(), std::greater<double>());
    return s;
}

template <typename Op>
SvdResult truncated_svd_impl(const Op& op, int k, std::uint64_t seed,
                             const SvdOptions& options) {
    const int n = op.rows();
    const int m = op.cols();
    if (k < 1 || k > std::min(n, m)) {
        throw RankTooLarge("requested rank " + std::to_string(k) +
                           " outside [1, " + std::to_string(std::min(n, m)) + "]");
    }
    const int l = std::min(k + options.oversampling, std::min(n, m));

    Eigen::MatrixXd omega = gaussian_matrix(m, l, seed);
    Eigen::MatrixXd y;
    op.multiply(omega, y);
    Eigen::MatrixXd q = thin_q(y);

    Eigen::VectorXd prev_ritz;
    Eigen::MatrixXd c;
    for (int iter = 1; iter <= options.max_power_iterations; ++iter) {
        op.multiply_transpose(q, c);  // m x l
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(c);
        Eigen::MatrixXd r =
            qr.matrixQR().topRows(l).template triangularView<Eigen::Upper>();
        Eigen::VectorXd ritz = singular_values_small(r);
        Eigen::MatrixXd zq = qr.householderQ() * Eigen::MatrixXd::Identity(m, l);
        op.multiply(zq, y);
        q = thin_q(y);

        if (iter >= options.min_power_iterations && prev_ritz.size() == ritz.size()) {
            double sigma_max = ritz(0);
            double worst = 0.0;
            for (int i = 0; i < std::min<int>(k, ritz.size()); ++i) {
                double denom = std::max(ritz(i), prev_ritz(i));
                if (denom <= sigma_max * 1e-14) {
                    continue;  // numerically zero; nothing left to resolve
                }
                worst = std::max(worst, std::abs(ritz(i) - prev_ritz(i)) / denom);
            }
            if (worst < options.ritz_tol) {
                break;
            }
        }
        prev_ritz = ritz;
    }

    op.multiply_transpose(q, c);  // m x l, projected matrix B^T = A^T Q
    Eigen::MatrixXd w;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd z;
    jacobi_svd_thin(std::move(c), w, sigma, z);
    // A ~ Q Q^T A = Q (W diag(sigma) Z^T)^T = (Q Z) diag(sigma) W^T

    SvdResult result;
    result.u = q * z.leftCols(k);
    result.s = sigma.head(k);
    result.v = w.leftCols(k);

    // sign convention: largest-magnitude entry of each U column is positive
    for (int j = 0; j < k; ++j) {
        int arg = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            double mag = std::abs(result.u(i, j));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (result.u(arg, j) < 0.0) {
            result.u.col(j) = -result.u.col(j);
            result.v.col(j) = -result.v.col(j);
        }
    }
    return result;
}

struct DenseOp {
    const Eigen::MatrixXd& a;
    int rows() const { return static_cast<int>(a.rows()); }
    int cols() const { return static_cast<int>(a.cols()); }
    void multiply(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const { out = a * x; }
    void multiply_transpose(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const {
        out = a.transpose() * x;
    }
};

struct SparseOp {
    const SparseMatrix& a;
    int rows() const { return a.rows(); }
    int cols() const { return a.cols(); }
    void multiply(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const {
        a.multiply(x, out);
    }
    void multiply_transpose(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const {
        a.multiply_transpose(x, out);
    }
};

}  // namespace

SvdResult truncated_svd(const SparseMatrix& m, int k, std::uint64_t seed,
                        const SvdOptions& options) {
    return truncated_svd_impl(SparseOp{m}, k, seed, options);
}

SvdResult truncated_svd(const Eigen::MatrixXd& m, int k, std::uint64_t seed,
                        const SvdOptions& options) {
    if (!m.allFinite()) {
        throw NonFiniteInput("matrix has non-finite entries");
    }
    return truncated_svd_impl(DenseOp{m}, k, seed, options);
}

}  // namespace kgemb
