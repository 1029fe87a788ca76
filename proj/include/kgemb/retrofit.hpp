#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "kgemb/embedding.hpp"
#include "kgemb/graph.hpp"

namespace kgemb {

// Quadratic objective instance over the union vocabulary: original vectors
// q_hat (zero rows for graph-only terms), per-term attachment weights alpha
// (1 for observed terms, 0 for graph-only terms), and per-edge weights beta
// from the summed graph edge weights. Edges are stored both ways; the edge
// set is symmetric and has no self-loops.
struct RetrofitProblem {
    std::vector<std::string> vocab;
    Eigen::MatrixXd q_hat;
    Eigen::VectorXd alpha;
    std::vector<std::vector<std::pair<int, double>>> neighbors;
    std::size_t edge_count = 0;

    int size() const { return static_cast<int>(vocab.size()); }
    int dim() const { return static_cast<int>(q_hat.cols()); }
};

struct RetrofitConfig {
    int max_iterations = 10;
    double convergence_tol = 1e-4;  // mean per-row movement, Euclidean norm
    bool center_and_normalize = true;
    bool degree_normalize_beta = false;  // beta_ij / sqrt(deg_i * deg_j)
};

struct RetrofitResult {
    EmbeddingMatrix embeddings;
    std::vector<double> objective_trace;  // value before iterating, then per sweep
    int iterations = 0;
    bool gauss_seidel_fallback = false;
};

// Union vocabulary (embedding order first, then graph-only nodes in graph
// order). Throws EmptyIntersection when the graph has nodes but shares none
// with the embedding.
RetrofitProblem build_problem(const EmbeddingMatrix& emb, const KnowledgeGraph& g,
                              bool degree_normalize_beta = false);

// Psi(Q) = sum_i alpha_i |q_i - q_hat_i|^2 + sum_{(i,j) in E} beta_ij
// |q_i - q_j|^2, each unordered edge counted once.
double objective(const RetrofitProblem& p, const Eigen::MatrixXd& q);
double objective(const RetrofitProblem& p, const EmbeddingMatrix& q);

// Iterative minimization by simultaneous (Jacobi) sweeps:
//   q_i <- (alpha_i q_hat_i + sum_j beta_ij q_j) / (alpha_i + sum_j beta_ij)
// The objective trace is non-increasing: a sweep that fails to decrease it
// is redone Gauss-Seidel in vocabulary order, and if that cannot decrease
// it either (floating-point floor) the iteration stops at the previous
// iterate. Stops early when mean row movement drops below convergence_tol.
RetrofitResult retrofit(const RetrofitProblem& p, const RetrofitConfig& cfg = {});

// alpha = 0 terms that no chain of edges connects to any alpha = 1 term;
// reported by the CLI, not an error.
std::vector<std::string> unreachable_terms(const RetrofitProblem& p);

}  // namespace kgemb
