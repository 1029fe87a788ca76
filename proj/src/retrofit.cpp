#include "kgemb/retrofit.hpp"

#include <cmath>
#include <deque>

#include "kgemb/errors.hpp"

namespace kgemb {

RetrofitProblem build_problem(const EmbeddingMatrix& emb, const KnowledgeGraph& g,
                              bool degree_normalize_beta) {
    RetrofitProblem p;
    p.vocab = emb.vocab();
    std::vector<int> graph_row(g.node_count(), -1);
    bool any_shared = false;
    for (int id = 0; id < g.node_count(); ++id) {
        int row = emb.index_of(g.nodes()[id]);
        if (row >= 0) {
            graph_row[id] = row;
            any_shared = true;
        }
    }
    if (g.node_count() > 0 && !any_shared) {
        throw EmptyIntersection(
            "no term is shared between the graph and the embeddings; "
            "retrofitting would be vacuous");
    }
    for (int id = 0; id < g.node_count(); ++id) {
        if (graph_row[id] < 0) {
            graph_row[id] = static_cast<int>(p.vocab.size());
            p.vocab.push_back(g.nodes()[id]);
        }
    }

    const int n = static_cast<int>(p.vocab.size());
    const int n_emb = emb.size();
    p.q_hat = Eigen::MatrixXd::Zero(n, emb.dim());
    p.q_hat.topRows(n_emb) = emb.data();
    p.alpha = Eigen::VectorXd::Zero(n);
    p.alpha.head(n_emb).setOnes();

    p.neighbors.assign(n, {});
    for (int id = 0; id < g.node_count(); ++id) {
        int i = graph_row[id];
        for (const auto& [nbr, w] : g.neighbors(id)) {
            if (nbr == id) {
                continue;  // self-loops do not constrain the objective
            }
            double beta = w;
            if (degree_normalize_beta) {
                beta /= std::sqrt(static_cast<double>(g.degree(id)) *
                                  static_cast<double>(g.degree(nbr)));
            }
            p.neighbors[i].emplace_back(graph_row[nbr], beta);
        }
    }
    for (const auto& adj : p.neighbors) {
        p.edge_count += adj.size();
    }
    p.edge_count /= 2;
    return p;
}

double objective(const RetrofitProblem& p, const Eigen::MatrixXd& q) {
    if (q.rows() != p.size() || q.cols() != p.dim()) {
        throw DimensionMismatch("objective: matrix shape does not match the problem");
    }
    double psi = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p.alpha(i) != 0.0) {
            psi += p.alpha(i) * (q.row(i) - p.q_hat.row(i)).squaredNorm();
        }
        for (const auto& [j, beta] : p.neighbors[i]) {
            if (j > i) {  // each unordered edge once
                psi += beta * (q.row(i) - q.row(j)).squaredNorm();
            }
        }
    }
    return psi;
}

double objective(const RetrofitProblem& p, const EmbeddingMatrix& q) {
    Eigen::MatrixXd aligned(p.size(), q.dim());
    for (int i = 0; i < p.size(); ++i) {
        int row = q.index_of(p.vocab[i]);
        if (row < 0) {
            throw DimensionMismatch("objective: matrix does not cover term '" +
                                    p.vocab[i] + "'");
        }
        aligned.row(i) = q.data().row(row);
    }
    return objective(p, aligned);
}

namespace {

Eigen::RowVectorXd updated_row(const RetrofitProblem& p, const Eigen::MatrixXd& q,
                               int i) {
    double denom = p.alpha(i);
    Eigen::RowVectorXd numer = p.alpha(i) * p.q_hat.row(i);
    for (const auto& [j, beta] : p.neighbors[i]) {
        numer += beta * q.row(j);
        denom += beta;
    }
    if (denom == 0.0) {
        return q.row(i);  // detached graph-only term: stays put
    }
    return numer / denom;
}

}  // namespace

RetrofitResult retrofit(const RetrofitProblem& p, const RetrofitConfig& cfg) {
    const int n = p.size();
    Eigen::MatrixXd q = p.q_hat;

    RetrofitResult result;
    result.objective_trace.push_back(objective(p, q));

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        Eigen::MatrixXd q_next(n, p.dim());
        for (int i = 0; i < n; ++i) {
            q_next.row(i) = updated_row(p, q, i);
        }
        double psi = objective(p, q_next);

        if (psi > result.objective_trace.back()) {
            // redo the sweep with in-place updates; exact coordinate
            // minimization cannot increase the objective
            q_next = q;
            for (int i = 0; i < n; ++i) {
                q_next.row(i) = updated_row(p, q_next, i);
            }
            psi = objective(p, q_next);
            result.gauss_seidel_fallback = true;
            if (psi > result.objective_trace.back()) {
                break;  // floating-point floor reached; keep previous iterate
            }
        }

        double movement = 0.0;
        for (int i = 0; i < n; ++i) {
            movement += (q_next.row(i) - q.row(i)).norm();
        }
        movement /= std::max(n, 1);

        q = std::move(q_next);
        result.objective_trace.push_back(psi);
        result.iterations = iter;
        if (movement <= cfg.convergence_tol) {
            break;
        }
    }

    EmbeddingMatrix raw(p.vocab, std::move(q));
    result.embeddings =
        cfg.center_and_normalize ? center_and_unit_normalize(raw) : std::move(raw);
    return result;
}

std::vector<std::string> unreachable_terms(const RetrofitProblem& p) {
    std::vector<bool> reached(p.size(), false);
    std::deque<int> frontier;
    for (int i = 0; i < p.size(); ++i) {
        if (p.alpha(i) != 0.0) {
            reached[i] = true;
            frontier.push_back(i);
        }
    }
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop_front();
        for (const auto& [j, beta] : p.neighbors[i]) {
            (void)beta;
            if (!reached[j]) {
                reached[j] = true;
                frontier.push_back(j);
            }
        }
    }
    std::vector<std::string> out;
    for (int i = 0; i < p.size(); ++i) {
        if (!reached[i]) {
            out.push_back(p.vocab[i]);
        }
    }
    return out;
}

}  // namespace kgemb
