#include "kgemb/ppmi.hpp"

#include <cmath>
#include <unordered_set>

#include "kgemb/errors.hpp"
#include "kgemb/svd.hpp"

namespace kgemb {

PruneResult prune_graph(const KnowledgeGraph& g, int min_degree, bool single_pass) {
    const int n = g.node_count();
    std::vector<bool> keep(n, true);
    // live degree = count of kept neighbors (self-loops count once)
    std::vector<int> live_degree(n);
    for (int i = 0; i < n; ++i) {
        live_degree[i] = g.degree(i);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> removed;
        for (int i = 0; i < n; ++i) {
            if (keep[i] && live_degree[i] < min_degree) {
                keep[i] = false;
                removed.push_back(i);
                changed = true;
            }
        }
        for (int i : removed) {
            for (const auto& [j, w] : g.neighbors(i)) {
                if (keep[j]) {
                    --live_degree[j];
                }
            }
        }
        if (single_pass) {
            break;
        }
    }

    PruneResult result;
    result.graph = g.subgraph(keep);
    for (int i = 0; i < n; ++i) {
        if (!keep[i]) {
            result.pruned.push_back(g.nodes()[i]);
        }
    }
    return result;
}

SparseMatrix build_ppmi(const KnowledgeGraph& g, const PpmiConfig& cfg) {
    const int n = g.node_count();
    if (n == 0) {
        throw EmptyGraph("cannot build PPMI for an empty graph");
    }
    const double alpha = cfg.smoothing_exponent;

    // row sums of the symmetric co-occurrence matrix (= column sums)
    std::vector<double> row_sum(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, w] : g.neighbors(i)) {
            (void)j;
            row_sum[i] += w;
        }
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        total += row_sum[i];
    }
    if (total <= 0.0) {
        throw EmptyGraph("graph has no edges");
    }

    std::vector<double> context_smoothed(n, 0.0);
    double context_norm = 0.0;
    for (int j = 0; j < n; ++j) {
        context_smoothed[j] = std::pow(row_sum[j], alpha);
        context_norm += context_smoothed[j];
    }

    auto ppmi_cell = [&](int i, int j, double c) {
        double p_row = row_sum[i] / total;
        double p_context = context_smoothed[j] / context_norm;
        double pmi = std::log(c / total / (p_row * p_context));
        return pmi > 0.0 ? pmi : 0.0;
    };

    // Average each cell with its transpose so the output is exactly
    // symmetric even though the smoothed context marginal is one-sided.
    std::vector<SparseMatrix::Triplet> triplets;
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, c] : g.neighbors(i)) {
            if (j < i) {
                continue;  // handle each unordered pair once
            }
            double value = 0.5 * (ppmi_cell(i, j, c) + ppmi_cell(j, i, c));
            if (value > 0.0) {
                triplets.push_back({i, j, value});
                if (j != i) {
                    triplets.push_back({j, i, value});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(n, n, std::move(triplets), true, g.nodes());
}

EmbeddingMatrix reduce_symmetric(const SparseMatrix& ppmi, const PpmiConfig& cfg) {
    if (!ppmi.symmetric()) {
        throw Error("reduce_symmetric requires a symmetric matrix");
    }
    if (cfg.k > ppmi.rows()) {
        throw RankTooLarge("k = " + std::to_string(cfg.k) + " exceeds matrix size " +
                           std::to_string(ppmi.rows()));
    }
    SvdResult svd = truncated_svd(ppmi, cfg.k, cfg.seed);
    Eigen::MatrixXd rows = svd.u * svd.s.cwiseSqrt().asDiagonal();
    return EmbeddingMatrix(ppmi.row_labels(), unit_normalize_rows(std::move(rows)),
                           true);
}

EmbeddingMatrix expand_to_pruned(const EmbeddingMatrix& emb,
                                 const KnowledgeGraph& g_full,
                                 const std::vector<std::string>& pruned) {
    std::vector<std::string> vocab = emb.vocab();
    std::unordered_set<std::string> seen(vocab.begin(), vocab.end());
    std::vector<std::string> added;
    for (const std::string& uri : pruned) {
        if (seen.insert(uri).second) {
            added.push_back(uri);
        }
    }
    const int n_known = emb.size();
    const int n_total = n_known + static_cast<int>(added.size());
    Eigen::MatrixXd data = Eigen::MatrixXd::Zero(n_total, emb.dim());
    data.topRows(n_known) = emb.data();
    for (const std::string& uri : added) {
        vocab.push_back(uri);
    }

    // row index into `data` for each graph node that has a vector so far
    std::vector<int> node_row(g_full.node_count(), -1);
    for (int r = 0; r < n_total; ++r) {
        int id = g_full.node_id(vocab[r]);
        if (id >= 0 && r < n_known) {
            node_row[id] = r;
        }
    }

    std::vector<int> unresolved;  // row indices of the added nodes
    for (int r = n_known; r < n_total; ++r) {
        unresolved.push_back(r);
    }
    const int max_rounds = 10;
    for (int round = 0; round < max_rounds && !unresolved.empty(); ++round) {
        // all lookups use the state at the start of the round
        std::vector<int> node_row_snapshot = node_row;
        std::vector<int> still_unresolved;
        for (int r : unresolved) {
            int id = g_full.node_id(vocab[r]);
            if (id < 0) {
                continue;  // not a graph node; stays zero
            }
            Eigen::VectorXd sum = Eigen::VectorXd::Zero(emb.dim());
            double weight_total = 0.0;
            for (const auto& [nbr, w] : g_full.neighbors(id)) {
                if (nbr == id) {
                    continue;
                }
                int nbr_row = node_row_snapshot[nbr];
                if (nbr_row >= 0) {
                    sum += w * data.row(nbr_row).transpose();
                    weight_total += w;
                }
            }
            if (weight_total > 0.0) {
                Eigen::VectorXd avg = sum / weight_total;
                double norm = avg.norm();
                data.row(r) = norm > 0.0 ? (avg / norm).transpose() : avg.transpose();
                node_row[id] = r;
            } else {
                still_unresolved.push_back(r);
            }
        }
        unresolved = std::move(still_unresolved);
    }
    // anything still unresolved keeps the zero vector
    return EmbeddingMatrix(std::move(vocab), std::move(data));
}

EmbeddingMatrix build_graph_embeddings(const KnowledgeGraph& g, const PpmiConfig& cfg,
                                       std::size_t* pruned_count) {
    PruneResult pruned = prune_graph(g, cfg.prune_min_degree, cfg.single_pass_prune);
    if (pruned_count) {
        *pruned_count = pruned.pruned.size();
    }
    if (pruned.graph.node_count() == 0) {
        throw EmptyGraph("no nodes survive pruning at min degree " +
                         std::to_string(cfg.prune_min_degree));
    }
    SparseMatrix ppmi = build_ppmi(pruned.graph, cfg);
    EmbeddingMatrix reduced = reduce_symmetric(ppmi, cfg);
    return expand_to_pruned(reduced, g, pruned.pruned);
}

}  // namespace kgemb
