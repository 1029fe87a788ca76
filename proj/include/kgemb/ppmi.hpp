#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgemb/embedding.hpp"
#include "kgemb/graph.hpp"
#include "kgemb/sparse.hpp"

namespace kgemb {

struct PpmiConfig {
    int prune_min_degree = 3;
    double smoothing_exponent = 0.75;  // context distributional smoothing
    int k = 300;
    std::uint64_t seed = 0;
    bool single_pass_prune = false;
};

struct PruneResult {
    KnowledgeGraph graph;
    std::vector<std::string> pruned;  // removed URIs, in node order
};

// Removes nodes with degree < min_degree. By default repeats until a fixed
// point, since removals can push neighbors below the threshold.
PruneResult prune_graph(const KnowledgeGraph& g, int min_degree,
                        bool single_pass = false);

// Smoothed positive pointwise mutual information of the co-occurrence
// matrix given by the graph adjacency. With c_ij the summed edge weights,
// T the grand total, p_i the row marginals and the context marginals
// raised to the smoothing exponent and renormalized, each cell is
// max(0, log(c_ij / T / (p_i * p~_j))). The result is symmetrized by
// averaging with its transpose (smoothing breaks exact cell symmetry) and
// carries the graph's nodes as row labels. Throws EmptyGraph.
SparseMatrix build_ppmi(const KnowledgeGraph& g, const PpmiConfig& cfg);

// Truncated SVD of the (symmetric) PPMI matrix; embedding rows are
// U_k * diag(S_k)^(1/2), combining terms and contexts symmetrically, then
// unit-normalized.
EmbeddingMatrix reduce_symmetric(const SparseMatrix& ppmi, const PpmiConfig& cfg);

// Gives each pruned node the edge-weighted average of its in-vocabulary
// neighbors' vectors (unit-normalized). Nodes left without any resolved
// neighbor are retried for up to 10 rounds, then get the zero vector.
// Rows already in `emb` are carried over bit-for-bit.
EmbeddingMatrix expand_to_pruned(const EmbeddingMatrix& emb,
                                 const KnowledgeGraph& g_full,
                                 const std::vector<std::string>& pruned);

// Full stage: prune, PPMI, reduce, expand back to the pruned nodes.
EmbeddingMatrix build_graph_embeddings(const KnowledgeGraph& g, const PpmiConfig& cfg,
                                       std::size_t* pruned_count = nullptr);

}  // namespace kgemb
