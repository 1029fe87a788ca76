#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kgemb {

// A weighted, relation-labeled edge between two term URIs. `relation` is an
// index into core_relations(). For symmetric relations the stored (start,
// end) pair is ordered lexicographically by serialized URI.
struct Assertion {
    int relation;
    std::string start;
    std::string end;
    double weight;
};

// Immutable after load; safe for concurrent reads.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;

    int node_count() const { return static_cast<int>(nodes_.size()); }
    std::size_t edge_count() const { return assertions_.size(); }

    // Serialized term URIs in insertion order; node ids index this vector.
    const std::vector<std::string>& nodes() const { return nodes_; }
    int node_id(const std::string& uri) const;
    bool has_node(const std::string& uri) const { return node_id(uri) >= 0; }

    // Canonicalized assertions with duplicate lines merged (weights summed).
    const std::vector<Assertion>& assertions() const { return assertions_; }

    // Sorted by neighbor id; weight is the sum over all assertions between
    // the two nodes in either direction. Symmetric: (i,j) mirrors (j,i).
    const std::vector<std::pair<int, double>>& neighbors(int id) const;

    // Count of distinct neighbors (a self-loop counts once).
    int degree(int id) const;
    int degree(const std::string& uri) const;  // throws UnknownNode

    // Canonical dump: tsv-uri lines sorted lexicographically, weights with
    // 6 significant digits. Stable golden-file target.
    void dump(std::ostream& out) const;

    // Rebuilds the graph keeping only the given nodes (and the assertions
    // whose endpoints both survive). Node order is preserved.
    KnowledgeGraph subgraph(const std::vector<bool>& keep) const;

    friend class GraphBuilder;

private:
    void build_adjacency();

    std::vector<std::string> nodes_;
    std::unordered_map<std::string, int> node_index_;
    std::vector<Assertion> assertions_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

// Incremental construction used by load_assertions and the tests.
class GraphBuilder {
public:
    // Adds one assertion; symmetric relations are canonicalized and repeats
    // of (relation, start, end) accumulate weight.
    void add(int relation, const std::string& start_uri, const std::string& end_uri,
             double weight);
    void add(const std::string& relation_name, const std::string& start_uri,
             const std::string& end_uri, double weight);

    // Ensures a node exists even if no assertion mentions it.
    void add_node(const std::string& uri);

    // Synthesizes SenseOf edges from sense-suffixed nodes to their base
    // terms (weight 1.0) unless such an edge is already present, then
    // freezes the graph and builds the adjacency index.
    KnowledgeGraph finish(bool synthesize_sense_edges = true);

private:
    int intern(const std::string& uri);

    KnowledgeGraph graph_;
    std::unordered_map<std::string, std::size_t> assertion_index_;
};

enum class AssertionFormat {
    TsvUri,  // /r/Rel \t /c/l/start \t /c/l/end \t weight
    TsvRaw,  // Rel \t lang \t raw start \t lang \t raw end \t weight
};

struct LoadOptions {
    AssertionFormat format = AssertionFormat::TsvUri;
    bool lax = false;  // skip lines with unknown relations instead of failing
    bool synthesize_sense_edges = true;
};

struct LoadReport {
    std::size_t lines_read = 0;
    std::size_t assertions_loaded = 0;
    std::size_t skipped_unknown_relation = 0;
};

// Throws ParseError (with line number) on malformed lines and
// UnknownRelation when a relation is outside the closed set and !lax.
KnowledgeGraph load_assertions(std::istream& in, const LoadOptions& options = {},
                               LoadReport* report = nullptr);

}  // namespace kgemb
