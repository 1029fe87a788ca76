#include "kgemb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "kgemb/errors.hpp"
#include "kgemb/term.hpp"

namespace kgemb {

int KnowledgeGraph::node_id(const std::string& uri) const {
    auto it = node_index_.find(uri);
    return it == node_index_.end() ? -1 : it->second;
}

const std::vector<std::pair<int, double>>& KnowledgeGraph::neighbors(int id) const {
    return adjacency_.at(static_cast<std::size_t>(id));
}

int KnowledgeGraph::degree(int id) const {
    return static_cast<int>(adjacency_.at(static_cast<std::size_t>(id)).size());
}

int KnowledgeGraph::degree(const std::string& uri) const {
    int id = node_id(uri);
    if (id < 0) {
        throw UnknownNode("no such node: '" + uri + "'");
    }
    return degree(id);
}

void KnowledgeGraph::build_adjacency() {
    adjacency_.assign(nodes_.size(), {});
    // weight per unordered pair, summed over relations and directions
    std::vector<std::map<int, double>> acc(nodes_.size());
    for (const Assertion& a : assertions_) {
        int i = node_index_.at(a.start);
        int j = node_index_.at(a.end);
        acc[i][j] += a.weight;
        if (i != j) {
            acc[j][i] += a.weight;
        }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
        adjacency_[i].assign(acc[i].begin(), acc[i].end());
    }
}

namespace {

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", w);
    return buf;
}

}  // namespace

void KnowledgeGraph::dump(std::ostream& out) const {
    std::vector<std::string> lines;
    lines.reserve(assertions_.size());
    for (const Assertion& a : assertions_) {
        lines.push_back(core_relations()[a.relation].to_string() + "\t" + a.start +
                        "\t" + a.end + "\t" + format_weight(a.weight));
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) {
        out << line << "\n";
    }
}

KnowledgeGraph KnowledgeGraph::subgraph(const std::vector<bool>& keep) const {
    GraphBuilder builder;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (keep[i]) {
            builder.add_node(nodes_[i]);
        }
    }
    for (const Assertion& a : assertions_) {
        if (keep[node_index_.at(a.start)] && keep[node_index_.at(a.end)]) {
            builder.add(a.relation, a.start, a.end, a.weight);
        }
    }
    // Sense edges were synthesized (or present) in the source graph already.
    return builder.finish(false);
}

int GraphBuilder::intern(const std::string& uri) {
    auto it = graph_.node_index_.find(uri);
    if (it != graph_.node_index_.end()) {
        return it->second;
    }
    int id = static_cast<int>(graph_.nodes_.size());
    graph_.nodes_.push_back(uri);
    graph_.node_index_.emplace(uri, id);
    return id;
}

void GraphBuilder::add_node(const std::string& uri) { intern(uri); }

void GraphBuilder::add(int relation, const std::string& start_uri,
                       const std::string& end_uri, double weight) {
    if (relation < 0 || relation >= static_cast<int>(core_relations().size())) {
        throw UnknownRelation("relation index out of range");
    }
    if (!(weight > 0) || !std::isfinite(weight)) {
        throw Error("assertion weight must be a positive finite number");
    }
    const std::string* start = &start_uri;
    const std::string* end = &end_uri;
    if (core_relations()[relation].symmetric && end_uri < start_uri) {
        std::swap(start, end);
    }
    intern(*start);
    intern(*end);
    std::string key = std::to_string(relation) + "\t" + *start + "\t" + *end;
    auto it = assertion_index_.find(key);
    if (it != assertion_index_.end()) {
        graph_.assertions_[it->second].weight += weight;
    } else {
        assertion_index_.emplace(std::move(key), graph_.assertions_.size());
        graph_.assertions_.push_back(Assertion{relation, *start, *end, weight});
    }
}

void GraphBuilder::add(const std::string& relation_name, const std::string& start_uri,
                       const std::string& end_uri, double weight) {
    int rel = find_relation(relation_name);
    if (rel < 0) {
        throw UnknownRelation("unknown relation: '" + relation_name + "'");
    }
    add(rel, start_uri, end_uri, weight);
}

KnowledgeGraph GraphBuilder::finish(bool synthesize_sense_edges) {
    if (synthesize_sense_edges) {
        int sense_of = find_relation("SenseOf");
        // unordered pairs already connected by SenseOf
        std::unordered_map<std::string, bool> sense_linked;
        for (const Assertion& as : graph_.assertions_) {
            if (as.relation == sense_of) {
                sense_linked[std::min(as.start, as.end) + "\t" +
                             std::max(as.start, as.end)] = true;
            }
        }
        std::vector<std::pair<std::string, std::string>> to_add;
        for (const std::string& uri : graph_.nodes_) {
            TermUri term;
            try {
                term = parse_term_uri(uri);
            } catch (const MalformedUri&) {
                continue;  // nodes are validated at load; be permissive here
            }
            if (!term.has_sense()) {
                continue;
            }
            std::string base = term.base().to_string();
            std::string key = std::min(uri, base) + "\t" + std::max(uri, base);
            if (!sense_linked.count(key)) {
                to_add.emplace_back(uri, base);
            }
        }
        for (const auto& [sense_uri, base_uri] : to_add) {
            add(sense_of, sense_uri, base_uri, 1.0);
        }
    }
    graph_.build_adjacency();
    assertion_index_.clear();
    return std::move(graph_);
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
    return fields;
}

double parse_weight(const std::string& field, long line_no) {
    std::size_t consumed = 0;
    double w = 0;
    try {
        w = std::stod(field, &consumed);
    } catch (const std::exception&) {
        throw ParseError("bad weight '" + field + "'", line_no);
    }
    if (consumed != field.size() || !std::isfinite(w) || w <= 0) {
        throw ParseError("weight must be a positive number, got '" + field + "'",
                         line_no);
    }
    return w;
}

}  // namespace

KnowledgeGraph load_assertions(std::istream& in, const LoadOptions& options,
                               LoadReport* report) {
    GraphBuilder builder;
    LoadReport local;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        ++local.lines_read;
        std::vector<std::string> fields = split_tabs(line);

        std::string relation_name;
        std::string start_uri;
        std::string end_uri;
        double weight = 0;
        try {
            if (options.format == AssertionFormat::TsvUri) {
                if (fields.size() != 4) {
                    throw ParseError("expected 4 tab-separated fields, got " +
                                         std::to_string(fields.size()),
                                     line_no);
                }
                relation_name = fields[0];
                start_uri = parse_term_uri(fields[1]).to_string();
                end_uri = parse_term_uri(fields[2]).to_string();
                weight = parse_weight(fields[3], line_no);
            } else {
                if (fields.size() != 6) {
                    throw ParseError("expected 6 tab-separated fields, got " +
                                         std::to_string(fields.size()),
                                     line_no);
                }
                relation_name = fields[0];
                start_uri = normalize_term(fields[2], fields[1]).to_string();
                end_uri = normalize_term(fields[4], fields[3]).to_string();
                weight = parse_weight(fields[5], line_no);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }

        int rel = find_relation(relation_name);
        if (rel < 0) {
            if (options.lax) {
                ++local.skipped_unknown_relation;
                continue;
            }
            throw UnknownRelation("line " + std::to_string(line_no) +
                                  ": unknown relation '" + relation_name + "'");
        }
        builder.add(rel, start_uri, end_uri, weight);
        ++local.assertions_loaded;
    }
    if (report) {
        *report = local;
    }
    return builder.finish(options.synthesize_sense_edges);
}

}  // namespace kgemb
