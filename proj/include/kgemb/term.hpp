#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kgemb {

// Canonical node identifier: /c/<language>/<text>[/<sense>].
// `text` is NFKC-normalized, lowercased, underscore-joined tokens.
struct TermUri {
    std::string language;
    std::string text;
    std::string sense;  // empty when absent

    bool has_sense() const { return !sense.empty(); }
    TermUri base() const { return TermUri{language, text, ""}; }
    std::string to_string() const;

    auto operator<=>(const TermUri&) const = default;
};

// One of the closed relation vocabulary, serialized as /r/<name>.
struct RelationUri {
    std::string name;
    bool symmetric;
    std::string to_string() const { return "/r/" + name; }
};

// The closed relation set, in a fixed order. Indices into this vector are
// the stable relation ids used by the graph.
const std::vector<RelationUri>& core_relations();

// Accepts "UsedFor" or "/r/UsedFor"; returns -1 when unknown.
int find_relation(std::string_view name_or_uri);

bool valid_language(std::string_view code);

// NFKC-normalize, lowercase, segment into words (UAX #29), and drop tokens
// that contain no letter or digit. Returns UTF-8 tokens.
std::vector<std::string> tokenize(const std::string& raw_text);

// Throws EmptyAfterNormalization / InvalidLanguage.
TermUri normalize_term(const std::string& raw_text, const std::string& language);

// Parses "/c/en/lead/n" forms. Throws MalformedUri.
TermUri parse_term_uri(const std::string& uri);

}  // namespace kgemb
