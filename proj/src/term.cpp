#include "kgemb/term.hpp"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <memory>
#include <mutex>

#include "kgemb/errors.hpp"

namespace kgemb {

std::string TermUri::to_string() const {
    std::string out = "/c/" + language + "/" + text;
    if (!sense.empty()) {
        out += "/" + sense;
    }
    return out;
}

const std::vector<RelationUri>& core_relations() {
    static const std::vector<RelationUri> relations = {
        // symmetric
        {"Antonym", true},
        {"DistinctFrom", true},
        {"EtymologicallyRelatedTo", true},
        {"LocatedNear", true},
        {"RelatedTo", true},
        {"SimilarTo", true},
        {"Synonym", true},
        // asymmetric
        {"AtLocation", false},
        {"CapableOf", false},
        {"Causes", false},
        {"CausesDesire", false},
        {"CreatedBy", false},
        {"DefinedAs", false},
        {"DerivedFrom", false},
        {"Desires", false},
        {"Entails", false},
        {"ExternalURL", false},
        {"FormOf", false},
        {"HasA", false},
        {"HasContext", false},
        {"HasFirstSubevent", false},
        {"HasLastSubevent", false},
        {"HasPrerequisite", false},
        {"HasProperty", false},
        {"InstanceOf", false},
        {"IsA", false},
        {"MadeOf", false},
        {"MannerOf", false},
        {"MotivatedByGoal", false},
        {"ObstructedBy", false},
        {"PartOf", false},
        {"ReceivesAction", false},
        {"SenseOf", false},
        {"SymbolOf", false},
        {"UsedFor", false},
    };
    return relations;
}

int find_relation(std::string_view name_or_uri) {
    std::string_view name = name_or_uri;
    if (name.substr(0, 3) == "/r/") {
        name.remove_prefix(3);
    }
    const auto& rels = core_relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

bool valid_language(std::string_view code) {
    // BCP-47 shape: lowercase alpha primary subtag (2-8 chars), optional
    // lowercase alphanumeric subtags of 1-8 chars joined by '-'.
    if (code.empty()) return false;
    std::size_t seg_start = 0;
    bool first = true;
    for (std::size_t i = 0; i <= code.size(); ++i) {
        if (i == code.size() || code[i] == '-') {
            std::size_t len = i - seg_start;
            if (len < 1 || len > 8) return false;
            if (first && len < 2) return false;
            for (std::size_t j = seg_start; j < i; ++j) {
                char c = code[j];
                bool alpha = c >= 'a' && c <= 'z';
                bool digit = c >= '0' && c <= '9';
                if (first ? !alpha : !(alpha || digit)) return false;
            }
            first = false;
            seg_start = i + 1;
        }
    }
    return true;
}

namespace {

bool token_has_word_char(const icu::UnicodeString& tok) {
    for (int32_t i = 0; i < tok.length(); /* advanced below */) {
        UChar32 c = tok.char32At(i);
        if (u_isalnum(c) || u_hasBinaryProperty(c, UCHAR_IDEOGRAPHIC)) {
            return true;
        }
        i += U16_LENGTH(c);
    }
    return false;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& raw_text) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfkc = icu::Normalizer2::getNFKCInstance(status);
    icu::UnicodeString input = icu::UnicodeString::fromUTF8(raw_text);
    icu::UnicodeString normalized = nfkc->normalize(input, status);
    if (U_FAILURE(status)) {
        throw Error(std::string("unicode normalization failed: ") + u_errorName(status));
    }
    normalized.toLower(icu::Locale::getRoot());

    std::unique_ptr<icu::BreakIterator> breaker(
        icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
    if (U_FAILURE(status)) {
        throw Error(std::string("word break iterator unavailable: ") + u_errorName(status));
    }
    breaker->setText(normalized);

    std::vector<std::string> tokens;
    int32_t start = breaker->first();
    for (int32_t end = breaker->next(); end != icu::BreakIterator::DONE;
         start = end, end = breaker->next()) {
        icu::UnicodeString piece;
        normalized.extractBetween(start, end, piece);
        if (!token_has_word_char(piece)) {
            continue;  // whitespace or punctuation-only segment
        }
        std::string utf8;
        piece.toUTF8String(utf8);
        tokens.push_back(std::move(utf8));
    }
    return tokens;
}

TermUri normalize_term(const std::string& raw_text, const std::string& language) {
    if (!valid_language(language)) {
        throw InvalidLanguage("invalid language code: '" + language + "'");
    }
    std::vector<std::string> tokens = tokenize(raw_text);
    if (tokens.empty()) {
        throw EmptyAfterNormalization("no word tokens remain after normalizing: '" +
                                      raw_text + "'");
    }
    std::string text = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        text += "_";
        text += tokens[i];
    }
    return TermUri{language, std::move(text), ""};
}

TermUri parse_term_uri(const std::string& uri) {
    if (uri.substr(0, 3) != "/c/") {
        throw MalformedUri("term URI must begin with /c/: '" + uri + "'");
    }
    std::vector<std::string> segments;
    std::size_t pos = 3;
    while (pos <= uri.size()) {
        std::size_t slash = uri.find('/', pos);
        if (slash == std::string::npos) {
            segments.push_back(uri.substr(pos));
            break;
        }
        segments.push_back(uri.substr(pos, slash - pos));
        pos = slash + 1;
    }
    if (segments.size() < 2 || segments.size() > 3) {
        throw MalformedUri("term URI needs language and text segments: '" + uri + "'");
    }
    for (const auto& seg : segments) {
        if (seg.empty()) {
            throw MalformedUri("term URI has an empty segment: '" + uri + "'");
        }
    }
    if (!valid_language(segments[0])) {
        throw MalformedUri("term URI has a malformed language code: '" + uri + "'");
    }
    for (char c : segments[1]) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            throw MalformedUri("term URI text contains whitespace: '" + uri + "'");
        }
    }
    TermUri term;
    term.language = segments[0];
    term.text = segments[1];
    if (segments.size() == 3) {
        term.sense = segments[2];
    }
    return term;
}

}  // namespace kgemb
