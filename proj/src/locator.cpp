#include "xssgen/locator.hpp"

#include <algorithm>
#include <cctype>

#include "xssgen/codec.hpp"
#include "xssgen/errors.hpp"

namespace xssgen::locator {

namespace {

const char* kScriptKeywords[] = {"script", "javascript", "onerror", "onload",
                                 "iframe", "img",        "svg",     "eval",
                                 "alert"};

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }

bool contains_any_of(const std::string& s, const char* chars) {
    return s.find_first_of(chars) != std::string::npos;
}

// on<letters> optionally padded with spaces/tabs before '=', not preceded
// by another identifier character.
bool has_event_handler_pattern(const std::string& lower) {
    for (std::size_t i = 0; i + 2 < lower.size(); ++i) {
        if (lower[i] != 'o' || lower[i + 1] != 'n') continue;
        if (i > 0 && is_alnum(static_cast<unsigned char>(lower[i - 1]))) continue;
        std::size_t j = i + 2;
        std::size_t letters = 0;
        while (j < lower.size() && lower[j] >= 'a' && lower[j] <= 'z') {
            ++j;
            ++letters;
        }
        if (letters == 0) continue;
        while (j < lower.size() && (lower[j] == ' ' || lower[j] == '\t')) ++j;
        if (j < lower.size() && lower[j] == '=') return true;
    }
    return false;
}

std::string plus_to_space(const std::string& s) {
    std::string out = s;
    std::replace(out.begin(), out.end(), '+', ' ');
    return out;
}

CandidateValue make_candidate(std::string param_name, const std::string& url,
                              std::size_t begin, std::size_t end, bool query_value,
                              const WeightConfig& weights) {
    CandidateValue c;
    c.param_name = std::move(param_name);
    c.raw = url.substr(begin, end - begin);
    c.begin = begin;
    c.end = end;
    std::string pre = query_value ? plus_to_space(c.raw) : c.raw;
    c.decoded = codec::decode_fixpoint(pre).output;
    c.features = score_features(c.decoded);
    c.score = 0.0;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        c.score += c.features[i] * weights.weights[i];
    }
    return c;
}

} // namespace

FeatureVector score_features(const std::string& decoded) {
    FeatureVector f{};
    if (decoded.empty()) return f;

    std::string lower = to_lower(decoded);
    f[0] = contains_any_of(decoded, "<>") ? 1.0 : 0.0;
    for (const char* keyword : kScriptKeywords) {
        if (lower.find(keyword) != std::string::npos) {
            f[1] = 1.0;
            break;
        }
    }
    f[2] = contains_any_of(decoded, "\"'") ? 1.0 : 0.0;
    f[3] = has_event_handler_pattern(lower) ? 1.0 : 0.0;
    f[4] = std::min(static_cast<double>(decoded.size()) / 64.0, 1.0);
    std::size_t non_alnum = 0;
    for (unsigned char c : decoded) {
        if (!is_alnum(c)) ++non_alnum;
    }
    // Saturating count rather than a ratio: appending attack markup must
    // never lower the score.
    f[5] = std::min(static_cast<double>(non_alnum) / 16.0, 1.0);
    return f;
}

std::vector<CandidateValue> split_candidates(const std::string& url,
                                             const WeightConfig& weights) {
    if (url.empty()) throw Error(ErrorKind::Data, "locator: empty URL");

    std::vector<CandidateValue> candidates;

    std::size_t frag_pos = url.find('#');
    std::string before_frag = url.substr(0, frag_pos);
    std::size_t query_pos = before_frag.find('?');

    // Path: after scheme://authority, up to the query.
    std::size_t path_begin = 0;
    std::size_t scheme_end = before_frag.find("://");
    if (scheme_end != std::string::npos) {
        std::size_t slash = before_frag.find('/', scheme_end + 3);
        path_begin = slash == std::string::npos ? before_frag.size() : slash;
    }
    std::size_t path_end = query_pos == std::string::npos ? before_frag.size() : query_pos;

    std::size_t seg_begin = path_begin;
    while (seg_begin < path_end) {
        if (url[seg_begin] == '/') {
            ++seg_begin;
            continue;
        }
        std::size_t seg_end = url.find('/', seg_begin);
        if (seg_end == std::string::npos || seg_end > path_end) seg_end = path_end;
        CandidateValue c = make_candidate("", url, seg_begin, seg_end, false, weights);
        // Path segments only count when they look like markup after decoding.
        if (c.decoded.find_first_of("<>\"'") != std::string::npos) {
            candidates.push_back(std::move(c));
        }
        seg_begin = seg_end;
    }

    if (query_pos != std::string::npos) {
        std::size_t q_begin = query_pos + 1;
        std::size_t q_end = before_frag.size();
        std::size_t pair_begin = q_begin;
        while (pair_begin <= q_end) {
            std::size_t pair_end = url.find_first_of("&;", pair_begin);
            if (pair_end == std::string::npos || pair_end > q_end) pair_end = q_end;
            if (pair_end > pair_begin) {
                std::size_t eq = url.find('=', pair_begin);
                std::string name;
                std::size_t value_begin = pair_begin;
                if (eq != std::string::npos && eq < pair_end) {
                    name = url.substr(pair_begin, eq - pair_begin);
                    value_begin = eq + 1;
                }
                candidates.push_back(
                    make_candidate(std::move(name), url, value_begin, pair_end, true, weights));
            }
            if (pair_end >= q_end) break;
            pair_begin = pair_end + 1;
        }
    }

    if (frag_pos != std::string::npos && frag_pos + 1 < url.size()) {
        candidates.push_back(
            make_candidate("", url, frag_pos + 1, url.size(), false, weights));
    }

    if (candidates.empty()) {
        throw NoCandidates("locator: no query, fragment, or suspicious path segment in " +
                           url);
    }
    return candidates;
}

LocatedAttack locate_attack(const std::string& url, const WeightConfig& weights) {
    LocatedAttack located;
    located.source_url = url;
    located.all_candidates = split_candidates(url, weights);
    std::size_t best = 0;
    for (std::size_t i = 1; i < located.all_candidates.size(); ++i) {
        if (located.all_candidates[i].score > located.all_candidates[best].score) {
            best = i; // strict '>' keeps the earliest candidate on ties
        }
    }
    located.candidate = located.all_candidates[best];
    return located;
}

} // namespace xssgen::locator
