#pragma once

#include <array>
#include <string>
#include <vector>

namespace xssgen::locator {

inline constexpr std::size_t kFeatureCount = 6;

// f1 angle brackets, f2 script-inducing keyword, f3 quote characters,
// f4 on*= handler pattern, f5 saturating length, f6 saturating count of
// non-alphanumeric characters.
using FeatureVector = std::array<double, kFeatureCount>;

struct WeightConfig {
    std::array<double, kFeatureCount> weights{3.0, 3.0, 2.0, 3.0, 1.0, 1.0};
};

struct CandidateValue {
    std::string param_name; // empty for path segments and fragments
    std::string raw;        // exact byte span from the URL
    std::string decoded;    // codec fixpoint (query values get '+' -> space first)
    FeatureVector features{};
    double score = 0.0;
    std::size_t begin = 0;  // byte span in the source URL
    std::size_t end = 0;
};

struct LocatedAttack {
    std::string source_url;
    CandidateValue candidate;
    std::vector<CandidateValue> all_candidates;
};

FeatureVector score_features(const std::string& decoded);

// Candidates in URL order: suspicious path segments, query parameter
// values, then the fragment. Throws NoCandidates when none exist.
std::vector<CandidateValue> split_candidates(const std::string& url,
                                             const WeightConfig& weights = {});

// Argmax-scored candidate; ties break toward the earliest URL position.
LocatedAttack locate_attack(const std::string& url, const WeightConfig& weights = {});

} // namespace xssgen::locator
