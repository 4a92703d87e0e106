#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xssgen/hmm.hpp"
#include "xssgen/token.hpp"

namespace xssgen::learner {

enum class LikelihoodMode {
    // Likelihood of the stored chain alignments, which factorizes into the
    // count tables and is linear to evaluate. This is the classic Viterbi
    // approximation used by best-first model merging.
    ViterbiApprox,
    // Exact forward sums per training sequence. Quadratic per candidate;
    // meant for desk-scale runs and oracle checks.
    ForwardExact,
};

const char* likelihood_mode_name(LikelihoodMode mode);
LikelihoodMode likelihood_mode_from_name(const std::string& name);

struct LearnerConfig {
    double dirichlet_alpha = 0.5;  // transition rows (including init)
    double dirichlet_beta = 0.5;   // emission rows
    double structure_lambda = 1.0; // per-parameter description-length penalty
    LikelihoodMode likelihood_mode = LikelihoodMode::ViterbiApprox;
    std::optional<std::int64_t> max_merges;

    void validate() const;
};

struct MergeCandidate {
    StateId state_a = 0;
    StateId state_b = 0;
    double delta_log_posterior = 0.0;
};

struct MergeRecord {
    StateId kept = 0;
    StateId dropped = 0;
    double delta = 0.0;
    double log_posterior_after = 0.0;
};

struct LearnResult {
    Hmm model;
    std::vector<MergeRecord> merges;
    double chain_log_posterior = 0.0;
    double final_log_posterior = 0.0;
};

// Appends x as a fresh chain: one state per token, unit counts along
// START -> chain -> END. Existing counts are untouched.
Hmm incorporate(Hmm m, const TokenSequence& x);

// log P(M) + log P(X|M) per the configured likelihood mode. The prior is
// -lambda * (states + nonzero transitions + nonzero emissions) plus the
// symmetric Dirichlet density of every probability row over its support.
double log_posterior(const Hmm& m, const std::vector<std::vector<TokenSymbol>>& X,
                     const LearnerConfig& cfg);

// Incorporates all sequences, then best-first merges the state pair with
// the largest posterior gain until no merge improves the posterior (or
// max_merges is hit). Every accepted merge strictly increases the
// configured posterior; this is asserted per step.
LearnResult learn(const std::vector<TokenSequence>& X, const LearnerConfig& cfg);

} // namespace xssgen::learner
