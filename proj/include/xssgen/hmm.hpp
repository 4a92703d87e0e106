#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "xssgen/token.hpp"

namespace xssgen {

using StateId = std::int32_t;

// Distinguished non-emitting endpoints. START owns the init row; END is a
// legal transition target and nothing else.
inline constexpr StateId kStartState = -1;
inline constexpr StateId kEndState = -2;

std::string state_id_name(StateId id);

struct StateData {
    double init_count = 0.0;
    std::map<StateId, double> trans_counts; // targets include kEndState
    std::map<TokenSymbol, double> emit_counts;

    double init_prob = 0.0;
    std::map<StateId, double> trans_probs;
    std::map<TokenSymbol, double> emit_probs;
};

struct ViterbiResult {
    std::vector<StateId> path; // one emitting state per symbol
    double log_prob = 0.0;     // includes the final transition into END
};

// Discrete structure model over token symbols. Probabilities are the
// sufficient-statistic counts under symmetric Dirichlet smoothing across
// each row's support: p = (c + prior) / (total + prior * support).
class Hmm {
public:
    Hmm() = default;
    Hmm(double alpha, double beta) : alpha_(alpha), beta_(beta) {}

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    StateId add_state();
    void ensure_state(StateId id); // for loading explicit ids

    void add_init_count(StateId state, double count);
    void add_trans_count(StateId from, StateId to, double count);
    void add_emit_count(StateId state, const TokenSymbol& symbol, double count);

    // Recomputes every probability row from the counts. Idempotent.
    void renormalize();

    const std::map<StateId, StateData>& states() const { return states_; }
    StateData& state(StateId id);
    const StateData& state(StateId id) const;
    bool has_state(StateId id) const { return states_.count(id) != 0; }
    std::size_t state_count() const { return states_.size(); }

    std::set<TokenSymbol> alphabet() const; // symbols with positive emission count

    // log sum over all START->...->END paths emitting x; -inf when no path.
    // Throws UnknownSymbol for symbols outside the alphabet.
    double sequence_log_likelihood(const std::vector<TokenSymbol>& x) const;

    // Max-probability path; exact ties resolve to the lexicographically
    // smallest state sequence. Throws NoPath when every path is impossible.
    ViterbiResult viterbi(const std::vector<TokenSymbol>& x) const;

private:
    friend Hmm merge_states(const Hmm& m, StateId a, StateId b);

    void check_known(const std::vector<TokenSymbol>& x) const;

    double alpha_ = 0.5;
    double beta_ = 0.5;
    StateId next_id_ = 0;
    std::map<StateId, StateData> states_;
};

// Folds b into a (counts summed, a<->b transitions become a self-loop on
// the kept state min(a,b)) and renormalizes. Throws InvalidStatePair.
Hmm merge_states(const Hmm& m, StateId a, StateId b);

} // namespace xssgen
