#include "xssgen/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xssgen/errors.hpp"

namespace xssgen {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = std::max(a, b);
    return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

// Row normalization over the observed support only; events outside the
// support keep probability zero so impossible orders stay impossible.
template <typename Key>
void normalize_row(const std::map<Key, double>& counts, std::map<Key, double>& probs,
                   double prior) {
    probs.clear();
    double total = 0.0;
    for (const auto& [key, c] : counts) total += c;
    std::size_t support = counts.size();
    if (support == 0) return;
    double denom = total + prior * static_cast<double>(support);
    for (const auto& [key, c] : counts) probs[key] = (c + prior) / denom;
}

} // namespace

std::string state_id_name(StateId id) {
    if (id == kStartState) return "START";
    if (id == kEndState) return "END";
    return std::to_string(id);
}

StateId Hmm::add_state() {
    StateId id = next_id_++;
    states_[id];
    return id;
}

void Hmm::ensure_state(StateId id) {
    if (id < 0) throw Error(ErrorKind::Internal, "ensure_state: reserved id");
    states_[id];
    next_id_ = std::max(next_id_, id + 1);
}

StateData& Hmm::state(StateId id) {
    auto it = states_.find(id);
    if (it == states_.end()) {
        throw Error(ErrorKind::Internal, "unknown state " + state_id_name(id));
    }
    return it->second;
}

const StateData& Hmm::state(StateId id) const {
    auto it = states_.find(id);
    if (it == states_.end()) {
        throw Error(ErrorKind::Internal, "unknown state " + state_id_name(id));
    }
    return it->second;
}

void Hmm::add_init_count(StateId s, double count) { state(s).init_count += count; }

void Hmm::add_trans_count(StateId from, StateId to, double count) {
    if (to != kEndState && !has_state(to)) {
        throw Error(ErrorKind::Internal, "transition to unknown state " + state_id_name(to));
    }
    state(from).trans_counts[to] += count;
}

void Hmm::add_emit_count(StateId s, const TokenSymbol& symbol, double count) {
    state(s).emit_counts[symbol] += count;
}

void Hmm::renormalize() {
    // Init row: a transition row owned by START, smoothed with alpha.
    std::map<StateId, double> init_counts;
    for (const auto& [id, data] : states_) {
        if (data.init_count > 0.0) init_counts[id] = data.init_count;
    }
    std::map<StateId, double> init_probs;
    normalize_row(init_counts, init_probs, alpha_);
    for (auto& [id, data] : states_) {
        auto it = init_probs.find(id);
        data.init_prob = it == init_probs.end() ? 0.0 : it->second;
    }

    for (auto& [id, data] : states_) {
        normalize_row(data.trans_counts, data.trans_probs, alpha_);
        normalize_row(data.emit_counts, data.emit_probs, beta_);
    }
}

std::set<TokenSymbol> Hmm::alphabet() const {
    std::set<TokenSymbol> out;
    for (const auto& [id, data] : states_) {
        for (const auto& [symbol, count] : data.emit_counts) {
            if (count > 0.0) out.insert(symbol);
        }
    }
    return out;
}

void Hmm::check_known(const std::vector<TokenSymbol>& x) const {
    std::set<TokenSymbol> known = alphabet();
    for (const TokenSymbol& symbol : x) {
        if (!known.count(symbol)) {
            throw UnknownSymbol("symbol outside model alphabet: " + symbol.str());
        }
    }
}

double Hmm::sequence_log_likelihood(const std::vector<TokenSymbol>& x) const {
    if (x.empty()) throw Error(ErrorKind::Data, "likelihood: empty sequence");
    check_known(x);

    // Forward pass in log space, scattering along sparse outgoing rows.
    std::map<StateId, double> cur;
    for (const auto& [id, data] : states_) {
        if (data.init_prob <= 0.0) continue;
        auto it = data.emit_probs.find(x[0]);
        if (it == data.emit_probs.end()) continue;
        cur[id] = std::log(data.init_prob) + std::log(it->second);
    }
    for (std::size_t t = 1; t < x.size(); ++t) {
        std::map<StateId, double> next;
        for (const auto& [id, lp] : cur) {
            for (const auto& [to, p] : state(id).trans_probs) {
                if (to == kEndState) continue;
                auto it = state(to).emit_probs.find(x[t]);
                if (it == state(to).emit_probs.end()) continue;
                double cand = lp + std::log(p) + std::log(it->second);
                auto [slot, inserted] = next.emplace(to, cand);
                if (!inserted) slot->second = log_sum_exp(slot->second, cand);
            }
        }
        cur = std::move(next);
    }
    double total = kNegInf;
    for (const auto& [id, lp] : cur) {
        auto it = state(id).trans_probs.find(kEndState);
        if (it == state(id).trans_probs.end()) continue;
        total = log_sum_exp(total, lp + std::log(it->second));
    }
    return total;
}

ViterbiResult Hmm::viterbi(const std::vector<TokenSymbol>& x) const {
    if (x.empty()) throw Error(ErrorKind::Data, "viterbi: empty sequence");
    check_known(x);

    // Suffix-value DP: delta[t][s] is the best log-probability of emitting
    // x[t..] starting in s and reaching END. Reconstruction then walks
    // forward taking the lowest state id on exact ties, which yields the
    // lexicographically smallest optimal path.
    std::size_t len = x.size();
    std::vector<std::map<StateId, double>> delta(len);

    for (const auto& [id, data] : states_) {
        auto emit = data.emit_probs.find(x[len - 1]);
        if (emit == data.emit_probs.end()) continue;
        auto end = data.trans_probs.find(kEndState);
        if (end == data.trans_probs.end()) continue;
        delta[len - 1][id] = std::log(emit->second) + std::log(end->second);
    }
    for (std::size_t t = len - 1; t-- > 0;) {
        for (const auto& [id, data] : states_) {
            auto emit = data.emit_probs.find(x[t]);
            if (emit == data.emit_probs.end()) continue;
            double best = kNegInf;
            for (const auto& [to, p] : data.trans_probs) {
                if (to == kEndState) continue;
                auto next = delta[t + 1].find(to);
                if (next == delta[t + 1].end()) continue;
                double cand = std::log(p) + next->second;
                if (cand > best) best = cand;
            }
            if (best != kNegInf) delta[t][id] = std::log(emit->second) + best;
        }
    }

    ViterbiResult result;
    double best = kNegInf;
    StateId pick = kEndState;
    for (const auto& [id, lp] : delta[0]) {
        const StateData& data = state(id);
        if (data.init_prob <= 0.0) continue;
        double cand = std::log(data.init_prob) + lp;
        if (cand > best) { // strict '>' with ascending ids: lowest id wins ties
            best = cand;
            pick = id;
        }
    }
    if (pick == kEndState) throw NoPath("viterbi: no path emits the sequence");
    result.log_prob = best;
    result.path.push_back(pick);

    for (std::size_t t = 0; t + 1 < len; ++t) {
        const StateData& data = state(result.path.back());
        double step_best = kNegInf;
        StateId next_pick = kEndState;
        for (const auto& [to, p] : data.trans_probs) {
            if (to == kEndState) continue;
            auto next = delta[t + 1].find(to);
            if (next == delta[t + 1].end()) continue;
            double cand = std::log(p) + next->second;
            if (cand > step_best) {
                step_best = cand;
                next_pick = to;
            }
        }
        if (next_pick == kEndState) {
            throw Error(ErrorKind::Internal, "viterbi: broken backtrack");
        }
        result.path.push_back(next_pick);
    }
    return result;
}

Hmm merge_states(const Hmm& m, StateId a, StateId b) {
    if (a == b || a < 0 || b < 0 || !m.has_state(a) || !m.has_state(b)) {
        throw InvalidStatePair("merge_states: need two distinct emitting states");
    }
    StateId keep = std::min(a, b);
    StateId drop = std::max(a, b);

    Hmm out = m;
    StateData& kept = out.state(keep);
    StateData dropped = out.state(drop); // copy before erasing

    kept.init_count += dropped.init_count;
    for (const auto& [symbol, c] : dropped.emit_counts) kept.emit_counts[symbol] += c;

    auto remap = [&](StateId id) { return id == drop ? keep : id; };
    std::map<StateId, double> folded;
    for (const auto& [to, c] : kept.trans_counts) folded[remap(to)] += c;
    for (const auto& [to, c] : dropped.trans_counts) folded[remap(to)] += c;
    kept.trans_counts = std::move(folded);

    for (auto& [id, data] : out.states_) {
        if (id == keep) continue;
        auto it = data.trans_counts.find(drop);
        if (it == data.trans_counts.end()) continue;
        data.trans_counts[keep] += it->second;
        data.trans_counts.erase(it);
    }

    out.states_.erase(drop);
    out.renormalize();
    return out;
}

} // namespace xssgen
