#include "rollcall/solver.hpp"

#include "rollcall/gadget.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace rollcall {

namespace {

bool can_afford(const std::optional<Nat>& budget_left,
                const std::optional<Nat>& bribes_left, bool priced,
                const VoterRecord& voter) {
    if (bribes_left && *bribes_left < 1) return false;
    if (budget_left) {
        if (priced) {
            if (voter.effective_price() > *budget_left) return false;
        } else if (*budget_left < 1) {
            return false;
        }
    }
    return true;
}

// Memoized game evaluator.  Settled votes are summarized as a score table for
// Scoring/Approval (a sufficient statistic there); the gadget rule reads
// voter names and whole orders, so its signature is the settled ballot
// sequence itself (a bare multiset would lose the name binding).
class Engine {
  public:
    Engine(const Obs& obs, const Variant& variant, const Rule& rule,
           const SolveOptions& opts)
        : obs_(obs), variant_(variant), rule_(rule) {
        validate_obs(obs, variant, rule);
        pool_ = enumerate_ballots(rule, obs.candidates, opts.enum_caps());
        desired_ = desired_mask(goal_of(obs, variant));

        const Spent sp = spent(obs, variant);
        if (variant.priced) {
            budget_left_ = *obs.limit - *sp.cost;
            if (variant.bribe_cap) bribes_left_ = *variant.bribe_cap - sp.count;
        } else if (variant.bribe_cap) {
            bribes_left_ = *variant.bribe_cap - sp.count;
        } else {
            budget_left_ = *obs.limit - sp.count;
        }

        scoring_path_ = rule.kind != Rule::Kind::gadget;
        if (scoring_path_) {
            std::vector<Vote> past;
            for (const auto& v : obs.past)
                past.push_back({v.name, *v.ballot, v.effective_weight()});
            scores_ = score_table(rule, obs.candidates, past);
        } else {
            for (std::size_t i = 0; i < pool_.size(); ++i)
                pool_of_ballot_.emplace(pool_[i], static_cast<int>(i));
            init_gadget();
        }
    }

    SolveOutcome run() {
        // leave first, then bribe contents in enumeration order: the witness
        // is the first winning move of this sequence.
        push_vote(obs_.current, *obs_.current.ballot);
        bool ok = settled_value();
        pop_vote(obs_.current, *obs_.current.ballot);
        if (ok) return {true, CurrentMove::leave()};

        if (can_afford(budget_left_, bribes_left_, variant_.priced, obs_.current)) {
            for (const Ballot& content : pool_) {
                pay(obs_.current);
                push_vote(obs_.current, content);
                ok = settled_value();
                pop_vote(obs_.current, content);
                refund(obs_.current);
                if (ok) return {true, CurrentMove::bribe_to(content)};
            }
        }
        return {false, std::nullopt};
    }

  private:
    // ---- settled-state bookkeeping --------------------------------------

    void apply_scores(const Ballot& b, const Nat& w, bool add) {
        if (w == 0) return;
        const int m = obs_.candidates.size();
        if (rule_.kind == Rule::Kind::scoring) {
            for (int pos = 0; pos < m; ++pos) {
                const Nat delta = rule_.alpha[pos] * w;
                if (delta == 0) continue;
                if (add)
                    scores_[b.slots[pos]] += delta;
                else
                    scores_[b.slots[pos]] -= delta;
            }
        } else {
            for (int c = 0; c < m; ++c) {
                if (!b.slots[c]) continue;
                if (add)
                    scores_[c] += w;
                else
                    scores_[c] -= w;
            }
        }
    }

    void push_vote(const VoterRecord& voter, const Ballot& b) {
        if (scoring_path_)
            apply_scores(b, voter.effective_weight(), true);
        else
            cast_.push_back(pool_of_ballot_.at(b));
    }

    void pop_vote(const VoterRecord& voter, const Ballot& b) {
        if (scoring_path_)
            apply_scores(b, voter.effective_weight(), false);
        else
            cast_.pop_back();
    }

    void pay(const VoterRecord& voter) {
        if (budget_left_)
            *budget_left_ -= variant_.priced ? voter.effective_price() : Nat(1);
        if (bribes_left_) *bribes_left_ -= 1;
    }

    void refund(const VoterRecord& voter) {
        if (budget_left_)
            *budget_left_ += variant_.priced ? voter.effective_price() : Nat(1);
        if (bribes_left_) *bribes_left_ += 1;
    }

    // ---- game tree -------------------------------------------------------

    bool settled_value();
    bool pending_value(const VoterRecord& voter, const Ballot& revealed);
    bool leaf_value();

    void init_gadget();

    const Obs& obs_;
    const Variant& variant_;
    const Rule& rule_;
    std::vector<Ballot> pool_;
    std::vector<char> desired_;

    bool scoring_path_ = true;
    ScoreTable scores_;
    std::vector<int> cast_;  // pool ids of settled votes from the current voter on
    std::size_t next_ = 0;   // settled future voters
    std::optional<Nat> budget_left_;
    std::optional<Nat> bribes_left_;

    struct ScoreKey {
        ScoreTable scores;
        std::size_t next;
        std::optional<Nat> budget;
        std::optional<Nat> bribes;
        bool operator<(const ScoreKey& o) const {
            return std::tie(next, budget, bribes, scores) <
                   std::tie(o.next, o.budget, o.bribes, o.scores);
        }
    };
    struct CastKey {
        std::vector<int> cast;
        std::optional<Nat> budget;
        std::optional<Nat> bribes;
        bool operator<(const CastKey& o) const {
            return std::tie(cast, budget, bribes) <
                   std::tie(o.cast, o.budget, o.bribes);
        }
    };
    std::map<ScoreKey, bool> score_memo_;
    std::map<CastKey, bool> cast_memo_;
    std::map<Ballot, int> pool_of_ballot_;

    // gadget leaf machinery
    bool gadget_static_ = false;       // frame missing: outcome fixed up front
    bool gadget_value_true_ = false;   // leaf value when the formula is true
    bool gadget_value_false_ = false;  // ... when false or the frame is missing
    struct TierSource {
        bool from_cast = false;
        int cast_idx = -1;             // 0 = current voter, 1+i = future i
        std::vector<char> fixed_bits;  // past voters decode once
    };
    std::optional<GadgetFrame> frame_;
    std::vector<TierSource> tier_sources_;
    std::vector<std::vector<char>> decode_cache_;
    std::vector<char> decode_cached_;
    std::vector<char> assignment_;
};

void Engine::init_gadget() {
    std::vector<std::string> names;
    for (const VoterRecord* v : all_voters(obs_)) names.push_back(v->name);
    frame_ = gadget_frame(rule_.gadget_k, obs_.candidates, names);

    const bool constructive = variant_.mode == Variant::Mode::constructive;
    auto value_of = [&](bool formula_true) {
        bool all_win = formula_true;
        if (rule_.gadget_mode == GadgetMode::all_lose_on_true) all_win = !all_win;
        // everyone wins: every constructive goal holds and no destructive one
        // does; everyone loses: the other way around
        return all_win == constructive;
    };
    gadget_value_true_ = value_of(true);
    gadget_value_false_ = value_of(false);

    if (!frame_) {
        gadget_static_ = true;
        return;
    }

    // Bind each tier to its special-list voter.  Names are pairwise distinct
    // here (validated), so each lex rank picks one voter.
    std::vector<std::pair<std::string, int>> ranked;  // name -> voting position
    int pos = 0;
    for (const VoterRecord* v : all_voters(obs_)) ranked.push_back({v->name, pos++});
    std::sort(ranked.begin(), ranked.end());

    const CandidateId c = obs_.candidates.lex_smallest();
    const int past_n = static_cast<int>(obs_.past.size());
    tier_sources_.resize(frame_->subscript_one_max);
    for (int tier = 1; tier <= frame_->subscript_one_max; ++tier) {
        const int global = ranked[tier].second;  // rank tier = (tier+1)-smallest name
        TierSource src;
        if (global < past_n) {
            src.fixed_bits = gadget_decode_bits(*obs_.past[global].ballot,
                                                obs_.candidates, c,
                                                frame_->subscript_two_max);
        } else {
            src.from_cast = true;
            src.cast_idx = global - past_n;
        }
        tier_sources_[tier - 1] = src;
    }
    decode_cache_.assign(pool_.size(), {});
    decode_cached_.assign(pool_.size(), 0);
    assignment_.assign(frame_->formula.vars.size(), 0);
}

bool Engine::leaf_value() {
    if (scoring_path_) {
        // constructive: the best desired candidate ties or beats the best
        // undesired one; destructive: beats it strictly
        const Nat* best_desired = nullptr;
        const Nat* best_undesired = nullptr;
        for (int cand = 0; cand < static_cast<int>(scores_.size()); ++cand) {
            const Nat*& slot = desired_[cand] ? best_desired : best_undesired;
            if (!slot || scores_[cand] > *slot) slot = &scores_[cand];
        }
        if (!best_desired) return false;
        if (!best_undesired) return true;
        return variant_.mode == Variant::Mode::constructive
                   ? *best_desired >= *best_undesired
                   : *best_desired > *best_undesired;
    }
    if (gadget_static_) return gadget_value_false_;
    const CandidateId c = obs_.candidates.lex_smallest();
    for (int tier = 1; tier <= frame_->subscript_one_max; ++tier) {
        const TierSource& src = tier_sources_[tier - 1];
        const std::vector<char>* bits = &src.fixed_bits;
        if (src.from_cast) {
            const int pid = cast_[src.cast_idx];
            if (!decode_cached_[pid]) {
                decode_cache_[pid] = gadget_decode_bits(
                    pool_[pid], obs_.candidates, c, frame_->subscript_two_max);
                decode_cached_[pid] = 1;
            }
            bits = &decode_cache_[pid];
        }
        for (std::size_t id = 0; id < frame_->formula.vars.size(); ++id)
            if (frame_->formula.vars[id].first == tier)
                assignment_[id] = (*bits)[frame_->formula.vars[id].second - 1];
    }
    return frame_->formula.matrix.eval(assignment_) ? gadget_value_true_
                                                    : gadget_value_false_;
}

bool Engine::settled_value() {
    if (next_ == obs_.future.size()) return leaf_value();

    if (scoring_path_) {
        ScoreKey key{scores_, next_, budget_left_, bribes_left_};
        if (auto it = score_memo_.find(key); it != score_memo_.end())
            return it->second;
        const VoterRecord& voter = obs_.future[next_];
        bool value = true;
        for (const Ballot& revealed : pool_) {
            if (!pending_value(voter, revealed)) {
                value = false;
                break;
            }
        }
        score_memo_.emplace(std::move(key), value);
        return value;
    }

    CastKey key{cast_, budget_left_, bribes_left_};
    if (auto it = cast_memo_.find(key); it != cast_memo_.end()) return it->second;
    const VoterRecord& voter = obs_.future[next_];
    bool value = true;
    for (const Ballot& revealed : pool_) {
        if (!pending_value(voter, revealed)) {
            value = false;
            break;
        }
    }
    cast_memo_.emplace(std::move(key), value);
    return value;
}

bool Engine::pending_value(const VoterRecord& voter, const Ballot& revealed) {
    // leave
    push_vote(voter, revealed);
    ++next_;
    bool ok = settled_value();
    --next_;
    pop_vote(voter, revealed);
    if (ok) return true;

    if (!can_afford(budget_left_, bribes_left_, variant_.priced, voter))
        return false;
    for (const Ballot& content : pool_) {
        pay(voter);
        push_vote(voter, content);
        ++next_;
        ok = settled_value();
        --next_;
        pop_vote(voter, content);
        refund(voter);
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::vector<CurrentMove> legal_moves(const SearchState& state,
                                     const VoterRecord& voter,
                                     const Variant& variant, const Rule& rule,
                                     std::span<const Ballot> ballots) {
    (void)rule;
    std::vector<CurrentMove> moves;
    moves.push_back(CurrentMove::leave());
    if (can_afford(state.budget_left, state.bribes_left, variant.priced, voter))
        for (const Ballot& b : ballots) moves.push_back(CurrentMove::bribe_to(b));
    return moves;
}

SolveOutcome solve(const Obs& obs, const Variant& variant, const Rule& rule,
                   const SolveOptions& opts) {
    Engine engine(obs, variant, rule, opts);
    return engine.run();
}

bool solve_naive(const Obs& obs, const Variant& variant, const Rule& rule,
                 const SolveOptions& opts) {
    validate_obs(obs, variant, rule);
    const auto pool = enumerate_ballots(rule, obs.candidates, opts.enum_caps());
    const GoalSpec goal = goal_of(obs, variant);

    const double branch =
        static_cast<double>(pool.size()) * (1.0 + static_cast<double>(pool.size()));
    double estimate = 1.0 + static_cast<double>(pool.size());
    for (std::size_t i = 0; i < obs.future.size(); ++i) estimate *= branch;
    if (estimate > opts.naive_leaf_cap)
        throw CapExceeded("solve_naive: estimated " + std::to_string(estimate) +
                          " leaves exceeds the configured cap");

    const Spent sp = spent(obs, variant);
    std::optional<Nat> budget_left, bribes_left;
    if (variant.priced) {
        budget_left = *obs.limit - *sp.cost;
        if (variant.bribe_cap) bribes_left = *variant.bribe_cap - sp.count;
    } else if (variant.bribe_cap) {
        bribes_left = *variant.bribe_cap - sp.count;
    } else {
        budget_left = *obs.limit - sp.count;
    }

    std::vector<Vote> votes;
    for (const auto& v : obs.past)
        votes.push_back({v.name, *v.ballot, v.effective_weight()});

    // votes carries the settled prefix; the recursion owns the suffix from
    // voter `idx` on (idx 0 = current voter, idx 1+i = future i).
    auto voter_at = [&](std::size_t idx) -> const VoterRecord& {
        return idx == 0 ? obs.current : obs.future[idx - 1];
    };
    const std::size_t total = 1 + obs.future.size();

    std::function<bool(std::size_t)> after_settle;
    std::function<bool(std::size_t, const Ballot&)> decide;

    after_settle = [&](std::size_t idx) -> bool {
        if (idx == total)
            return goal_satisfied(goal, winner_set(rule, obs.candidates, votes));
        for (const Ballot& revealed : pool)
            if (!decide(idx, revealed)) return false;
        return true;
    };

    decide = [&](std::size_t idx, const Ballot& revealed) -> bool {
        const VoterRecord& voter = voter_at(idx);
        votes.push_back({voter.name, revealed, voter.effective_weight()});
        bool ok = after_settle(idx + 1);
        votes.pop_back();
        if (ok) return true;
        if (!can_afford(budget_left, bribes_left, variant.priced, voter))
            return false;
        const Nat price = variant.priced ? voter.effective_price() : Nat(1);
        for (const Ballot& content : pool) {
            if (budget_left) *budget_left -= price;
            if (bribes_left) *bribes_left -= 1;
            votes.push_back({voter.name, content, voter.effective_weight()});
            ok = after_settle(idx + 1);
            votes.pop_back();
            if (budget_left) *budget_left += price;
            if (bribes_left) *bribes_left += 1;
            if (ok) return true;
        }
        return false;
    };

    return decide(0, *obs.current.ballot);
}

}  // namespace rollcall
