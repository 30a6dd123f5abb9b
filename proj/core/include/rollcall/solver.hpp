#pragma once

#include "rollcall/obs.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rollcall {

// The briber's move at a magnifying-glass moment.
struct CurrentMove {
    bool bribe = false;
    Ballot ballot;  // meaningful when bribe

    static CurrentMove leave() { return {}; }
    static CurrentMove bribe_to(Ballot b) { return {true, std::move(b)}; }
    friend bool operator==(const CurrentMove&, const CurrentMove&) = default;
};

// Decision plus, on yes, one witnessing move for the current voter.  Only the
// current move is certified; the rest of the strategy is recomputed at later
// moments.
struct SolveOutcome {
    bool decision = false;
    std::optional<CurrentMove> action;
};

struct SolveOptions {
    int max_order_candidates = 6;
    int max_approval_candidates = 12;
    // solve_naive refuses game trees estimated beyond this many leaves
    double naive_leaf_cap = 1e9;

    EnumCaps enum_caps() const {
        return {max_order_candidates, max_approval_candidates};
    }
};

// Mid-game snapshot: what is left to decide and what may still be spent.
// budget_left is the remaining budget (priced) or remaining k-count
// (unpriced); it is absent for unpriced capped variants, whose only limit is
// bribes_left.  scores carries the settled votes for Scoring/Approval; cast
// carries the full settled ballot sequence from the current voter on for the
// name-sensitive gadget rule.
struct SearchState {
    ScoreTable scores;
    std::vector<Ballot> cast;
    std::size_t next_future = 0;
    std::optional<Nat> budget_left;
    std::optional<Nat> bribes_left;
};

// {leave} always; plus one bribe move per enumerable ballot when the
// remaining budget covers the voter and the cap (if any) is not exhausted.
std::vector<CurrentMove> legal_moves(const SearchState& state,
                                     const VoterRecord& voter,
                                     const Variant& variant, const Rule& rule,
                                     std::span<const Ballot> ballots);

// Exact evaluation of the alternating exists/forall semantics: does the
// briber have a legal current move such that for every ballot the next voter
// may reveal there is a legal move ... such that the final winner set meets
// the goal.  Memoized on settled-state signatures; depth-first with
// short-circuiting, witness = first winning move in deterministic order.
SolveOutcome solve(const Obs& obs, const Variant& variant, const Rule& rule,
                   const SolveOptions& opts = {});

// Reference oracle: the same quantifier tree by direct recursion, winners
// recomputed from scratch at every leaf.  No memoization, no shared state
// with solve beyond the ballot enumeration.
bool solve_naive(const Obs& obs, const Variant& variant, const Rule& rule,
                 const SolveOptions& opts = {});

}  // namespace rollcall
