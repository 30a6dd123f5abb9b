#pragma once

#include "rollcall/election.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rollcall {

// Which of the eight problem flavors an instance lives in, plus the optional
// fixed cap on the number of bribes (the "[k]" family).  When the cap is set
// and the variant is unpriced, the instance carries no k of its own: the cap
// replaces it and the 5-tuple shrinks to a 4-tuple.  Priced capped variants
// keep both the budget and the cap.
struct Variant {
    enum class Mode { constructive, destructive };
    Mode mode = Mode::constructive;
    bool priced = false;
    bool weighted = false;
    std::optional<Nat> bribe_cap;
};

// One voter line of an election snapshot.  Past voters carry a cast ballot
// and a bribed bit; the current voter carries only the ballot it will cast
// unless bribed; future voters carry neither.  Price/weight are present
// exactly when the variant is priced/weighted.
struct VoterRecord {
    std::string name;
    std::optional<Nat> price;
    std::optional<Nat> weight;
    std::optional<Ballot> ballot;
    std::optional<bool> bribed;

    Nat effective_weight() const { return weight ? *weight : Nat(1); }
    Nat effective_price() const { return price ? *price : Nat(1); }
};

// The magnifying-glass moment: everything the briber knows when the current
// voter's planned ballot has just been revealed.
struct Obs {
    Candidates candidates;
    std::vector<VoterRecord> past;
    VoterRecord current;
    std::vector<VoterRecord> future;
    Ballot sigma;              // the briber's own preference order
    CandidateId designated = 0;  // d
    std::optional<Nat> limit;  // k: bribe count (unpriced) or budget (priced)
};

// An OBS bundled with its variant and rule; what the reductions emit and the
// serializer round-trips.
struct Instance {
    Obs obs;
    Variant variant;
    Rule rule;
};

struct GoalSpec {
    Variant::Mode mode = Variant::Mode::constructive;
    Ballot sigma;
    CandidateId designated = 0;
};

inline GoalSpec goal_of(const Obs& obs, const Variant& variant) {
    return GoalSpec{variant.mode, obs.sigma, obs.designated};
}

// Candidates the briber is happy to see win: {c : c >=_sigma d} in the
// constructive case (d included), {c : c >_sigma d} destructively.
std::vector<CandidateId> desired_set(const GoalSpec& goal);
std::vector<char> desired_mask(const GoalSpec& goal);  // by candidate id

// Constructive: some desired candidate wins.  Destructive: no candidate the
// briber hates at least as much as d wins (an empty winner set qualifies).
bool goal_satisfied(const GoalSpec& goal, const std::vector<CandidateId>& winners);

struct Spent {
    Nat count;                // bribed voters in the past
    std::optional<Nat> cost;  // their total price, when priced
};
Spent spent(const Obs& obs, const Variant& variant);

// Shape and legality validation: field presence per variant, ballots valid
// for the rule, pairwise-distinct voter names, d and sigma well formed, and
// the already-spent bribes within every applicable limit.
void validate_obs(const Obs& obs, const Variant& variant, const Rule& rule);

// All voters in voting order (past, current, future).
std::vector<const VoterRecord*> all_voters(const Obs& obs);

}  // namespace rollcall
