#include "rollcall/obs.hpp"

#include <set>

namespace rollcall {

namespace {

int sigma_rank(const Ballot& sigma, CandidateId c) { return sigma.rank_of(c); }

}  // namespace

std::vector<CandidateId> desired_set(const GoalSpec& goal) {
    std::vector<CandidateId> out;
    const auto mask = desired_mask(goal);
    for (int c = 0; c < static_cast<int>(mask.size()); ++c)
        if (mask[c]) out.push_back(c);
    return out;
}

std::vector<char> desired_mask(const GoalSpec& goal) {
    const int m = static_cast<int>(goal.sigma.slots.size());
    if (goal.designated < 0 || goal.designated >= m)
        throw DomainError("designated candidate not in sigma");
    const int d_rank = sigma_rank(goal.sigma, goal.designated);
    std::vector<char> mask(m, 0);
    for (int c = 0; c < m; ++c) {
        const int r = sigma_rank(goal.sigma, c);
        mask[c] = goal.mode == Variant::Mode::constructive ? (r <= d_rank)
                                                           : (r < d_rank);
    }
    return mask;
}

bool goal_satisfied(const GoalSpec& goal, const std::vector<CandidateId>& winners) {
    const auto mask = desired_mask(goal);
    if (goal.mode == Variant::Mode::constructive) {
        for (CandidateId w : winners)
            if (mask[w]) return true;
        return false;
    }
    for (CandidateId w : winners)
        if (!mask[w]) return false;  // a winner the briber hates at least as much as d
    return true;
}

Spent spent(const Obs& obs, const Variant& variant) {
    Spent s{0, std::nullopt};
    if (variant.priced) s.cost = Nat(0);
    for (const auto& v : obs.past) {
        if (v.bribed && *v.bribed) {
            s.count += 1;
            if (variant.priced) *s.cost += v.effective_price();
        }
    }
    return s;
}

namespace {

void check_record(const VoterRecord& v, const Variant& variant, const Rule& rule,
                  const Candidates& cands, bool wants_ballot, bool wants_bribed,
                  const char* where) {
    auto fail = [&](const std::string& why) {
        throw IllegalInstance(IllegalInstance::Reason::malformed,
                              std::string(where) + " voter '" + v.name + "': " + why);
    };
    if (v.name.empty()) fail("empty name");
    if (variant.priced != v.price.has_value())
        fail(variant.priced ? "missing price" : "price in an unpriced variant");
    if (variant.weighted != v.weight.has_value())
        fail(variant.weighted ? "missing weight" : "weight in an unweighted variant");
    if (v.price && *v.price < 0) fail("negative price");
    if (v.weight && *v.weight < 0) fail("negative weight");
    if (wants_ballot != v.ballot.has_value())
        fail(wants_ballot ? "missing ballot" : "unexpected ballot");
    if (wants_bribed != v.bribed.has_value())
        fail(wants_bribed ? "missing bribed flag" : "unexpected bribed flag");
    if (v.ballot && !ballot_valid(rule, cands, *v.ballot)) fail("invalid ballot");
}

}  // namespace

void validate_obs(const Obs& obs, const Variant& variant, const Rule& rule) {
    const auto malformed = [](const std::string& why) {
        throw IllegalInstance(IllegalInstance::Reason::malformed, why);
    };
    try {
        obs.candidates.check();
        rule.check(obs.candidates.size());
    } catch (const DomainError& e) {
        malformed(e.what());
    }

    if (obs.designated < 0 || obs.designated >= obs.candidates.size())
        malformed("designated candidate out of range");
    // sigma is a total order over the candidates even under Approval
    if (obs.sigma.kind != BallotKind::order ||
        static_cast<int>(obs.sigma.slots.size()) != obs.candidates.size())
        malformed("sigma is not a total order over the candidates");
    {
        std::vector<char> seen(obs.candidates.size(), 0);
        for (int c : obs.sigma.slots) {
            if (c < 0 || c >= obs.candidates.size() || seen[c])
                malformed("sigma is not a permutation");
            seen[c] = 1;
        }
    }

    for (const auto& v : obs.past)
        check_record(v, variant, rule, obs.candidates, true, true, "past");
    check_record(obs.current, variant, rule, obs.candidates, true, false, "current");
    for (const auto& v : obs.future)
        check_record(v, variant, rule, obs.candidates, false, false, "future");

    std::set<std::string> names;
    for (const VoterRecord* v : all_voters(obs))
        if (!names.insert(v->name).second)
            malformed("duplicate voter name: " + v->name);

    // k is part of the instance unless an unpriced bribe cap replaces it.
    const bool k_expected = variant.priced || !variant.bribe_cap;
    if (k_expected && !obs.limit) malformed("missing limit k");
    if (!k_expected && obs.limit)
        malformed("unpriced capped variant must not carry k");
    if (obs.limit && *obs.limit < 0) malformed("negative limit");
    if (variant.bribe_cap && *variant.bribe_cap < 0) malformed("negative bribe cap");

    const Spent sp = spent(obs, variant);
    if (variant.priced) {
        if (*sp.cost > *obs.limit)
            throw IllegalInstance(IllegalInstance::Reason::overspent_budget,
                                  "bribed past voters cost " + to_string(*sp.cost) +
                                      " > budget " + to_string(*obs.limit));
        if (variant.bribe_cap && sp.count > *variant.bribe_cap)
            throw IllegalInstance(IllegalInstance::Reason::over_bribe_cap,
                                  "bribed past voters " + to_string(sp.count) +
                                      " > cap " + to_string(*variant.bribe_cap));
    } else {
        const Nat& allowed = variant.bribe_cap ? *variant.bribe_cap : *obs.limit;
        if (sp.count > allowed)
            throw IllegalInstance(variant.bribe_cap
                                      ? IllegalInstance::Reason::over_bribe_cap
                                      : IllegalInstance::Reason::overspent_budget,
                                  "bribed past voters " + to_string(sp.count) +
                                      " > limit " + to_string(allowed));
    }
}

std::vector<const VoterRecord*> all_voters(const Obs& obs) {
    std::vector<const VoterRecord*> out;
    out.reserve(obs.past.size() + 1 + obs.future.size());
    for (const auto& v : obs.past) out.push_back(&v);
    out.push_back(&obs.current);
    for (const auto& v : obs.future) out.push_back(&v);
    return out;
}

}  // namespace rollcall
