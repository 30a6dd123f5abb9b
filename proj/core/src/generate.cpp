#include "rollcall/generate.hpp"

#include <algorithm>
#include <random>

namespace rollcall {

namespace {

std::string pad_name(char prefix, int i, int width) {
    std::string digits = std::to_string(i);
    while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
    return prefix + digits;
}

}  // namespace

Instance generate_random(const GenParams& params, std::uint64_t seed) {
    if (params.rule.kind == Rule::Kind::gadget)
        throw DomainError("generate_random: gadget instances come from reduce qbf");
    if (params.num_candidates < 1 || params.num_past < 0 || params.num_future < 0)
        throw DomainError("generate_random: bad sizes");

    std::mt19937_64 rng(seed);
    auto pick = [&](unsigned bound) {  // uniform-ish 0..bound
        return static_cast<unsigned>(rng() % (bound + 1));
    };

    Instance inst;
    inst.rule = params.rule;
    inst.variant = params.variant;
    const int m = params.num_candidates;
    for (int c = 0; c < m; ++c) inst.obs.candidates.names.push_back(pad_name('c', c, 2));
    inst.rule.check(m);

    auto random_order = [&] {
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        for (int i = m - 1; i > 0; --i)
            std::swap(order[i], order[rng() % (i + 1)]);
        return Ballot::order_of(std::move(order));
    };
    auto random_ballot = [&] {
        if (inst.rule.ballot_kind() == BallotKind::order) return random_order();
        std::vector<int> flags(m);
        for (int c = 0; c < m; ++c) flags[c] = static_cast<int>(rng() & 1);
        return Ballot::approval_of(std::move(flags));
    };

    inst.obs.sigma = random_order();
    inst.obs.designated = static_cast<int>(rng() % m);

    const int total = params.num_past + 1 + params.num_future;
    const int width = static_cast<int>(std::to_string(total).size());
    int next_name = 0;
    auto fresh_voter = [&] {
        VoterRecord v;
        v.name = pad_name('v', next_name++, width);
        if (params.variant.weighted) v.weight = Nat(pick(params.max_weight));
        if (params.variant.priced) v.price = Nat(pick(params.max_price));
        return v;
    };

    const Nat k(pick(params.max_k));
    std::optional<Nat> cap = params.variant.bribe_cap;
    const bool carries_k = params.variant.priced || !cap;
    if (carries_k) inst.obs.limit = k;

    // past voters; bribed flags only while the history stays legal
    Nat spent_cost = 0, spent_count = 0;
    for (int i = 0; i < params.num_past; ++i) {
        VoterRecord v = fresh_voter();
        v.ballot = random_ballot();
        bool bribe = (rng() % 3) == 0;
        if (bribe) {
            if (cap && spent_count + 1 > *cap) bribe = false;
            if (bribe && params.variant.priced &&
                spent_cost + v.effective_price() > k)
                bribe = false;
            if (bribe && !params.variant.priced && carries_k && spent_count + 1 > k)
                bribe = false;
        }
        v.bribed = bribe;
        if (bribe) {
            spent_count += 1;
            spent_cost += v.effective_price();
        }
        inst.obs.past.push_back(std::move(v));
    }
    inst.obs.current = fresh_voter();
    inst.obs.current.ballot = random_ballot();
    for (int i = 0; i < params.num_future; ++i)
        inst.obs.future.push_back(fresh_voter());

    validate_obs(inst.obs, inst.variant, inst.rule);
    return inst;
}

}  // namespace rollcall
