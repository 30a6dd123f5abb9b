#include "rollcall/deciders.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rollcall {

// ---- knapsack --------------------------------------------------------------

namespace {

KnapsackPick knapsack_enumerate(const std::vector<KnapsackItem>& items,
                                const Nat& budget) {
    const std::size_t n = items.size();
    KnapsackPick best{0, {}};
    bool have = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Nat price = 0, weight = 0;
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                price += items[i].price;
                weight += items[i].weight;
                chosen.push_back(items[i].index);
            }
        if (price > budget) continue;
        std::sort(chosen.begin(), chosen.end());
        if (!have || weight > best.weight ||
            (weight == best.weight && chosen < best.chosen)) {
            best = {weight, chosen};
            have = true;
        }
    }
    return best;
}

}  // namespace

KnapsackPick knapsack_max_weight(const std::vector<KnapsackItem>& items,
                                 const Nat& budget, std::size_t table_cap) {
    if (budget < 0) throw DomainError("negative knapsack budget");
    Nat price_sum = 0;
    for (const auto& it : items) {
        if (it.price < 0 || it.weight < 0)
            throw DomainError("negative knapsack price or weight");
        price_sum += it.price;
    }
    const Nat eff = budget < price_sum ? budget : price_sum;
    if (!fits_size_t(eff, table_cap)) {
        if (items.size() <= 20) return knapsack_enumerate(items, budget);
        throw CapExceeded("knapsack budget exceeds the DP table cap");
    }
    const std::size_t cap = to_size_t(eff);
    const std::size_t n = items.size();

    // suffix_max[i][p]: best weight from items i.. within price <= p
    std::vector<std::vector<Nat>> suffix_max(n + 1, std::vector<Nat>(cap + 1, 0));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t p = 0; p <= cap; ++p) {
            Nat best = suffix_max[i + 1][p];
            if (items[i].price <= Nat(p)) {
                Nat with = items[i].weight +
                           suffix_max[i + 1][p - to_size_t(items[i].price)];
                if (with > best) best = with;
            }
            suffix_max[i][p] = best;
        }
    }

    // Lexicographically smallest maximizer: depth-first over ascending next
    // index, accepting as soon as the target weight is met (a shorter index
    // sequence precedes its extensions).  suffix_max prunes; on pathological
    // inputs bail out to enumeration.
    const Nat target = suffix_max[0][cap];
    KnapsackPick pick{target, {}};
    long nodes = 0;
    std::function<bool(std::size_t, std::size_t, Nat)> rec =
        [&](std::size_t i, std::size_t money, Nat still) -> bool {
        if (still <= 0) return true;
        if (++nodes > 2'000'000) return false;
        for (std::size_t j = i; j < n; ++j) {
            if (items[j].price > Nat(money)) continue;
            const std::size_t rest = money - to_size_t(items[j].price);
            if (items[j].weight + suffix_max[j + 1][rest] < still) continue;
            pick.chosen.push_back(items[j].index);
            if (rec(j + 1, rest, still - items[j].weight)) return true;
            pick.chosen.pop_back();
        }
        return false;
    };
    if (!rec(0, cap, target)) {
        if (items.size() <= 20) return knapsack_enumerate(items, budget);
        throw CapExceeded("knapsack reconstruction exceeded its node budget");
    }
    return pick;
}

bool partition_feasible(const std::vector<Nat>& weights,
                        const std::function<bool(const Nat&, const Nat&)>& split_ok,
                        std::size_t table_cap) {
    Nat total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw DomainError("negative weight");
        total += w;
    }
    if (!fits_size_t(total, table_cap))
        throw CapExceeded("partition total weight exceeds the DP table cap");
    const std::size_t sum = to_size_t(total);
    std::vector<char> reach(sum + 1, 0);
    reach[0] = 1;
    for (const auto& w : weights) {
        const std::size_t wi = to_size_t(w);
        for (std::size_t s = sum + 1; s-- > wi;)
            if (reach[s - wi]) reach[s] = 1;
    }
    for (std::size_t s = 0; s <= sum; ++s)
        if (reach[s] && split_ok(Nat(s), total - Nat(s))) return true;
    return false;
}

// ---- shared decider plumbing ------------------------------------------------

namespace {

struct Remaining {
    std::optional<Nat> money;  // priced budget left
    std::optional<Nat> count;  // bribe count left (unpriced k, or cap)
};

Remaining remaining_after_past(const Obs& obs, const Variant& variant) {
    const Spent sp = spent(obs, variant);
    Remaining r;
    if (variant.priced) {
        r.money = *obs.limit - *sp.cost;
        if (variant.bribe_cap) r.count = *variant.bribe_cap - sp.count;
    } else if (variant.bribe_cap) {
        r.count = *variant.bribe_cap - sp.count;
    } else {
        r.count = *obs.limit - sp.count;
    }
    return r;
}

bool afford(const Remaining& r, const VoterRecord& voter, bool priced) {
    if (r.count && *r.count < 1) return false;
    if (r.money && priced && voter.effective_price() > *r.money) return false;
    return true;
}

Remaining charge(Remaining r, const VoterRecord& voter, bool priced) {
    if (r.money) *r.money -= priced ? voter.effective_price() : Nat(1);
    if (r.count) *r.count -= 1;
    return r;
}

ScoreTable past_scores(const Obs& obs, const Rule& rule) {
    std::vector<Vote> past;
    past.reserve(obs.past.size());
    for (const auto& v : obs.past)
        past.push_back({v.name, *v.ballot, v.effective_weight()});
    return score_table(rule, obs.candidates, past);
}

void add_vote(ScoreTable& scores, const Rule& rule, const Ballot& b, const Nat& w) {
    if (w == 0) return;
    if (rule.kind == Rule::Kind::scoring) {
        for (std::size_t pos = 0; pos < scores.size(); ++pos)
            scores[b.slots[pos]] += rule.alpha[pos] * w;
    } else {
        for (std::size_t c = 0; c < scores.size(); ++c)
            if (b.slots[c]) scores[c] += w;
    }
}

// argmax within (mask == want); ties to the lexicographically smallest name
std::optional<CandidateId> best_of(const ScoreTable& scores,
                                   const std::vector<char>& mask, bool want,
                                   const Candidates& cands) {
    std::optional<CandidateId> best;
    for (int c = 0; c < static_cast<int>(scores.size()); ++c) {
        if ((mask[c] != 0) != want) continue;
        if (!best || scores[c] > scores[*best] ||
            (scores[c] == scores[*best] && cands.name(c) < cands.name(*best)))
            best = c;
    }
    return best;
}

bool scores_meet_goal(const ScoreTable& scores, const std::vector<char>& desired,
                      Variant::Mode mode, const Candidates& cands) {
    auto c = best_of(scores, desired, true, cands);
    auto h = best_of(scores, desired, false, cands);
    if (!c) return false;
    if (!h) return true;
    return mode == Variant::Mode::constructive ? scores[*c] >= scores[*h]
                                               : scores[*c] > scores[*h];
}

// Largest total future weight the briber can still buy.
Nat max_future_weight(const Obs& obs, const Variant& variant, const Remaining& rem) {
    const auto& fut = obs.future;
    const std::size_t n = fut.size();
    if (!variant.priced) {
        const std::size_t t = rem.count ? clamp_count(*rem.count, n) : n;
        std::vector<Nat> ws;
        ws.reserve(n);
        for (const auto& v : fut) ws.push_back(v.effective_weight());
        std::sort(ws.begin(), ws.end(), [](const Nat& x, const Nat& y) { return x > y; });
        Nat total = 0;
        for (std::size_t i = 0; i < t; ++i) total += ws[i];
        return total;
    }
    if (!variant.weighted) {
        // unit weights: maximize the count, cheapest first
        std::vector<Nat> ps;
        ps.reserve(n);
        for (const auto& v : fut) ps.push_back(v.effective_price());
        std::sort(ps.begin(), ps.end());
        Nat money = *rem.money, got = 0;
        const std::size_t cap = rem.count ? clamp_count(*rem.count, n) : n;
        for (std::size_t i = 0; i < cap && i < n; ++i) {
            if (ps[i] > money) break;
            money -= ps[i];
            got += 1;
        }
        return got;
    }
    std::vector<KnapsackItem> items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        items.push_back({fut[i].effective_price(), fut[i].effective_weight(), i});
    if (!rem.count || *rem.count >= Nat(n))
        return knapsack_max_weight(items, *rem.money).weight;
    // priced capped variant: enumerate (desk scale)
    if (n > 20) throw CapExceeded("capped priced+weighted selection beyond 20 voters");
    const std::size_t cap = clamp_count(*rem.count, n);
    Nat best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Nat price = 0, weight = 0;
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                price += items[i].price;
                weight += items[i].weight;
                ++cnt;
            }
        if (cnt <= cap && price <= *rem.money && weight > best) best = weight;
    }
    return best;
}

// One branch of the Plurality/Approval analysis: the briber piles everything
// on the strongest desired candidate, the adversary on the strongest
// undesired one.  `base` holds the settled scores (including the current
// voter's vote in the leave branch), `u_extra` the current voter's weight
// when bribed, `rem` what is left to spend on future voters.
bool pile_branch(const Obs& obs, const Variant& variant, const ScoreTable& base,
                 const Nat& u_extra, const Remaining& rem,
                 const std::vector<char>& desired) {
    auto c = best_of(base, desired, true, obs.candidates);
    if (!c) return false;
    auto h = best_of(base, desired, false, obs.candidates);
    Nat w_bribed = max_future_weight(obs, variant, rem);
    if (!h) return true;
    Nat total_future = 0;
    for (const auto& v : obs.future) total_future += v.effective_weight();
    const Nat score_c = base[*c] + u_extra + w_bribed;
    const Nat score_h = base[*h] + (total_future - w_bribed);
    return variant.mode == Variant::Mode::constructive ? score_c >= score_h
                                                       : score_c > score_h;
}

SolveOutcome pile_decide(const Obs& obs, const Variant& variant, const Rule& rule) {
    validate_obs(obs, variant, rule);
    const auto desired = desired_mask(goal_of(obs, variant));
    const bool all_desired =
        std::all_of(desired.begin(), desired.end(), [](char x) { return x != 0; });
    if (all_desired) return {true, CurrentMove::leave()};
    const bool none_desired =
        std::none_of(desired.begin(), desired.end(), [](char x) { return x != 0; });
    if (none_desired) return {false, std::nullopt};

    const ScoreTable base = past_scores(obs, rule);
    const Remaining rem = remaining_after_past(obs, variant);

    // not bribing u: u's planned vote counts
    ScoreTable with_u = base;
    add_vote(with_u, rule, *obs.current.ballot, obs.current.effective_weight());
    if (pile_branch(obs, variant, with_u, 0, rem, desired))
        return {true, CurrentMove::leave()};

    // bribing u
    if (afford(rem, obs.current, variant.priced)) {
        const Remaining rem_u = charge(rem, obs.current, variant.priced);
        if (pile_branch(obs, variant, base, obs.current.effective_weight(), rem_u,
                        desired)) {
            auto c = best_of(base, desired, true, obs.candidates);
            Ballot content;
            if (rule.kind == Rule::Kind::approval) {
                std::vector<int> flags(desired.begin(), desired.end());
                content = Ballot::approval_of(std::move(flags));
            } else {
                std::vector<int> order{*c};
                for (int x = 0; x < obs.candidates.size(); ++x)
                    if (x != *c) order.push_back(x);
                content = Ballot::order_of(std::move(order));
            }
            return {true, CurrentMove::bribe_to(std::move(content))};
        }
    }
    return {false, std::nullopt};
}

}  // namespace

SolveOutcome plurality_decide(const Obs& obs, const Variant& variant,
                              const Rule& rule) {
    if (!rule.is_plurality())
        throw WrongRule("plurality_decide: rule is not Plurality");
    return pile_decide(obs, variant, rule);
}

SolveOutcome approval_decide(const Obs& obs, const Variant& variant,
                             const Rule& rule) {
    if (rule.kind != Rule::Kind::approval)
        throw WrongRule("approval_decide: rule is not Approval");
    return pile_decide(obs, variant, rule);
}

// ---- unweighted scoring DP --------------------------------------------------

namespace {

struct DpKey {
    std::size_t idx;
    int pending;  // pool id of the pending voter's revealed ballot
    std::optional<Nat> cap_left;
    ScoreTable scores;
    bool operator<(const DpKey& o) const {
        return std::tie(idx, pending, cap_left, scores) <
               std::tie(o.idx, o.pending, o.cap_left, o.scores);
    }
};

}  // namespace

SolveOutcome scoring_dp_decide(const Obs& obs, const Variant& variant,
                               const Rule& rule) {
    if (rule.kind != Rule::Kind::scoring)
        throw WrongRule("scoring_dp_decide: scoring rules only");
    if (variant.weighted)
        throw WrongVariant("scoring_dp_decide: weighted variants not supported");
    validate_obs(obs, variant, rule);

    const auto pool = enumerate_ballots(rule, obs.candidates);
    std::map<Ballot, int> pool_id;
    for (std::size_t i = 0; i < pool.size(); ++i)
        pool_id.emplace(pool[i], static_cast<int>(i));
    const auto desired = desired_mask(goal_of(obs, variant));

    const Spent sp = spent(obs, variant);
    // unpriced variants run as unit prices with budget k (or the cap)
    const Nat money = variant.priced
                          ? *obs.limit - *sp.cost
                          : (variant.bribe_cap ? *variant.bribe_cap : *obs.limit) -
                                sp.count;
    std::optional<Nat> cap_left;
    if (variant.priced && variant.bribe_cap) cap_left = *variant.bribe_cap - sp.count;

    const std::size_t total = 1 + obs.future.size();
    auto voter_at = [&](std::size_t idx) -> const VoterRecord& {
        return idx == 0 ? obs.current : obs.future[idx - 1];
    };
    auto price_at = [&](std::size_t idx) {
        return variant.priced ? voter_at(idx).effective_price() : Nat(1);
    };

    std::map<DpKey, std::optional<Nat>> memo;

    // minimum extra budget that wins from voter idx pending with `revealed`,
    // given the settled scores before idx's vote; nullopt = unwinnable
    std::function<std::optional<Nat>(std::size_t, int, const ScoreTable&,
                                     const std::optional<Nat>&)>
        pi;

    // cost after idx's vote settles to `scores`; adversary reveals next
    auto after = [&](std::size_t idx, const ScoreTable& scores,
                     const std::optional<Nat>& caps) -> std::optional<Nat> {
        if (idx + 1 == total) {
            if (scores_meet_goal(scores, desired, variant.mode, obs.candidates))
                return Nat(0);
            return std::nullopt;
        }
        Nat worst = 0;
        for (std::size_t v = 0; v < pool.size(); ++v) {
            auto sub = pi(idx + 1, static_cast<int>(v), scores, caps);
            if (!sub) return std::nullopt;
            if (*sub > worst) worst = *sub;
        }
        return worst;
    };

    pi = [&](std::size_t idx, int pending, const ScoreTable& scores,
             const std::optional<Nat>& caps) -> std::optional<Nat> {
        DpKey key{idx, pending, caps, scores};
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        ScoreTable left = scores;
        add_vote(left, rule, pool[pending], 1);
        std::optional<Nat> best = after(idx, left, caps);

        if (!caps || *caps >= 1) {
            const std::optional<Nat> caps2 =
                caps ? std::optional<Nat>(*caps - 1) : std::nullopt;
            for (const Ballot& content : pool) {
                ScoreTable bribed = scores;
                add_vote(bribed, rule, content, 1);
                auto sub = after(idx, bribed, caps2);
                if (!sub) continue;
                Nat cost = price_at(idx) + *sub;
                if (!best || cost < *best) best = cost;
            }
        }
        memo.emplace(std::move(key), best);
        return best;
    };

    const ScoreTable base = past_scores(obs, rule);
    const int u_pid = pool_id.at(*obs.current.ballot);

    // decision
    auto root = pi(0, u_pid, base, cap_left);
    if (!root || *root > money) return {false, std::nullopt};

    // witness: leave if it wins within budget, else the first bribe content
    ScoreTable left = base;
    add_vote(left, rule, *obs.current.ballot, 1);
    auto leave_cost = after(0, left, cap_left);
    if (leave_cost && *leave_cost <= money) return {true, CurrentMove::leave()};
    const std::optional<Nat> caps2 =
        cap_left ? std::optional<Nat>(*cap_left - 1) : std::nullopt;
    for (const Ballot& content : pool) {
        ScoreTable bribed = base;
        add_vote(bribed, rule, content, 1);
        auto sub = after(0, bribed, caps2);
        if (sub && price_at(0) + *sub <= money)
            return {true, CurrentMove::bribe_to(content)};
    }
    // unreachable: root said the instance is winnable
    return {true, CurrentMove::leave()};
}

// ---- 3-candidate Veto -------------------------------------------------------

namespace {

// veto ballot over {a, b, c2} ranking `last` last
Ballot veto_ballot(int m, CandidateId first, CandidateId last) {
    std::vector<int> order{first};
    for (int x = 0; x < m; ++x)
        if (x != first && x != last) order.push_back(x);
    order.push_back(last);
    return Ballot::order_of(std::move(order));
}

struct Veto3Ctx {
    const Obs& obs;
    const Variant& variant;
    CandidateId a, b, c;  // sigma order: a most preferred
};

// Goal "a wins" (strict: "a wins uniquely").  Adversarial voters veto a;
// bribed voters split their vetoes between b and c.
// Returns the veto target for the current voter when it must be bribed.
std::optional<CurrentMove> protect_branches(const Veto3Ctx& ctx, const Rule& rule,
                                            bool strict) {
    const Obs& obs = ctx.obs;
    const Variant& var = ctx.variant;
    const Remaining rem0 = remaining_after_past(obs, var);
    const std::size_t n = obs.future.size();

    auto eval_split = [&](const ScoreTable& base, const Nat& pile, const Nat& veto_b,
                          const Nat& veto_c) {
        // a bribed voter vetoing b feeds c, and vice versa
        const Nat sa = base[ctx.a] + veto_b + veto_c;
        const Nat sb = base[ctx.b] + pile + veto_c;
        const Nat sc = base[ctx.c] + pile + veto_b;
        const Nat& worst = sb > sc ? sb : sc;
        return strict ? sa > worst : sa >= worst;
    };

    // u_veto: candidate the bribed current voter vetoes (b or c); -1 = left
    auto branch = [&](const ScoreTable& base, const Remaining& rem,
                      std::optional<Nat> u_weight, CandidateId u_veto) -> bool {
        if (!var.priced) {
            const std::size_t t = rem.count ? clamp_count(*rem.count, n) : n;
            std::vector<Nat> ws;
            for (const auto& v : obs.future) ws.push_back(v.effective_weight());
            std::sort(ws.begin(), ws.end(),
                      [](const Nat& x, const Nat& y) { return x > y; });
            Nat bribed_total = 0, all = 0;
            for (const auto& w : ws) all += w;
            std::vector<Nat> bag(ws.begin(), ws.begin() + t);
            for (const auto& w : bag) bribed_total += w;
            const Nat pile = all - bribed_total;
            Nat ub = 0, uc = 0;
            if (u_weight) (u_veto == ctx.b ? ub : uc) = *u_weight;
            return partition_feasible(bag, [&](const Nat& x, const Nat& y) {
                return eval_split(base, pile, ub + x, uc + y);
            });
        }
        // priced: exact three-way assignment, price- and cap-constrained
        if (n > 12) throw CapExceeded("priced veto-3 beyond 12 future voters");
        Nat all = 0;
        for (const auto& v : obs.future) all += v.effective_weight();
        std::vector<int> assign(n, 0);  // 0 = leave, 1 = veto b, 2 = veto c
        std::function<bool(std::size_t, Nat, Nat, Nat, Nat)> rec =
            [&](std::size_t i, Nat money_used, Nat cnt, Nat vb, Nat vc) -> bool {
            if (rem.money && money_used > *rem.money) return false;
            if (rem.count && cnt > *rem.count) return false;
            if (i == n) {
                Nat ub = 0, uc = 0;
                if (u_weight) (u_veto == ctx.b ? ub : uc) = *u_weight;
                const Nat pile = all - vb - vc;
                return eval_split(base, pile, ub + vb, uc + vc);
            }
            const auto& v = obs.future[i];
            if (rec(i + 1, money_used, cnt, vb, vc)) return true;
            if (rec(i + 1, money_used + v.effective_price(), cnt + 1,
                    vb + v.effective_weight(), vc))
                return true;
            return rec(i + 1, money_used + v.effective_price(), cnt + 1, vb,
                       vc + v.effective_weight());
        };
        return rec(0, 0, 0, 0, 0);
    };

    // leave u
    {
        ScoreTable with_u = past_scores(obs, rule);
        add_vote(with_u, rule, *obs.current.ballot, obs.current.effective_weight());
        if (branch(with_u, rem0, std::nullopt, -1)) return CurrentMove::leave();
    }
    // bribe u, vetoing b or c
    if (afford(rem0, obs.current, var.priced)) {
        const Remaining rem_u = charge(rem0, obs.current, var.priced);
        const ScoreTable base = past_scores(obs, rule);
        for (CandidateId target : {ctx.b, ctx.c}) {
            if (branch(base, rem_u, obs.current.effective_weight(), target))
                return CurrentMove::bribe_to(
                    veto_ballot(obs.candidates.size(), ctx.a, target));
        }
    }
    return std::nullopt;
}

// Goal "c does not win (uniquely)".  Bribed voters veto c; the adversary
// splits the untouched voters' vetoes between a and b trying to push c
// strictly (adv_strict) or weakly above both.
std::optional<CurrentMove> suppress_branches(const Veto3Ctx& ctx, const Rule& rule,
                                             bool adv_strict) {
    const Obs& obs = ctx.obs;
    const Variant& var = ctx.variant;
    const Remaining rem0 = remaining_after_past(obs, var);
    const std::size_t n = obs.future.size();

    auto adversary_wins = [&](const ScoreTable& base, const Nat& bribed_weight,
                              const std::vector<Nat>& untouched) {
        return partition_feasible(untouched, [&](const Nat& veto_a, const Nat& veto_b) {
            const Nat sc = base[ctx.c] + veto_a + veto_b;
            const Nat sa = base[ctx.a] + bribed_weight + veto_b;
            const Nat sb = base[ctx.b] + bribed_weight + veto_a;
            return adv_strict ? (sc > sa && sc > sb) : (sc >= sa && sc >= sb);
        });
    };

    auto branch = [&](const ScoreTable& base, const Remaining& rem,
                      const Nat& u_bribed_weight) -> bool {
        if (!var.priced) {
            // heaviest-first is optimal here: a weight swap toward the bribed
            // set never helps the adversary
            const std::size_t t = rem.count ? clamp_count(*rem.count, n) : n;
            std::vector<Nat> ws;
            for (const auto& v : obs.future) ws.push_back(v.effective_weight());
            std::sort(ws.begin(), ws.end(),
                      [](const Nat& x, const Nat& y) { return x > y; });
            Nat bribed = u_bribed_weight;
            for (std::size_t i = 0; i < t; ++i) bribed += ws[i];
            std::vector<Nat> untouched(ws.begin() + t, ws.end());
            return !adversary_wins(base, bribed, untouched);
        }
        if (n > 20) throw CapExceeded("priced veto-3 beyond 20 future voters");
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Nat price = 0, cnt = 0, bribed = u_bribed_weight;
            std::vector<Nat> untouched;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    price += obs.future[i].effective_price();
                    cnt += 1;
                    bribed += obs.future[i].effective_weight();
                } else {
                    untouched.push_back(obs.future[i].effective_weight());
                }
            }
            if (rem.money && price > *rem.money) continue;
            if (rem.count && cnt > *rem.count) continue;
            if (!adversary_wins(base, bribed, untouched)) return true;
        }
        return false;
    };

    // leave u
    {
        ScoreTable with_u = past_scores(obs, rule);
        add_vote(with_u, rule, *obs.current.ballot, obs.current.effective_weight());
        if (branch(with_u, rem0, 0)) return CurrentMove::leave();
    }
    // bribe u to veto c
    if (afford(rem0, obs.current, var.priced)) {
        const Remaining rem_u = charge(rem0, obs.current, var.priced);
        if (branch(past_scores(obs, rule), rem_u, obs.current.effective_weight()))
            return CurrentMove::bribe_to(
                veto_ballot(obs.candidates.size(), ctx.a, ctx.c));
    }
    return std::nullopt;
}

}  // namespace

SolveOutcome veto3_decide(const Obs& obs, const Variant& variant, const Rule& rule) {
    if (!rule.is_veto3() || obs.candidates.size() != 3)
        throw WrongRule("veto3_decide: rule is not 3-candidate Veto");
    validate_obs(obs, variant, rule);

    const Veto3Ctx ctx{obs, variant, obs.sigma.slots[0], obs.sigma.slots[1],
                       obs.sigma.slots[2]};
    const CandidateId d = obs.designated;
    const bool constructive = variant.mode == Variant::Mode::constructive;

    // trivial placements
    if (constructive && d == ctx.c) return {true, CurrentMove::leave()};
    if (!constructive && d == ctx.a) return {false, std::nullopt};

    std::optional<CurrentMove> move;
    if ((constructive && d == ctx.a) || (!constructive && d == ctx.b)) {
        // keep a winning (weakly / uniquely)
        move = protect_branches(ctx, rule, /*strict=*/!constructive);
    } else {
        // keep c from winning (uniquely / at all)
        move = suppress_branches(ctx, rule, /*adv_strict=*/constructive);
    }
    if (move) return {true, std::move(move)};
    return {false, std::nullopt};
}

// ---- scoring dichotomy ------------------------------------------------------

DichotomyVerdict scoring_dichotomy(const std::vector<Nat>& alpha) {
    if (alpha.empty()) throw DomainError("empty scoring vector");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw DomainError("negative scoring entry");
        if (i + 1 < alpha.size() && alpha[i] < alpha[i + 1])
            throw DomainError("scoring vector must be nonincreasing");
    }
    const std::size_t m = alpha.size();
    const Nat& first = alpha.front();
    const Nat& last = alpha.back();

    DichotomyVerdict v{};
    if (first == last) {
        // every candidate always wins
        v.unpriced_unweighted = v.priced_unweighted = v.weighted_unpriced =
            v.priced_weighted = Complexity::trivial_all_win;
        return v;
    }
    v.unpriced_unweighted = Complexity::p;
    v.priced_unweighted = Complexity::p;

    const bool plurality_like = m >= 2 && alpha[1] == last;  // alpha1 > alpha2 = alpham
    const bool veto3_like = m == 3 && alpha[0] == alpha[1] && alpha[1] > alpha[2];

    v.weighted_unpriced = plurality_like ? Complexity::p
                          : veto3_like   ? Complexity::pnp1_complete
                                         : Complexity::np_hard;
    v.priced_weighted = plurality_like ? Complexity::np_complete
                        : veto3_like   ? Complexity::pnp1_hard_in_delta2p
                                       : Complexity::np_hard;
    return v;
}

const char* complexity_name(Complexity c) {
    switch (c) {
        case Complexity::p: return "P";
        case Complexity::np_hard: return "NP-hard";
        case Complexity::np_complete: return "NP-complete";
        case Complexity::pnp1_complete: return "PNP1-complete";
        case Complexity::pnp1_hard_in_delta2p: return "PNP1-hard-in-Delta2p";
        case Complexity::trivial_all_win: return "trivial-all-win";
    }
    return "?";
}

}  // namespace rollcall
