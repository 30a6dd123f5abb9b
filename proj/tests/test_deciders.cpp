#include <doctest.h>

#include "rollcall/crosscheck.hpp"
#include "rollcall/generate.hpp"

#include "support/builders.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

#include <random>

using namespace rollcall;
using namespace rollcall::testing;

TEST_SUITE_BEGIN("deciders");

TEST_CASE("knapsack_max_weight") {
    SUBCASE("fixed examples") {
        auto out = knapsack_max_weight({{2, 3, 0}, {1, 1, 1}}, 2);
        CHECK(out.weight == 3);
        CHECK(out.chosen == std::vector<std::size_t>{0});

        auto zero = knapsack_max_weight({{1, 4, 0}, {2, 9, 1}}, 0);
        CHECK(zero.weight == 0);
        CHECK(zero.chosen.empty());

        // a free item with weight always makes the pick
        auto free_item = knapsack_max_weight({{0, 2, 0}, {1, 1, 1}}, 0);
        CHECK(free_item.weight == 2);
        CHECK(free_item.chosen == std::vector<std::size_t>{0});

        auto sym = knapsack_max_weight({{1, 1, 0}, {1, 1, 1}, {1, 1, 2}}, 2);
        CHECK(sym.weight == 2);
        CHECK(sym.chosen == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("matches enumeration on random inputs") {
        std::mt19937_64 rng(6021);
        for (int iter = 0; iter < 300; ++iter) {
            std::vector<KnapsackItem> items;
            const std::size_t n = rng() % 9;
            for (std::size_t i = 0; i < n; ++i)
                items.push_back({Nat(rng() % 5), Nat(rng() % 6), i});
            const Nat budget(rng() % 10);
            const auto slow = knapsack_oracle(items, budget);
            const auto fast = knapsack_max_weight(items, budget);
            REQUIRE(fast.weight == slow.weight);
            REQUIRE(fast.chosen == slow.chosen);
            // the pick is itself feasible
            Nat price = 0;
            for (auto i : fast.chosen) price += items[i].price;
            REQUIRE(price <= budget);
        }
    }
    SUBCASE("big budgets fall back to enumeration") {
        std::vector<KnapsackItem> items{{Nat("72057594037927936"), 5, 0}, {1, 1, 1}};
        auto out = knapsack_max_weight(items, Nat("144115188075855872"));
        CHECK(out.weight == 6);
    }
}

TEST_CASE("partition_feasible") {
    SUBCASE("achievable subset sums") {
        const std::vector<Nat> ws{1, 1, 2};
        const auto sums = subset_sums_oracle(ws);
        CHECK(sums == std::vector<Nat>{0, 1, 2, 3, 4});
        for (const Nat& want : sums)
            CHECK(partition_feasible(
                ws, [&](const Nat& x, const Nat&) { return x == want; }));
        CHECK_FALSE(partition_feasible(
            ws, [&](const Nat& x, const Nat&) { return x == 5; }));
    }
    SUBCASE("both bins nonzero needs two pieces") {
        CHECK_FALSE(partition_feasible(
            {3}, [](const Nat& x, const Nat& y) { return x > 0 && y > 0; }));
        CHECK(partition_feasible(
            {3, 1}, [](const Nat& x, const Nat& y) { return x > 0 && y > 0; }));
    }
    SUBCASE("agrees with split enumeration") {
        std::mt19937_64 rng(88);
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<Nat> ws;
            const std::size_t n = rng() % 6;
            for (std::size_t i = 0; i < n; ++i) ws.push_back(Nat(rng() % 4));
            const Nat target(rng() % 8);
            auto pred = [&](const Nat& x, const Nat& y) {
                return x == target || y == target + 1;
            };
            bool slow = false;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                Nat x = 0, total = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    total += ws[i];
                    if (mask & (1u << i)) x += ws[i];
                }
                if (pred(x, total - x)) slow = true;
            }
            REQUIRE(partition_feasible(ws, pred) == slow);
        }
    }
    SUBCASE("table cap") {
        CHECK_THROWS_AS((void)partition_feasible(
                            {Nat("18446744073709551616")},
                            [](const Nat&, const Nat&) { return true; }),
                        CapExceeded);
    }
}

TEST_CASE("plurality_decide fixed cases") {
    SUBCASE("rejects other rules") {
        auto b = Build(3, Rule::veto(3), cw(false, false));
        b.current(ord({0, 1, 2})).k(0);
        CHECK_THROWS_AS(
            (void)plurality_decide(b.inst.obs, b.inst.variant, b.inst.rule),
            WrongRule);
    }
    SUBCASE("weighted example from the solver suite") {
        auto mk = [](unsigned k) {
            auto b = Build(2, Rule::plurality(2), cw(false, true));
            b.past(ord({1, 0}), false, Nat(3))
                .current(ord({1, 0}), Nat(2))
                .future(Nat(1))
                .k(Nat(k));
            return b.inst;
        };
        const Instance lose = mk(1);
        CHECK_FALSE(plurality_decide(lose.obs, lose.variant, lose.rule).decision);
        const Instance win = mk(2);
        CHECK(plurality_decide(win.obs, win.variant, win.rule).decision);
    }
    SUBCASE("d at the bottom of sigma accepts immediately") {
        auto b = Build(3, Rule::plurality(3), cw(false, false));
        b.sigma({0, 1, 2}).d(2).current(ord({1, 0, 2})).future().k(0);
        auto out = plurality_decide(b.inst.obs, b.inst.variant, b.inst.rule);
        CHECK(out.decision);
        CHECK_FALSE(out.action->bribe);
    }
    SUBCASE("illegal instances are rejected") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.past(ord({0, 1}), true).past(ord({0, 1}), true).current(ord({0, 1})).k(1);
        CHECK_THROWS_AS(
            (void)plurality_decide(b.inst.obs, b.inst.variant, b.inst.rule),
            IllegalInstance);
    }
}

TEST_CASE("approval_decide fixed cases") {
    SUBCASE("bribing the current voter to approve the desired set") {
        auto b = Build(2, Rule::approval(), cw(false, true));
        b.current(app({0, 1}), Nat(1)).future(Nat(1)).k(1);
        auto out = approval_decide(b.inst.obs, b.inst.variant, b.inst.rule);
        CHECK(out.decision);
        CHECK(solve_naive(b.inst.obs, b.inst.variant, b.inst.rule));
    }
    SUBCASE("no budget, no approvals for a") {
        auto b = Build(2, Rule::approval(), cw(false, false));
        b.current(app({0, 1})).k(0);
        CHECK_FALSE(approval_decide(b.inst.obs, b.inst.variant, b.inst.rule).decision);
    }
    SUBCASE("sigma-bottom designate accepts") {
        auto b = Build(3, Rule::approval(), cw(false, false));
        b.d(2).current(app({0, 0, 0})).k(0);
        CHECK(approval_decide(b.inst.obs, b.inst.variant, b.inst.rule).decision);
    }
}

namespace {

void agree_with_naive(const SweepGrid& grid,
                      SolveOutcome (*decider)(const Obs&, const Variant&, const Rule&),
                      std::size_t expect_at_least) {
    std::size_t seen = 0;
    seen = for_each_legal_instance(grid, [&](const Instance& inst) {
        const bool fast = decider(inst.obs, inst.variant, inst.rule).decision;
        const bool slow = solve_naive(inst.obs, inst.variant, inst.rule);
        if (fast != slow) {  // fail loudly with the instance attached
            CAPTURE(serialize_instance(inst));
            REQUIRE(fast == slow);
        }
    });
    CHECK(seen >= expect_at_least);
}

}  // namespace

TEST_CASE("plurality_decide mini oracle sweeps") {
    for (bool priced : {false, true})
        for (bool weighted : {false, true})
            for (auto mode :
                 {Variant::Mode::constructive, Variant::Mode::destructive}) {
                SweepGrid grid;
                grid.rule = Rule::plurality(2);
                grid.variant = cw(priced, weighted, mode);
                grid.m = 2;
                grid.max_voters = 3;
                grid.weights = {0, 1, 3};
                grid.prices = {0, 2};
                grid.ks = {0, 1, 2};
                agree_with_naive(grid, plurality_decide, 200);
            }
}

TEST_CASE("approval_decide mini oracle sweeps") {
    for (bool priced : {false, true})
        for (bool weighted : {false, true})
            for (auto mode :
                 {Variant::Mode::constructive, Variant::Mode::destructive}) {
                SweepGrid grid;
                grid.rule = Rule::approval();
                grid.variant = cw(priced, weighted, mode);
                grid.m = 2;
                grid.max_voters = 3;
                grid.weights = {0, 2};
                grid.prices = {1, 2};
                grid.ks = {0, 1, 2};
                agree_with_naive(grid, approval_decide, 200);
            }
}

TEST_CASE("scoring_dp_decide") {
    SUBCASE("wrong shapes") {
        auto b = Build(2, Rule::approval(), cw(false, false));
        b.current(app({1, 0})).k(1);
        CHECK_THROWS_AS(
            (void)scoring_dp_decide(b.inst.obs, b.inst.variant, b.inst.rule),
            WrongRule);
        auto w = Build(2, Rule::plurality(2), cw(false, true));
        w.current(ord({0, 1}), Nat(1)).k(1);
        CHECK_THROWS_AS((void)scoring_dp_decide(w.inst.obs, w.inst.variant, w.inst.rule),
                        WrongVariant);
    }
    SUBCASE("big budget bribes everyone") {
        auto b = Build(3, Rule::borda(3), cw(true, false));
        b.sigma({0, 1, 2}).d(2).current(ord({2, 1, 0}), {}, Nat(2)).future({}, Nat(2));
        b.k(Nat(100));
        CHECK(scoring_dp_decide(b.inst.obs, b.inst.variant, b.inst.rule).decision);
    }
    SUBCASE("borda agrees with the naive oracle") {
        for (auto mode : {Variant::Mode::constructive, Variant::Mode::destructive}) {
            SweepGrid grid;
            grid.rule = Rule::borda(3);
            grid.variant = cw(true, false, mode);
            grid.m = 3;
            grid.max_voters = 2;
            grid.prices = {0, 1, 2};
            grid.ks = {0, 1, 2};
            agree_with_naive(grid, scoring_dp_decide, 200);
        }
    }
    SUBCASE("plurality-vector DP agrees with plurality_decide on random instances") {
        std::mt19937_64 seeds(5150);
        for (int iter = 0; iter < 200; ++iter) {
            GenParams p;
            p.rule = Rule::plurality(3);
            p.num_candidates = 3;
            p.variant = cw(iter % 2 == 0, false);
            p.num_past = static_cast<int>(seeds() % 2);
            p.num_future = static_cast<int>(seeds() % 3);
            const Instance inst = generate_random(p, seeds());
            REQUIRE(scoring_dp_decide(inst.obs, inst.variant, inst.rule).decision ==
                    plurality_decide(inst.obs, inst.variant, inst.rule).decision);
        }
    }
}

TEST_CASE("veto3_decide") {
    SUBCASE("trivial placements") {
        auto b = Build(3, Rule::veto(3), cw(false, false));
        b.sigma({0, 1, 2}).d(2).current(ord({0, 1, 2})).k(0);
        CHECK(veto3_decide(b.inst.obs, b.inst.variant, b.inst.rule).decision);

        auto dd = Build(3, Rule::veto(3), cw(false, false, Variant::Mode::destructive));
        dd.sigma({0, 1, 2}).d(0).current(ord({0, 1, 2})).k(3);
        CHECK_FALSE(veto3_decide(dd.inst.obs, dd.inst.variant, dd.inst.rule).decision);
        // matches the game semantics: veto winners are never empty
        CHECK_FALSE(solve_naive(dd.inst.obs, dd.inst.variant, dd.inst.rule));
    }
    SUBCASE("wrong rule") {
        auto b = Build(3, Rule::plurality(3), cw(false, false));
        b.current(ord({0, 1, 2})).k(0);
        CHECK_THROWS_AS((void)veto3_decide(b.inst.obs, b.inst.variant, b.inst.rule),
                        WrongRule);
    }
    SUBCASE("weighted-unpriced mini sweep") {
        for (auto mode : {Variant::Mode::constructive, Variant::Mode::destructive}) {
            SweepGrid grid;
            grid.rule = Rule::veto(3);
            grid.variant = cw(false, true, mode);
            grid.m = 3;
            grid.max_voters = 3;
            grid.max_past = 1;
            grid.weights = {1, 3};
            grid.ks = {0, 1, 2};
            agree_with_naive(grid, veto3_decide, 200);
        }
    }
    SUBCASE("priced-weighted mini sweep") {
        for (auto mode : {Variant::Mode::constructive, Variant::Mode::destructive}) {
            SweepGrid grid;
            grid.rule = Rule::veto(3);
            grid.variant = cw(true, true, mode);
            grid.m = 3;
            grid.max_voters = 2;
            grid.weights = {1, 2};
            grid.prices = {0, 1, 2};
            grid.ks = {0, 1, 2};
            agree_with_naive(grid, veto3_decide, 200);
        }
    }
}

TEST_CASE("scoring_dichotomy") {
    SUBCASE("flat vectors are trivial") {
        auto v = scoring_dichotomy({3, 3, 3});
        CHECK(v.unpriced_unweighted == Complexity::trivial_all_win);
        CHECK(v.priced_weighted == Complexity::trivial_all_win);
    }
    SUBCASE("plurality") {
        auto v = scoring_dichotomy({1, 0, 0});
        CHECK(v.unpriced_unweighted == Complexity::p);
        CHECK(v.priced_unweighted == Complexity::p);
        CHECK(v.weighted_unpriced == Complexity::p);
        CHECK(v.priced_weighted == Complexity::np_complete);
    }
    SUBCASE("three-candidate veto") {
        auto v = scoring_dichotomy({1, 1, 0});
        CHECK(v.weighted_unpriced == Complexity::pnp1_complete);
        CHECK(v.priced_weighted == Complexity::pnp1_hard_in_delta2p);
        CHECK(v.unpriced_unweighted == Complexity::p);
    }
    SUBCASE("borda") {
        auto v = scoring_dichotomy({2, 1, 0});
        CHECK(v.weighted_unpriced == Complexity::np_hard);
        CHECK(v.priced_weighted == Complexity::np_hard);
        CHECK(v.priced_unweighted == Complexity::p);
    }
    SUBCASE("weighted P only when alpha2 equals alpham") {
        std::mt19937_64 rng(3);
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<Nat> alpha;
            const int m = 1 + static_cast<int>(rng() % 5);
            Nat v0(rng() % 4);
            for (int i = 0; i < m; ++i) {
                alpha.insert(alpha.begin(), v0);
                v0 += rng() % 3;
            }
            const auto verdict = scoring_dichotomy(alpha);
            if (m >= 2 && alpha[1] > alpha.back())
                CHECK(verdict.weighted_unpriced != Complexity::p);
        }
    }
    SUBCASE("malformed vectors") {
        CHECK_THROWS_AS((void)scoring_dichotomy({0, 1}), DomainError);
        CHECK_THROWS_AS((void)scoring_dichotomy({}), DomainError);
    }
}

TEST_CASE("fast_decide dispatch") {
    auto b = Build(2, Rule::plurality(2), cw(false, false));
    b.current(ord({1, 0})).k(1);
    CHECK(fast_decide(b.inst).decision);
    auto g = Build(2, Rule::gadget(0), cw(false, false));
    g.current(ord({0, 1})).k(0);
    CHECK_THROWS_AS((void)fast_decide(g.inst), WrongRule);
}

TEST_SUITE_END();
