#include <doctest.h>

#include "support/builders.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

#include "rollcall/generate.hpp"

#include <random>

using namespace rollcall;
using namespace rollcall::testing;

TEST_SUITE_BEGIN("solver");

TEST_CASE("bribing the only voter") {
    // C={a,b}, sigma a>b, d=a, u plans b, no one else, k=1
    auto b = Build(2, Rule::plurality(2), cw(false, false));
    b.current(ord({1, 0})).k(1);
    auto out = solve(b.inst.obs, b.inst.variant, b.inst.rule);
    REQUIRE(out.decision);
    REQUIRE(out.action.has_value());
    CHECK(out.action->bribe);
    CHECK(out.action->ballot == ord({0, 1}));

    SUBCASE("with k=0 the plan stands") {
        b.inst.obs.limit = Nat(0);
        auto lost = solve(b.inst.obs, b.inst.variant, b.inst.rule);
        CHECK_FALSE(lost.decision);
        CHECK_FALSE(lost.action.has_value());
    }
}

TEST_CASE("weighted plurality: one bribe too few, two enough") {
    auto mk = [](unsigned k) {
        auto b = Build(2, Rule::plurality(2), cw(false, true));
        b.past(ord({1, 0}), false, Nat(3))
            .current(ord({1, 0}), Nat(2))
            .future(Nat(1))
            .k(Nat(k));
        return b.inst;
    };
    const Instance lose = mk(1);
    CHECK_FALSE(solve(lose.obs, lose.variant, lose.rule).decision);
    CHECK_FALSE(solve_naive(lose.obs, lose.variant, lose.rule));

    const Instance win = mk(2);
    auto out = solve(win.obs, win.variant, win.rule);
    REQUIRE(out.decision);
    CHECK(out.action->bribe);
    CHECK(out.action->ballot == ord({0, 1}));
    CHECK(solve_naive(win.obs, win.variant, win.rule));
}

TEST_CASE("no future voters reduces to the current move") {
    auto b = Build(3, Rule::veto(3), cw(false, false));
    b.current(ord({2, 1, 0})).d(1).k(0);
    // u vetoes a; winners {b, c}; constructive d=b wants one of {a,b}
    CHECK(solve(b.inst.obs, b.inst.variant, b.inst.rule).decision);
    CHECK(solve_naive(b.inst.obs, b.inst.variant, b.inst.rule));
}

TEST_CASE("legal_moves") {
    const Candidates c2 = abc(2);
    const auto pool = enumerate_ballots(Rule::plurality(2), c2);
    SUBCASE("priced: too expensive leaves only leave") {
        SearchState st;
        st.budget_left = Nat(1);
        VoterRecord v;
        v.name = "x";
        v.price = Nat(2);
        auto moves = legal_moves(st, v, cw(true, false), Rule::plurality(2), pool);
        REQUIRE(moves.size() == 1);
        CHECK_FALSE(moves[0].bribe);
    }
    SUBCASE("unpriced with budget: leave plus every ballot") {
        SearchState st;
        st.budget_left = Nat(1);
        VoterRecord v;
        v.name = "x";
        auto moves = legal_moves(st, v, cw(false, false), Rule::plurality(2), pool);
        REQUIRE(moves.size() == 3);
        CHECK_FALSE(moves[0].bribe);
        CHECK(moves[1].ballot == ord({0, 1}));
        CHECK(moves[2].ballot == ord({1, 0}));
    }
    SUBCASE("a zero-price bribe still needs cap room") {
        SearchState st;
        st.budget_left = Nat(5);
        st.bribes_left = Nat(0);
        VoterRecord v;
        v.name = "x";
        v.price = Nat(0);
        auto moves = legal_moves(st, v, cw(true, false), Rule::plurality(2), pool);
        REQUIRE(moves.size() == 1);
        CHECK_FALSE(moves[0].bribe);
    }
}

TEST_CASE("oracle equivalence: exhaustive mini sweeps") {
    std::size_t seen = 0;
    for (bool priced : {false, true}) {
        for (bool weighted : {false, true}) {
            for (auto mode : {Variant::Mode::constructive, Variant::Mode::destructive}) {
                SweepGrid grid;
                grid.rule = Rule::plurality(2);
                grid.variant = cw(priced, weighted, mode);
                grid.m = 2;
                grid.max_voters = 3;
                grid.weights = {0, 2};
                grid.prices = {1, 2};
                grid.ks = {0, 1, 2};
                seen += for_each_legal_instance(grid, [&](const Instance& inst) {
                    const bool naive = solve_naive(inst.obs, inst.variant, inst.rule);
                    const auto out = solve(inst.obs, inst.variant, inst.rule);
                    REQUIRE(naive == out.decision);
                    REQUIRE(out.decision == out.action.has_value());
                });
            }
        }
    }
    CHECK(seen > 10000);
}

TEST_CASE("oracle equivalence: borda with three candidates") {
    SweepGrid grid;
    grid.rule = Rule::borda(3);
    grid.variant = cw(false, false);
    grid.m = 3;
    grid.max_voters = 2;
    grid.ks = {0, 1, 2};
    const std::size_t seen =
        for_each_legal_instance(grid, [&](const Instance& inst) {
            REQUIRE(solve_naive(inst.obs, inst.variant, inst.rule) ==
                    solve(inst.obs, inst.variant, inst.rule).decision);
        });
    CHECK(seen > 100);
}

TEST_CASE("random plurality instances agree with the naive oracle") {
    std::mt19937_64 seeds(20250810);
    int checked = 0;
    for (int iter = 0; iter < 500; ++iter) {
        GenParams p;
        p.rule = Rule::plurality(2 + iter % 2);
        p.num_candidates = 2 + iter % 2;
        p.variant = cw(iter % 2 == 0, iter % 3 == 0);
        p.num_past = static_cast<int>(seeds() % 2);
        p.num_future = static_cast<int>(seeds() % 3);
        const Instance inst = generate_random(p, seeds());
        const auto out = solve(inst.obs, inst.variant, inst.rule);
        REQUIRE(out.decision == solve_naive(inst.obs, inst.variant, inst.rule));
        ++checked;
    }
    CHECK(checked == 500);
}

TEST_CASE("monotone in the budget") {
    std::mt19937_64 seeds(77);
    for (int iter = 0; iter < 120; ++iter) {
        GenParams p;
        p.rule = Rule::plurality(2);
        p.num_candidates = 2;
        p.variant = cw(iter % 2 == 1, false);
        p.num_past = 0;
        p.num_future = 2;
        p.max_k = 2;
        Instance inst = generate_random(p, seeds());
        const bool at_k = solve(inst.obs, inst.variant, inst.rule).decision;
        *inst.obs.limit += 1 + seeds() % 2;
        const bool at_more = solve(inst.obs, inst.variant, inst.rule).decision;
        if (at_k) REQUIRE(at_more);
    }
}

TEST_CASE("unit-price and unit-weight embeddings preserve decisions") {
    SweepGrid grid;
    grid.rule = Rule::plurality(2);
    grid.variant = cw(false, false);
    grid.m = 2;
    grid.max_voters = 3;
    grid.ks = {0, 1, 2};
    for_each_legal_instance(grid, [&](const Instance& inst) {
        const bool base = solve(inst.obs, inst.variant, inst.rule).decision;

        Instance priced = inst;
        priced.variant.priced = true;
        for (auto& v : priced.obs.past) v.price = Nat(1);
        priced.obs.current.price = Nat(1);
        for (auto& v : priced.obs.future) v.price = Nat(1);
        REQUIRE(solve(priced.obs, priced.variant, priced.rule).decision == base);

        Instance weighted = inst;
        weighted.variant.weighted = true;
        for (auto& v : weighted.obs.past) v.weight = Nat(1);
        weighted.obs.current.weight = Nat(1);
        for (auto& v : weighted.obs.future) v.weight = Nat(1);
        REQUIRE(solve(weighted.obs, weighted.variant, weighted.rule).decision == base);
    });
}

TEST_CASE("fixed bribe caps behave like the matching budget") {
    SweepGrid grid;
    grid.rule = Rule::plurality(2);
    grid.variant = cw(false, false);
    grid.m = 2;
    grid.max_voters = 3;
    grid.ks = {0, 1, 2};
    for_each_legal_instance(grid, [&](const Instance& inst) {
        const bool base = solve(inst.obs, inst.variant, inst.rule).decision;
        Instance capped = inst;
        capped.variant.bribe_cap = *inst.obs.limit;
        capped.obs.limit.reset();
        REQUIRE(solve(capped.obs, capped.variant, capped.rule).decision == base);

        // priced capped image: unit prices, both limits equal to k
        Instance pc = inst;
        pc.variant.priced = true;
        pc.variant.bribe_cap = *inst.obs.limit;
        for (auto& v : pc.obs.past) v.price = Nat(1);
        pc.obs.current.price = Nat(1);
        for (auto& v : pc.obs.future) v.price = Nat(1);
        REQUIRE(solve(pc.obs, pc.variant, pc.rule).decision == base);
    });
}

TEST_CASE("bribe-the-last-voters strategy matches the game value") {
    SweepGrid grid;
    grid.rule = Rule::plurality(2);
    grid.variant = cw(false, false);
    grid.m = 2;
    grid.max_voters = 3;
    grid.ks = {0, 1, 2, 3};
    for_each_legal_instance(grid, [&](const Instance& inst) {
        REQUIRE(bribe_last_strategy_oracle(inst) ==
                solve(inst.obs, inst.variant, inst.rule).decision);
    });
}

TEST_CASE("naive cap refuses oversized instances") {
    auto b = Build(3, Rule::plurality(3), cw(false, false));
    b.current(ord({0, 1, 2}));
    for (int i = 0; i < 9; ++i) b.future();
    b.k(2);
    SolveOptions opts;
    opts.naive_leaf_cap = 1e6;
    CHECK_THROWS_AS((void)solve_naive(b.inst.obs, b.inst.variant, b.inst.rule, opts),
                    CapExceeded);
}

TEST_SUITE_END();
