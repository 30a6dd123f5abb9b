#include <doctest.h>

#include "support/builders.hpp"

#include <random>

using namespace rollcall;
using namespace rollcall::testing;

TEST_SUITE_BEGIN("obs");

TEST_CASE("desired_set") {
    const Ballot sigma = ord({0, 1, 2});  // a > b > c
    SUBCASE("constructive includes d") {
        GoalSpec g{Variant::Mode::constructive, sigma, 1};
        CHECK(desired_set(g) == std::vector<CandidateId>{0, 1});
    }
    SUBCASE("destructive excludes d") {
        GoalSpec g{Variant::Mode::destructive, sigma, 1};
        CHECK(desired_set(g) == std::vector<CandidateId>{0});
    }
    SUBCASE("destructive with d on top is empty") {
        GoalSpec g{Variant::Mode::destructive, sigma, 0};
        CHECK(desired_set(g).empty());
    }
    SUBCASE("d missing from sigma") {
        GoalSpec g{Variant::Mode::constructive, sigma, 7};
        CHECK_THROWS_AS((void)desired_set(g), DomainError);
    }
}

TEST_CASE("goal_satisfied") {
    const Ballot sigma = ord({0, 1, 2});
    GoalSpec cons{Variant::Mode::constructive, sigma, 1};
    GoalSpec dest{Variant::Mode::destructive, sigma, 1};
    CHECK(goal_satisfied(cons, {0}));
    CHECK_FALSE(goal_satisfied(cons, {2}));
    CHECK_FALSE(goal_satisfied(dest, {2}));  // b >=_sigma c, so c is hated enough
    CHECK(goal_satisfied(dest, {0}));
    CHECK(goal_satisfied(dest, {}));  // empty winner set
    CHECK_FALSE(goal_satisfied(cons, {}));
}

TEST_CASE("desired-set identities") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        const int m = 2 + static_cast<int>(rng() % 4);
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
        const Ballot sigma = Ballot::order_of(perm);
        const int d = static_cast<int>(rng() % m);
        GoalSpec cons{Variant::Mode::constructive, sigma, d};
        GoalSpec dest{Variant::Mode::destructive, sigma, d};
        auto dc = desired_set(cons);
        auto dd = desired_set(dest);
        dd.push_back(d);
        std::sort(dd.begin(), dd.end());
        CHECK(dc == dd);  // constructive = destructive + {d}

        // destructive goal  <=>  winners within the destructive desired set
        const auto mask = desired_mask(dest);
        std::vector<CandidateId> winners;
        for (int c = 0; c < m; ++c)
            if (rng() & 1) winners.push_back(c);
        const bool within = std::all_of(winners.begin(), winners.end(),
                                        [&](int w) { return mask[w] != 0; });
        CHECK(goal_satisfied(dest, winners) == within);
    }
}

TEST_CASE("spent") {
    SUBCASE("counts and costs") {
        auto b = Build(2, Rule::plurality(2), cw(true, false));
        b.past(ord({0, 1}), true, {}, Nat(3))
            .past(ord({1, 0}), false, {}, Nat(9))
            .current(ord({0, 1}), {}, Nat(1))
            .k(5);
        auto s = spent(b.inst.obs, b.inst.variant);
        CHECK(s.count == 1);
        CHECK(*s.cost == 3);
    }
    SUBCASE("empty past") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.current(ord({0, 1})).k(1);
        auto s = spent(b.inst.obs, b.inst.variant);
        CHECK(s.count == 0);
        CHECK_FALSE(s.cost.has_value());
    }
    SUBCASE("zero prices count as spending nothing extra") {
        auto b = Build(2, Rule::plurality(2), cw(true, false));
        b.past(ord({0, 1}), true, {}, Nat(2))
            .past(ord({0, 1}), true, {}, Nat(0))
            .current(ord({0, 1}), {}, Nat(1))
            .k(2);
        auto s = spent(b.inst.obs, b.inst.variant);
        CHECK(s.count == 2);
        CHECK(*s.cost == 2);
    }
}

TEST_CASE("validate_obs") {
    SUBCASE("overspent count is illegal") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.past(ord({0, 1}), true).past(ord({1, 0}), true).current(ord({0, 1})).k(1);
        CHECK_THROWS_AS(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule),
                        IllegalInstance);
    }
    SUBCASE("budget exactly met is fine") {
        auto b = Build(2, Rule::plurality(2), cw(true, false));
        b.past(ord({0, 1}), true, {}, Nat(2))
            .past(ord({1, 0}), true, {}, Nat(3))
            .current(ord({0, 1}), {}, Nat(1))
            .k(5);
        CHECK_NOTHROW(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule));
    }
    SUBCASE("current voter must carry a ballot") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.k(1);
        b.inst.obs.current.name = "u";
        CHECK_THROWS_AS(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule),
                        IllegalInstance);
    }
    SUBCASE("field shape mismatches") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.current(ord({0, 1})).k(1);
        b.inst.obs.current.price = Nat(1);  // price in an unpriced variant
        CHECK_THROWS_AS(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule),
                        IllegalInstance);
    }
    SUBCASE("duplicate voter names") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.past(ord({0, 1}), false).current(ord({0, 1})).k(0);
        b.inst.obs.current.name = b.inst.obs.past[0].name;
        CHECK_THROWS_AS(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule),
                        IllegalInstance);
    }
    SUBCASE("unpriced capped variants carry no k") {
        Variant v = cw(false, false);
        v.bribe_cap = Nat(1);
        auto b = Build(2, Rule::plurality(2), v);
        b.current(ord({0, 1}));
        CHECK_NOTHROW(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule));
        b.k(1);
        CHECK_THROWS_AS(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule),
                        IllegalInstance);
    }
    SUBCASE("priced capped variants check both limits") {
        Variant v = cw(true, false);
        v.bribe_cap = Nat(1);
        auto b = Build(2, Rule::plurality(2), v);
        b.past(ord({0, 1}), true, {}, Nat(0))
            .past(ord({1, 0}), true, {}, Nat(0))
            .current(ord({0, 1}), {}, Nat(1))
            .k(5);
        // cost 0 <= 5 but two bribes exceed the cap of one
        CHECK_THROWS_AS(validate_obs(b.inst.obs, b.inst.variant, b.inst.rule),
                        IllegalInstance);
    }
    SUBCASE("reason tags") {
        auto b = Build(2, Rule::plurality(2), cw(false, false));
        b.past(ord({0, 1}), true).current(ord({0, 1})).k(0);
        try {
            validate_obs(b.inst.obs, b.inst.variant, b.inst.rule);
            FAIL("expected IllegalInstance");
        } catch (const IllegalInstance& e) {
            CHECK(e.reason == IllegalInstance::Reason::overspent_budget);
        }
    }
}

TEST_SUITE_END();
