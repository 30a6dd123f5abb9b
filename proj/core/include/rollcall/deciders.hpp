#pragma once

#include "rollcall/solver.hpp"

#include <functional>
#include <vector>

namespace rollcall {

// ---- exact pseudo-polynomial subroutines (the desk-scale stand-ins for the
// NP / coNP oracle calls in the hardness-facing case analyses) --------------

struct KnapsackItem {
    Nat price;
    Nat weight;
    std::size_t index = 0;  // voter position
};

struct KnapsackPick {
    Nat weight;                       // maximum total weight within budget
    std::vector<std::size_t> chosen;  // lexicographically smallest maximizer
};

// Maximum total weight over subsets with total price <= budget.  Dynamic
// program over the (clamped) budget; when the table would not fit, falls back
// to subset enumeration for up to 20 items, else throws CapExceeded.
KnapsackPick knapsack_max_weight(const std::vector<KnapsackItem>& items,
                                 const Nat& budget,
                                 std::size_t table_cap = std::size_t{1} << 16);

// True iff some split of the weight multiset into two bins satisfies the
// predicate (called with the two bin sums).  Subset-sum DP; total weight must
// fit the table cap.
bool partition_feasible(const std::vector<Nat>& weights,
                        const std::function<bool(const Nat&, const Nat&)>& split_ok,
                        std::size_t table_cap = std::size_t{1} << 22);

// ---- polynomial-time deciders ---------------------------------------------

// Plurality: the two-branch analysis (bribe the current voter or not), with
// everything bribed toward the strongest desired candidate and the adversary
// piling on the strongest undesired one; priced+weighted selection by
// max-weight knapsack.  Decision equals solve() on every instance.
SolveOutcome plurality_decide(const Obs& obs, const Variant& variant,
                              const Rule& rule);

// Approval: bribed voters approve exactly the desired candidates, adversarial
// voters exactly the others; voter selection mirrors the plurality cases.
SolveOutcome approval_decide(const Obs& obs, const Variant& variant,
                             const Rule& rule);

// Unweighted scoring rules: minimum-budget dynamic program over (settled
// scores, pending voter, revealed ballot), briber minimizing over bribe/leave
// and content, adversary maximizing over the next revealed ballot.  Unpriced
// variants run as unit prices with budget k.
SolveOutcome scoring_dp_decide(const Obs& obs, const Variant& variant,
                               const Rule& rule);

// 3-candidate Veto case analysis; the oracle calls of the weighted cases are
// realized exactly by knapsack_max_weight / partition_feasible, and the
// priced+weighted cases by exact price-constrained search.
SolveOutcome veto3_decide(const Obs& obs, const Variant& variant,
                          const Rule& rule);

// ---- the dichotomy classifier ---------------------------------------------

enum class Complexity {
    p,
    np_hard,
    np_complete,
    pnp1_complete,
    pnp1_hard_in_delta2p,
    trivial_all_win,
};

// Classification of the online bribery problems of a scoring vector, pure
// metadata.  Constructive and destructive cases coincide throughout.
struct DichotomyVerdict {
    Complexity unpriced_unweighted;
    Complexity priced_unweighted;
    Complexity weighted_unpriced;
    Complexity priced_weighted;
};

DichotomyVerdict scoring_dichotomy(const std::vector<Nat>& alpha);

const char* complexity_name(Complexity c);

}  // namespace rollcall
