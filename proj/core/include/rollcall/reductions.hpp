#pragma once

#include "rollcall/obs.hpp"
#include "rollcall/qbf.hpp"

#include <vector>

namespace rollcall {

// Whether the emitted instance carries the bribe allowance as a fixed cap
// (the "[k]" problem family) or as the instance's own limit.
enum class BribeLimitForm { fixed_cap, input_budget };

// The A-form hardness reduction: a formula with alternating quantifiers
// (universal first, odd block count 2k+1, every block occurring in the
// matrix) maps to an online bribery instance under the gadget system with
// parameter k.  The instance is a yes-instance exactly when the formula is
// true.  Constructive mode uses the all-win-on-true gadget; destructive mode
// the swapped one.
Instance reduce_qbf(const Qbf& q, BribeLimitForm form = BribeLimitForm::fixed_cap,
                    Variant::Mode mode = Variant::Mode::constructive);

// Simultaneous manipulation instance: nonmanipulators have voted; the
// coalition chooses the manipulators' votes.
struct ManipInstance {
    Candidates candidates;
    Rule rule;
    std::vector<Vote> nonmanipulators;     // cast votes; weights 1 when unweighted
    std::vector<Nat> manipulator_weights;  // one entry per manipulator
    bool weighted = false;
    Variant::Mode mode = Variant::Mode::constructive;
    CandidateId candidate = 0;  // preferred (constructive) or despised (destructive)
    enum class WinnerModel { nonunique, unique };
    WinnerModel winner_model = WinnerModel::nonunique;
};

// part 1: manipulation -> online bribery of the same mode (k covers all
//         manipulators; the nonmanipulators become the past).
// part 2: constructive manipulation in the unique-winner model -> online
//         destructive bribery (designated candidate ranked second).
Instance reduce_manipulation(const ManipInstance& mi, int part);

// Online manipulation moment: an unpriced election snapshot plus manipulator
// flags; the coalition controls the flagged voters at their turns.
struct OnlineManipInstance {
    Obs obs;  // unpriced skeleton; its limit field is ignored
    Rule rule;
    std::vector<bool> past_manipulators;
    bool current_manipulator = false;
    std::vector<bool> future_manipulators;
    Variant::Mode mode = Variant::Mode::constructive;
    bool weighted = false;
};

// part 3: online manipulation -> online priced bribery (manipulators priced
//         0, nonmanipulators 1, budget 0).
Instance reduce_online_manipulation(const OnlineManipInstance& omi);

// Partition -> priced+weighted Plurality online bribery: two candidates, the
// i-th voter priced and weighted s_i, budget = floor(sum/2).  Odd-sum inputs
// emit the same construction, which is then unsatisfiable, keeping the
// reduction total.  Destructive mode adds the one unbribed weight-1 voter for
// d and designates c.
Instance reduce_partition(const std::vector<Nat>& values,
                          Variant::Mode mode = Variant::Mode::constructive);

}  // namespace rollcall
