#pragma once

#include "rollcall/deciders.hpp"
#include "rollcall/serialize.hpp"

#include <span>
#include <string>
#include <vector>

namespace rollcall {

enum class Engine { general, naive, fast };

const char* engine_name(Engine e);

// Dispatch to the matching polynomial-time decider: Plurality, Approval,
// 3-candidate Veto, or the unweighted scoring DP.  Throws WrongRule when none
// applies.
SolveOutcome fast_decide(const Instance& inst);

struct RunReport {
    std::string digest;
    Engine engine = Engine::general;
    bool skipped = false;
    bool decision = false;
    std::optional<CurrentMove> witness;
    double wall_ms = 0.0;
    std::string note;
};

struct CrossCheckResult {
    std::vector<RunReport> reports;
    std::size_t instances = 0;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t skipped_instances = 0;  // fewer than two engines ran
    bool all_agree = true;
};

// Runs every applicable engine on every instance and compares decisions.
// Inapplicable engines (wrong rule, enumeration caps) are skipped with a
// notice rather than failing the run.
CrossCheckResult cross_check(std::span<const Instance> corpus,
                             std::span<const Engine> engines,
                             const SolveOptions& opts = {});

}  // namespace rollcall
