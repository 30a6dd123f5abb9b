#include "rollcall/crosscheck.hpp"

#include <chrono>

namespace rollcall {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::general: return "general";
        case Engine::naive: return "naive";
        case Engine::fast: return "fast";
    }
    return "?";
}

SolveOutcome fast_decide(const Instance& inst) {
    const Rule& rule = inst.rule;
    if (rule.kind == Rule::Kind::approval)
        return approval_decide(inst.obs, inst.variant, rule);
    if (rule.kind == Rule::Kind::scoring) {
        if (rule.is_plurality()) return plurality_decide(inst.obs, inst.variant, rule);
        if (rule.is_veto3() && inst.obs.candidates.size() == 3)
            return veto3_decide(inst.obs, inst.variant, rule);
        if (!inst.variant.weighted)
            return scoring_dp_decide(inst.obs, inst.variant, rule);
    }
    throw WrongRule("fast_decide: no polynomial-time decider applies");
}

CrossCheckResult cross_check(std::span<const Instance> corpus,
                             std::span<const Engine> engines,
                             const SolveOptions& opts) {
    CrossCheckResult result;
    for (const Instance& inst : corpus) {
        ++result.instances;
        const std::string digest = instance_digest(inst);
        int ran = 0;
        bool first = false, agree = true, have_first = false;
        for (Engine e : engines) {
            RunReport rep;
            rep.digest = digest;
            rep.engine = e;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                switch (e) {
                    case Engine::general: {
                        auto out = solve(inst.obs, inst.variant, inst.rule, opts);
                        rep.decision = out.decision;
                        rep.witness = out.action;
                        break;
                    }
                    case Engine::naive:
                        rep.decision = solve_naive(inst.obs, inst.variant, inst.rule, opts);
                        break;
                    case Engine::fast: {
                        auto out = fast_decide(inst);
                        rep.decision = out.decision;
                        rep.witness = out.action;
                        break;
                    }
                }
            } catch (const WrongRule& err) {
                rep.skipped = true;
                rep.note = err.what();
            } catch (const WrongVariant& err) {
                rep.skipped = true;
                rep.note = err.what();
            } catch (const CapExceeded& err) {
                rep.skipped = true;
                rep.note = err.what();
            }
            rep.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            if (!rep.skipped) {
                ++ran;
                if (!have_first) {
                    first = rep.decision;
                    have_first = true;
                } else if (rep.decision != first) {
                    agree = false;
                }
            }
            result.reports.push_back(std::move(rep));
        }
        if (ran < 2) {
            ++result.skipped_instances;
        } else if (agree) {
            ++result.agreements;
        } else {
            ++result.disagreements;
            result.all_agree = false;
        }
    }
    return result;
}

}  // namespace rollcall
