#pragma once

#include "rollcall/obs.hpp"

#include <cstdint>

namespace rollcall {

struct GenParams {
    Rule rule = Rule::plurality(3);
    Variant variant;
    int num_candidates = 3;
    int num_past = 1;
    int num_future = 2;
    unsigned max_weight = 2;
    unsigned max_price = 2;
    unsigned max_k = 3;
};

// Deterministic for a fixed seed; the result always validates.  Gadget
// instances are not generated here (they come from the reductions).
Instance generate_random(const GenParams& params, std::uint64_t seed);

}  // namespace rollcall
