#pragma once

#include "rollcall/formula.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rollcall {

// A propositional formula whose variables are x[i,m] with positive integer
// tier i and position m.  Tier i groups the variables falling under the i-th
// quantifier block of the formula a candidate name encodes.
struct TieredFormula {
    Formula matrix;
    // variable id -> (tier, position); only ids referenced by the matrix
    std::vector<std::pair<int, int>> vars;

    int subscript_one_max() const;  // largest tier occurring
    int subscript_two_max() const;  // largest position occurring
    bool tier_populated(int tier) const;

    // id for (tier, pos), adding it if new
    int var_id(int tier, int pos);

    bool equals(const TieredFormula& other) const;
};

// Canonical string form over the grammar x[i,m], '&', '|', '!', parentheses.
// tiered_parse(tiered_encode(t)) reproduces t; failure to parse is a value
// (it makes the gadget election declare no winners), not an error.
std::string tiered_encode(const TieredFormula& t);
std::optional<TieredFormula> tiered_parse(std::string_view name);

}  // namespace rollcall
