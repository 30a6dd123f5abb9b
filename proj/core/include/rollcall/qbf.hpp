#pragma once

#include "rollcall/errors.hpp"
#include "rollcall/formula.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rollcall {

struct QbfCaps {
    int max_total_vars = 24;   // qbf_eval enumerates assignments blockwise
    int max_closure_blocks = 8;  // 2^blocks quantifier reassignments
};

// Prenex quantified boolean formula: quantifier blocks over disjoint variable
// collections, matrix over exactly the declared variables (connectives
// ! & | only).  Every block must contribute at least one variable occurring
// in the matrix.
struct Qbf {
    enum class Quant { universal, existential };
    struct Block {
        Quant quant = Quant::universal;
        std::vector<int> vars;
    };
    std::vector<Block> blocks;
    Formula matrix;
    std::vector<std::string> var_names;  // id -> name

    int var_count() const { return static_cast<int>(var_names.size()); }
    int existential_blocks() const;
    void check() const;  // throws MalformedQbf
};

// Truth under game semantics by exhaustive recursion over the blocks.
bool qbf_eval(const Qbf& q, const QbfCaps& caps = {});

// The preinsulated cousin: a fresh guard variable b_i joins every block, and
// the conjunction of the guards of the existential blocks joins the matrix
// (omitted when there is no existential block).  Quantifiers and block count
// are unchanged; truth value is preserved.
Qbf cousin_transform(const Qbf& q);

// OR over every reassignment of the quantifiers (variables stay with their
// blocks) that uses at most j existential blocks, of the truth of the
// reassigned formula.  The preinsulation property: applying this to
// cousin_transform(q) with j = #existential blocks of q gives qbf_eval(q).
bool assignment_closure_eval(const Qbf& q, int j, const QbfCaps& caps = {});

// Text format: prefix blocks "A x1 x2 ; E y1 ;" followed by the matrix over
// '!', '&', '|' and parentheses.  Identifiers are [A-Za-z_][A-Za-z0-9_]*.
Qbf parse_qbf(std::string_view text);
std::string format_qbf(const Qbf& q);

}  // namespace rollcall
