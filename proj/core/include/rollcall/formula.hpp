#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rollcall {

// Propositional formula over integer variable ids, connectives ! & | only.
// Nodes live in a pool; `root` indexes it.  The printers and parsers keep the
// tree shape stable, so round-tripping reproduces an equal structure.
struct Formula {
    enum class Op : std::uint8_t { var, lnot, land, lor };
    struct Node {
        Op op;
        int a = -1;   // operand (lnot/land/lor)
        int b = -1;   // second operand (land/lor)
        int var = -1; // variable id (var)
    };
    std::vector<Node> nodes;
    int root = -1;

    // node constructors return the new index; callers set `root` themselves
    int add_var(int v);
    int add_not(int a);
    int add_and(int a, int b);
    int add_or(int a, int b);

    bool empty() const { return root < 0; }
    bool eval(const std::vector<char>& assignment) const;
    void collect_vars(std::set<int>& out) const;
    bool contains_var(int v) const;

    bool equals(const Formula& other) const;  // structural equality
};

// Renders with minimal parentheses: '!' binds tightest, then '&', then '|'.
// `var_token` supplies the printed form of each variable id.
std::string format_formula(const Formula& f,
                           const std::function<std::string(int)>& var_token);

// Recursive-descent parser over the grammar
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | VAR
// Variable tokens are recognized and mapped to ids by `lex_var`, which
// receives the input and the current position, and returns the id and the
// number of consumed bytes (or nullopt if no variable token starts there).
// Whitespace is not allowed: candidate names embed these strings verbatim.
std::optional<Formula> parse_formula(
    std::string_view text,
    const std::function<std::optional<std::pair<int, int>>(std::string_view, std::size_t)>&
        lex_var);

}  // namespace rollcall
