#include "rollcall/tiered.hpp"

namespace rollcall {

int TieredFormula::subscript_one_max() const {
    int best = 0;
    for (const auto& [tier, pos] : vars) {
        (void)pos;
        if (tier > best) best = tier;
    }
    return best;
}

int TieredFormula::subscript_two_max() const {
    int best = 0;
    for (const auto& [tier, pos] : vars) {
        (void)tier;
        if (pos > best) best = pos;
    }
    return best;
}

bool TieredFormula::tier_populated(int tier) const {
    for (const auto& [t, pos] : vars) {
        (void)pos;
        if (t == tier) return true;
    }
    return false;
}

int TieredFormula::var_id(int tier, int pos) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == std::pair{tier, pos}) return static_cast<int>(i);
    vars.emplace_back(tier, pos);
    return static_cast<int>(vars.size()) - 1;
}

bool TieredFormula::equals(const TieredFormula& other) const {
    // Variable identity is the (tier, pos) pair, not the id numbering.
    struct Eq {
        const TieredFormula& x;
        const TieredFormula& y;
        bool go(int a, int b) const {
            const auto& na = x.matrix.nodes[a];
            const auto& nb = y.matrix.nodes[b];
            if (na.op != nb.op) return false;
            switch (na.op) {
                case Formula::Op::var:
                    return x.vars[na.var] == y.vars[nb.var];
                case Formula::Op::lnot:
                    return go(na.a, nb.a);
                default:
                    return go(na.a, nb.a) && go(na.b, nb.b);
            }
        }
    };
    if (matrix.empty() || other.matrix.empty())
        return matrix.empty() == other.matrix.empty();
    return Eq{*this, other}.go(matrix.root, other.matrix.root);
}

std::string tiered_encode(const TieredFormula& t) {
    return format_formula(t.matrix, [&](int id) {
        const auto& [tier, pos] = t.vars[id];
        return "x[" + std::to_string(tier) + "," + std::to_string(pos) + "]";
    });
}

namespace {

// Positive integer without leading zeros, bounded to keep subscripts sane.
std::optional<std::pair<int, int>> lex_posint(std::string_view s, std::size_t at) {
    std::size_t i = at;
    if (i >= s.size() || s[i] < '1' || s[i] > '9') return std::nullopt;
    long value = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        value = value * 10 + (s[i] - '0');
        if (value > 1'000'000) return std::nullopt;
        ++i;
    }
    return std::pair{static_cast<int>(value), static_cast<int>(i - at)};
}

}  // namespace

std::optional<TieredFormula> tiered_parse(std::string_view name) {
    TieredFormula t;
    auto lex_var = [&](std::string_view s, std::size_t at)
        -> std::optional<std::pair<int, int>> {
        std::size_t i = at;
        if (i + 1 >= s.size() || s[i] != 'x' || s[i + 1] != '[') return std::nullopt;
        i += 2;
        auto tier = lex_posint(s, i);
        if (!tier) return std::nullopt;
        i += tier->second;
        if (i >= s.size() || s[i] != ',') return std::nullopt;
        ++i;
        auto pos = lex_posint(s, i);
        if (!pos) return std::nullopt;
        i += pos->second;
        if (i >= s.size() || s[i] != ']') return std::nullopt;
        ++i;
        return std::pair{t.var_id(tier->first, pos->first),
                         static_cast<int>(i - at)};
    };
    auto matrix = parse_formula(name, lex_var);
    if (!matrix) return std::nullopt;
    t.matrix = std::move(*matrix);
    return t;
}

}  // namespace rollcall
