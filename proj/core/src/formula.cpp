#include "rollcall/formula.hpp"

namespace rollcall {

int Formula::add_var(int v) {
    nodes.push_back({Op::var, -1, -1, v});
    return static_cast<int>(nodes.size()) - 1;
}

int Formula::add_not(int a) {
    nodes.push_back({Op::lnot, a, -1, -1});
    return static_cast<int>(nodes.size()) - 1;
}

int Formula::add_and(int a, int b) {
    nodes.push_back({Op::land, a, b, -1});
    return static_cast<int>(nodes.size()) - 1;
}

int Formula::add_or(int a, int b) {
    nodes.push_back({Op::lor, a, b, -1});
    return static_cast<int>(nodes.size()) - 1;
}

bool Formula::eval(const std::vector<char>& assignment) const {
    // Explicit recursion; formulas here are small.
    struct Ev {
        const Formula& f;
        const std::vector<char>& a;
        bool go(int n) const {
            const Node& nd = f.nodes[n];
            switch (nd.op) {
                case Op::var: return a[nd.var] != 0;
                case Op::lnot: return !go(nd.a);
                case Op::land: return go(nd.a) && go(nd.b);
                case Op::lor: return go(nd.a) || go(nd.b);
            }
            return false;
        }
    };
    return Ev{*this, assignment}.go(root);
}

void Formula::collect_vars(std::set<int>& out) const {
    for (const auto& n : nodes)
        if (n.op == Op::var) out.insert(n.var);
}

bool Formula::contains_var(int v) const {
    for (const auto& n : nodes)
        if (n.op == Op::var && n.var == v) return true;
    return false;
}

bool Formula::equals(const Formula& other) const {
    struct Eq {
        const Formula& x;
        const Formula& y;
        bool go(int a, int b) const {
            const Node& na = x.nodes[a];
            const Node& nb = y.nodes[b];
            if (na.op != nb.op) return false;
            switch (na.op) {
                case Op::var: return na.var == nb.var;
                case Op::lnot: return go(na.a, nb.a);
                case Op::land:
                case Op::lor: return go(na.a, nb.a) && go(na.b, nb.b);
            }
            return false;
        }
    };
    if (empty() || other.empty()) return empty() == other.empty();
    return Eq{*this, other}.go(root, other.root);
}

namespace {

int precedence(Formula::Op op) {
    switch (op) {
        case Formula::Op::lor: return 0;
        case Formula::Op::land: return 1;
        case Formula::Op::lnot: return 2;
        case Formula::Op::var: return 3;
    }
    return 3;
}

void print_node(const Formula& f, int n, int parent_prec, bool right_side,
                const std::function<std::string(int)>& var_token, std::string& out) {
    const auto& nd = f.nodes[n];
    const int prec = precedence(nd.op);
    // Parenthesize when binding looser than the context, or equally on the
    // right of a binary operator (keeps chains left-associated on reparse).
    const bool parens =
        prec < parent_prec || (right_side && prec == parent_prec && prec <= 1);
    if (parens) out += '(';
    switch (nd.op) {
        case Formula::Op::var:
            out += var_token(nd.var);
            break;
        case Formula::Op::lnot:
            out += '!';
            print_node(f, nd.a, precedence(Formula::Op::lnot), false, var_token, out);
            break;
        case Formula::Op::land:
            print_node(f, nd.a, prec, false, var_token, out);
            out += '&';
            print_node(f, nd.b, prec, true, var_token, out);
            break;
        case Formula::Op::lor:
            print_node(f, nd.a, prec, false, var_token, out);
            out += '|';
            print_node(f, nd.b, prec, true, var_token, out);
            break;
    }
    if (parens) out += ')';
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const std::function<std::optional<std::pair<int, int>>(std::string_view, std::size_t)>&
        lex_var;
    Formula out;
    bool failed = false;

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    int expr() {
        int a = term();
        if (failed) return -1;
        while (!at_end() && peek() == '|') {
            ++pos;
            int b = term();
            if (failed) return -1;
            a = out.add_or(a, b);
        }
        return a;
    }

    int term() {
        int a = factor();
        if (failed) return -1;
        while (!at_end() && peek() == '&') {
            ++pos;
            int b = factor();
            if (failed) return -1;
            a = out.add_and(a, b);
        }
        return a;
    }

    int factor() {
        if (at_end()) {
            failed = true;
            return -1;
        }
        if (peek() == '!') {
            ++pos;
            int a = factor();
            if (failed) return -1;
            return out.add_not(a);
        }
        if (peek() == '(') {
            ++pos;
            int a = expr();
            if (failed) return -1;
            if (at_end() || peek() != ')') {
                failed = true;
                return -1;
            }
            ++pos;
            return a;
        }
        auto var = lex_var(text, pos);
        if (!var) {
            failed = true;
            return -1;
        }
        pos += var->second;
        return out.add_var(var->first);
    }
};

}  // namespace

std::string format_formula(const Formula& f,
                           const std::function<std::string(int)>& var_token) {
    std::string out;
    if (!f.empty()) print_node(f, f.root, 0, false, var_token, out);
    return out;
}

std::optional<Formula> parse_formula(
    std::string_view text,
    const std::function<std::optional<std::pair<int, int>>(std::string_view, std::size_t)>&
        lex_var) {
    Parser p{text, 0, lex_var, {}, false};
    int root = p.expr();
    if (p.failed || !p.at_end()) return std::nullopt;
    p.out.root = root;
    return std::move(p.out);
}

}  // namespace rollcall
