#include "rollcall/qbf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace rollcall {

int Qbf::existential_blocks() const {
    int n = 0;
    for (const auto& b : blocks)
        if (b.quant == Quant::existential) ++n;
    return n;
}

void Qbf::check() const {
    std::set<int> declared;
    for (const auto& b : blocks) {
        if (b.vars.empty()) throw MalformedQbf("empty quantifier block");
        for (int v : b.vars) {
            if (v < 0 || v >= var_count()) throw MalformedQbf("variable id out of range");
            if (!declared.insert(v).second)
                throw MalformedQbf("variable declared twice: " + var_names[v]);
        }
    }
    std::set<int> used;
    matrix.collect_vars(used);
    for (int v : used)
        if (!declared.count(v))
            throw MalformedQbf("matrix uses undeclared variable: " + var_names[v]);
    for (const auto& b : blocks) {
        const bool occupied = std::any_of(b.vars.begin(), b.vars.end(),
                                          [&](int v) { return used.count(v) > 0; });
        if (!occupied)
            throw MalformedQbf("block contributes no variable occurring in the matrix");
    }
}

namespace {

bool eval_blocks(const Qbf& q, std::size_t bi, std::vector<char>& assignment) {
    if (bi == q.blocks.size()) return q.matrix.eval(assignment);
    const auto& block = q.blocks[bi];
    const std::size_t n = block.vars.size();
    const bool exists = block.quant == Qbf::Quant::existential;
    for (unsigned long m = 0; m < (1ul << n); ++m) {
        for (std::size_t i = 0; i < n; ++i)
            assignment[block.vars[i]] = (m >> i) & 1;
        const bool sub = eval_blocks(q, bi + 1, assignment);
        if (exists && sub) return true;
        if (!exists && !sub) return false;
    }
    return !exists;
}

}  // namespace

bool qbf_eval(const Qbf& q, const QbfCaps& caps) {
    q.check();
    if (q.var_count() > caps.max_total_vars)
        throw CapExceeded("qbf_eval: too many variables");
    std::vector<char> assignment(q.var_count(), 0);
    return eval_blocks(q, 0, assignment);
}

Qbf cousin_transform(const Qbf& q) {
    q.check();
    Qbf out = q;
    std::vector<int> guards;
    guards.reserve(q.blocks.size());
    for (std::size_t i = 0; i < q.blocks.size(); ++i) {
        const int id = out.var_count();
        out.var_names.push_back("b" + std::to_string(i + 1));
        out.blocks[i].vars.push_back(id);
        guards.push_back(id);
    }
    int conj = -1;
    for (std::size_t i = 0; i < q.blocks.size(); ++i) {
        if (q.blocks[i].quant != Qbf::Quant::existential) continue;
        const int g = out.matrix.add_var(guards[i]);
        conj = conj < 0 ? g : out.matrix.add_and(conj, g);
    }
    if (conj >= 0) out.matrix.root = out.matrix.add_and(out.matrix.root, conj);
    return out;
}

bool assignment_closure_eval(const Qbf& q, int j, const QbfCaps& caps) {
    q.check();
    const int blocks = static_cast<int>(q.blocks.size());
    if (blocks > caps.max_closure_blocks)
        throw CapExceeded("assignment_closure_eval: too many blocks");
    if (q.var_count() > caps.max_total_vars)
        throw CapExceeded("assignment_closure_eval: too many variables");
    for (unsigned long mask = 0; mask < (1ul << blocks); ++mask) {
        if (std::popcount(mask) > (j < 0 ? 0 : j)) continue;
        Qbf re = q;
        for (int i = 0; i < blocks; ++i)
            re.blocks[i].quant = (mask >> i) & 1 ? Qbf::Quant::existential
                                                 : Qbf::Quant::universal;
        if (qbf_eval(re, caps)) return true;
    }
    return false;
}

// ---- text format ------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Qbf parse_qbf(std::string_view text) {
    Qbf q;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_ident = [&]() -> std::string {
        std::size_t start = i;
        if (i < text.size() && ident_start(text[i])) {
            ++i;
            while (i < text.size() && ident_char(text[i])) ++i;
        }
        return std::string(text.substr(start, i - start));
    };

    std::vector<std::pair<std::string, int>> names;
    auto id_of = [&](const std::string& name, bool declare) {
        for (auto& [n, id] : names)
            if (n == name) return id;
        if (!declare) return -1;
        const int id = q.var_count();
        q.var_names.push_back(name);
        names.emplace_back(name, id);
        return id;
    };

    // quantifier prefix: ('A' | 'E') ident+ ';' ...
    while (true) {
        skip_ws();
        if (i >= text.size() || (text[i] != 'A' && text[i] != 'E')) break;
        // a lone A/E followed by an identifier character is a variable, not a
        // quantifier; the prefix ends there
        if (i + 1 < text.size() && ident_char(text[i + 1])) break;
        Qbf::Block block;
        block.quant = text[i] == 'E' ? Qbf::Quant::existential : Qbf::Quant::universal;
        ++i;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ';') {
                ++i;
                break;
            }
            const std::string name = read_ident();
            if (name.empty()) throw MalformedQbf("expected variable name in block");
            if (id_of(name, false) >= 0)
                throw MalformedQbf("variable declared twice: " + name);
            block.vars.push_back(id_of(name, true));
        }
        if (block.vars.empty()) throw MalformedQbf("empty quantifier block");
        q.blocks.push_back(std::move(block));
    }

    // matrix: strip whitespace, then run the shared expression parser
    std::string matrix_text;
    for (; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) matrix_text += text[i];
    if (matrix_text.empty()) throw MalformedQbf("missing matrix");

    auto lex_var = [&](std::string_view s, std::size_t at)
        -> std::optional<std::pair<int, int>> {
        if (at >= s.size() || !ident_start(s[at])) return std::nullopt;
        std::size_t end = at + 1;
        while (end < s.size() && ident_char(s[end])) ++end;
        const std::string name(s.substr(at, end - at));
        const int id = id_of(name, false);
        if (id < 0) throw MalformedQbf("matrix uses undeclared variable: " + name);
        return std::pair{id, static_cast<int>(end - at)};
    };
    auto matrix = parse_formula(matrix_text, lex_var);
    if (!matrix) throw MalformedQbf("cannot parse matrix");
    q.matrix = std::move(*matrix);
    q.check();
    return q;
}

std::string format_qbf(const Qbf& q) {
    std::string out;
    for (const auto& b : q.blocks) {
        out += b.quant == Qbf::Quant::existential ? "E" : "A";
        for (int v : b.vars) {
            out += ' ';
            out += q.var_names[v];
        }
        out += " ; ";
    }
    out += format_formula(q.matrix, [&](int id) { return q.var_names[id]; });
    return out;
}

}  // namespace rollcall
