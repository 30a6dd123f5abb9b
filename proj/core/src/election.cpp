#include "rollcall/election.hpp"

#include "rollcall/gadget.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rollcall {

CandidateId Candidates::index_of(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == n) return i;
    return -1;
}

CandidateId Candidates::lex_smallest() const {
    CandidateId best = 0;
    for (int i = 1; i < size(); ++i)
        if (names[i] < names[best]) best = i;
    return best;
}

void Candidates::check() const {
    if (names.empty()) throw DomainError("candidate set is empty");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw DomainError("empty candidate name");
        if (!seen.insert(n).second)
            throw DomainError("duplicate candidate name: " + n);
    }
}

Ballot Ballot::order_of(std::vector<int> ids) {
    Ballot b;
    b.kind = BallotKind::order;
    b.slots = std::move(ids);
    return b;
}

Ballot Ballot::approval_of(std::vector<int> flags) {
    Ballot b;
    b.kind = BallotKind::approval;
    b.slots = std::move(flags);
    return b;
}

int Ballot::rank_of(CandidateId c) const {
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == c) return static_cast<int>(i);
    throw DomainError("candidate not ranked in ballot");
}

Rule Rule::scoring(std::vector<Nat> alpha) {
    Rule r;
    r.kind = Kind::scoring;
    r.alpha = std::move(alpha);
    return r;
}

Rule Rule::plurality(int m) {
    std::vector<Nat> a(m, 0);
    if (m > 0) a[0] = 1;
    return scoring(std::move(a));
}

Rule Rule::veto(int m) {
    std::vector<Nat> a(m, 1);
    if (m > 0) a[m - 1] = 0;
    return scoring(std::move(a));
}

Rule Rule::borda(int m) {
    std::vector<Nat> a(m);
    for (int i = 0; i < m; ++i) a[i] = m - 1 - i;
    return scoring(std::move(a));
}

Rule Rule::approval() {
    Rule r;
    r.kind = Kind::approval;
    return r;
}

Rule Rule::gadget(int k, GadgetMode mode) {
    Rule r;
    r.kind = Kind::gadget;
    r.gadget_k = k;
    r.gadget_mode = mode;
    return r;
}

bool Rule::is_plurality() const {
    if (kind != Kind::scoring || alpha.empty() || alpha[0] != 1) return false;
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] != 0) return false;
    return true;
}

bool Rule::is_veto3() const {
    return kind == Kind::scoring && alpha.size() == 3 && alpha[0] == 1 &&
           alpha[1] == 1 && alpha[2] == 0;
}

void Rule::check(int num_candidates) const {
    switch (kind) {
        case Kind::scoring: {
            if (static_cast<int>(alpha.size()) != num_candidates)
                throw DomainError("scoring vector length does not match candidate count");
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i] < 0) throw DomainError("negative scoring entry");
                if (i + 1 < alpha.size() && alpha[i] < alpha[i + 1])
                    throw DomainError("scoring vector must be nonincreasing");
            }
            break;
        }
        case Kind::approval:
            break;
        case Kind::gadget:
            if (gadget_k < 0) throw DomainError("gadget k must be nonnegative");
            break;
    }
}

bool ballot_valid(const Rule& rule, const Candidates& cands, const Ballot& b) {
    const int m = cands.size();
    if (b.kind != rule.ballot_kind()) return false;
    if (static_cast<int>(b.slots.size()) != m) return false;
    if (b.kind == BallotKind::order) {
        std::vector<char> seen(m, 0);
        for (int id : b.slots) {
            if (id < 0 || id >= m || seen[id]) return false;
            seen[id] = 1;
        }
        return true;
    }
    for (int f : b.slots)
        if (f != 0 && f != 1) return false;
    return true;
}

void check_ballot(const Rule& rule, const Candidates& cands, const Ballot& b) {
    if (!ballot_valid(rule, cands, b))
        throw DomainError(b.kind == BallotKind::order
                              ? "order ballot is not a permutation of the candidates"
                              : "approval ballot does not match the candidate set");
}

ScoreTable score_table(const Rule& rule, const Candidates& cands,
                       const std::vector<Vote>& votes) {
    if (rule.kind == Rule::Kind::gadget)
        throw WrongRule("score_table: gadget elections have no scores");
    const int m = cands.size();
    ScoreTable scores(m, 0);
    for (const auto& v : votes) {
        check_ballot(rule, cands, v.ballot);
        if (v.weight < 0) throw DomainError("negative vote weight");
        if (v.weight == 0) continue;
        if (rule.kind == Rule::Kind::scoring) {
            for (int pos = 0; pos < m; ++pos)
                scores[v.ballot.slots[pos]] += rule.alpha[pos] * v.weight;
        } else {
            for (int c = 0; c < m; ++c)
                if (v.ballot.slots[c]) scores[c] += v.weight;
        }
    }
    return scores;
}

std::vector<CandidateId> winners_of_scores(const ScoreTable& scores) {
    std::vector<CandidateId> out;
    if (scores.empty()) return out;
    const Nat* best = &scores[0];
    for (const auto& s : scores)
        if (s > *best) best = &s;
    for (int c = 0; c < static_cast<int>(scores.size()); ++c)
        if (scores[c] == *best) out.push_back(c);
    return out;
}

std::vector<CandidateId> winner_set(const Rule& rule, const Candidates& cands,
                                    const std::vector<Vote>& votes) {
    cands.check();
    rule.check(cands.size());
    if (rule.kind == Rule::Kind::gadget) {
        for (const auto& v : votes) check_ballot(rule, cands, v.ballot);
        return gadget_election_eval(rule.gadget_k, rule.gadget_mode, cands, votes);
    }
    return winners_of_scores(score_table(rule, cands, votes));
}

std::vector<Ballot> enumerate_ballots(const Rule& rule, const Candidates& cands,
                                      const EnumCaps& caps) {
    const int m = cands.size();
    std::vector<Ballot> out;
    if (rule.ballot_kind() == BallotKind::order) {
        if (m > caps.max_order_candidates)
            throw CapExceeded("order enumeration cap exceeded: m = " + std::to_string(m));
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            out.push_back(Ballot::order_of(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        if (m > caps.max_approval_candidates)
            throw CapExceeded("approval enumeration cap exceeded: m = " + std::to_string(m));
        for (unsigned long v = 0; v < (1ul << m); ++v) {
            std::vector<int> flags(m);
            for (int c = 0; c < m; ++c) flags[c] = (v >> c) & 1;
            out.push_back(Ballot::approval_of(std::move(flags)));
        }
    }
    return out;
}

}  // namespace rollcall
