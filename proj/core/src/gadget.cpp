#include "rollcall/gadget.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rollcall {

std::vector<char> gadget_decode_bits(const Ballot& order, const Candidates& cands,
                                     CandidateId formula_candidate, int width) {
    // sigma'' = the order with the formula candidate removed
    std::vector<int> seq;
    seq.reserve(order.slots.size());
    for (int c : order.slots)
        if (c != formula_candidate) seq.push_back(c);
    const int n = static_cast<int>(seq.size());
    std::vector<char> bits(width, 0);
    for (int d = 1; d <= width; ++d) {
        // c_j = j-th least preferred = seq[n - j]
        const std::string& first = cands.name(seq[n - (2 * d - 1)]);
        const std::string& second = cands.name(seq[n - 2 * d]);
        bits[d - 1] = first < second ? 0 : 1;
    }
    return bits;
}

std::optional<GadgetFrame> gadget_frame(int k, const Candidates& cands,
                                        const std::vector<std::string>& voter_names) {
    const CandidateId c = cands.lex_smallest();
    auto parsed = tiered_parse(cands.name(c));
    if (!parsed) return std::nullopt;

    GadgetFrame frame;
    frame.formula = std::move(*parsed);
    frame.subscript_one_max = frame.formula.subscript_one_max();
    frame.subscript_two_max = frame.formula.subscript_two_max();

    std::set<std::string> names(voter_names.begin(), voter_names.end());
    // 1. enough distinct voter names
    if (static_cast<int>(names.size()) < frame.subscript_one_max + 1)
        return std::nullopt;
    // 2. the block count matches the system's parameter
    if (frame.subscript_one_max != 2 * k + 1) return std::nullopt;
    // 3. orders long enough to assign a whole block
    if (cands.size() < 1 + 2 * frame.subscript_two_max) return std::nullopt;
    // 4. no block unpopulated
    for (int tier = 1; tier <= frame.subscript_one_max; ++tier)
        if (!frame.formula.tier_populated(tier)) return std::nullopt;
    return frame;
}

std::vector<CandidateId> gadget_election_eval(int k, GadgetMode mode,
                                              const Candidates& cands,
                                              const std::vector<Vote>& votes) {
    const auto everyone = [&] {
        std::vector<CandidateId> all(cands.size());
        for (int i = 0; i < cands.size(); ++i) all[i] = i;
        return all;
    };
    const auto outcome = [&](bool win) {
        if (mode == GadgetMode::all_lose_on_true) win = !win;
        return win ? everyone() : std::vector<CandidateId>{};
    };

    std::vector<std::string> names;
    names.reserve(votes.size());
    for (const auto& v : votes) names.push_back(v.voter);
    auto frame = gadget_frame(k, cands, names);
    if (!frame) return outcome(false);

    // Special list: for each i, among the votes named by the (i+1)-st
    // smallest occurring name, the one with the lexicographically smallest
    // order (orders compared as sequences of candidate names).  The smallest
    // name never contributes.
    std::map<std::string, const Vote*> choice;  // name -> selected vote
    auto name_key = [&](const Ballot& b) {
        std::vector<std::string> key;
        key.reserve(b.slots.size());
        for (int c : b.slots) key.push_back(cands.name(c));
        return key;
    };
    for (const auto& v : votes) {
        auto [it, fresh] = choice.try_emplace(v.voter, &v);
        if (!fresh && name_key(v.ballot) < name_key(it->second->ballot))
            it->second = &v;
    }

    const CandidateId c = cands.lex_smallest();
    std::vector<char> assignment(frame->formula.vars.size(), 0);
    auto it = choice.begin();
    ++it;  // skip the smallest name
    for (int tier = 1; tier <= frame->subscript_one_max; ++tier, ++it) {
        auto bits = gadget_decode_bits(it->second->ballot, cands, c,
                                       frame->subscript_two_max);
        for (std::size_t id = 0; id < frame->formula.vars.size(); ++id)
            if (frame->formula.vars[id].first == tier)
                assignment[id] = bits[frame->formula.vars[id].second - 1];
    }
    return outcome(frame->formula.matrix.eval(assignment));
}

}  // namespace rollcall
