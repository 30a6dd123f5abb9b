#pragma once

#include "rollcall/errors.hpp"
#include "rollcall/numbers.hpp"

#include <compare>
#include <string>
#include <vector>

namespace rollcall {

using CandidateId = int;

// Candidate names are nonempty byte strings, pairwise distinct within one
// election.  The gadget election system reads them lexicographically, so the
// artifact's candidate order is plain bytewise order on names.
struct Candidates {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    const std::string& name(CandidateId c) const { return names[c]; }
    // -1 when absent.
    CandidateId index_of(const std::string& name) const;
    // lexicographically smallest name
    CandidateId lex_smallest() const;
    void check() const;  // throws DomainError on empty/duplicate names
};

enum class BallotKind { order, approval };

// A voter's expressed preference: either a total order over the candidates
// (most preferred first) or an approval vector.  `slots` holds candidate ids
// for orders and 0/1 flags indexed by candidate id for approvals.
struct Ballot {
    BallotKind kind = BallotKind::order;
    std::vector<int> slots;

    static Ballot order_of(std::vector<int> ids);
    static Ballot approval_of(std::vector<int> flags);

    bool approves(CandidateId c) const { return slots[c] != 0; }
    // position of c in an order ballot (0 = most preferred)
    int rank_of(CandidateId c) const;

    friend auto operator<=>(const Ballot&, const Ballot&) = default;
};

struct Vote {
    std::string voter;
    Ballot ballot;
    Nat weight = 1;
};

enum class GadgetMode { all_win_on_true, all_lose_on_true };

// Winner-determination descriptor: a scoring vector, Approval, or the
// name-sensitive formula-decoding system used by the hardness reductions.
struct Rule {
    enum class Kind { scoring, approval, gadget };
    Kind kind = Kind::scoring;
    std::vector<Nat> alpha;  // scoring only; nonincreasing, nonnegative
    int gadget_k = 0;
    GadgetMode gadget_mode = GadgetMode::all_win_on_true;

    static Rule scoring(std::vector<Nat> alpha);
    static Rule plurality(int m);
    static Rule veto(int m);
    static Rule borda(int m);
    static Rule approval();
    static Rule gadget(int k, GadgetMode mode = GadgetMode::all_win_on_true);

    BallotKind ballot_kind() const {
        return kind == Kind::approval ? BallotKind::approval : BallotKind::order;
    }
    bool is_plurality() const;
    bool is_veto3() const;
    void check(int num_candidates) const;  // throws DomainError
};

// score of each candidate, indexed by candidate id
using ScoreTable = std::vector<Nat>;

struct EnumCaps {
    int max_order_candidates = 6;
    int max_approval_candidates = 12;
};

bool ballot_valid(const Rule& rule, const Candidates& cands, const Ballot& b);
void check_ballot(const Rule& rule, const Candidates& cands, const Ballot& b);

// Weighted scores under a Scoring or Approval rule: a weight-w vote counts as
// w unweighted copies, computed by multiplying rather than expanding.
ScoreTable score_table(const Rule& rule, const Candidates& cands,
                       const std::vector<Vote>& votes);

// All candidates of maximal score for Scoring/Approval (nonempty; with zero
// votes everyone ties at 0).  For the gadget rule delegates to
// gadget_election_eval and may be empty.
std::vector<CandidateId> winner_set(const Rule& rule, const Candidates& cands,
                                    const std::vector<Vote>& votes);

std::vector<CandidateId> winners_of_scores(const ScoreTable& scores);

// The universal player's ballot range: all m! total orders in lexicographic
// permutation order of candidate ids, or all 2^m approval vectors counting up
// in binary (candidate 0 = least significant bit).  Throws CapExceeded past
// the configured cap.
std::vector<Ballot> enumerate_ballots(const Rule& rule, const Candidates& cands,
                                      const EnumCaps& caps = {});

}  // namespace rollcall
