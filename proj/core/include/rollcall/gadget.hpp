#pragma once

#include "rollcall/election.hpp"
#include "rollcall/tiered.hpp"

#include <optional>
#include <vector>

namespace rollcall {

// The artificial election system parameterized by k.  The lexicographically
// smallest candidate name is read as a tiered formula; votes assign its
// variables block by block through the special list; the outcome is all-win
// or all-lose.  Total function: every malformed case is a defined outcome.
//
// With mode all_win_on_true a true formula makes everyone win (the
// constructive construction); all_lose_on_true swaps every win/lose outcome,
// including the malformed ones.
std::vector<CandidateId> gadget_election_eval(int k, GadgetMode mode,
                                              const Candidates& cands,
                                              const std::vector<Vote>& votes);

// The vote-to-assignment coding: drop the formula candidate from the order,
// then read the `width` pairs of least preferred candidates bottom-up; bit d
// is 0 when the name of the (2d-1)-th least preferred of the pair order is
// lexicographically below its partner, 1 otherwise.  Exposed for tests and
// strategy tracing.
std::vector<char> gadget_decode_bits(const Ballot& order, const Candidates& cands,
                                     CandidateId formula_candidate, int width);

// Static part of the gadget evaluation: parse plus every legality condition
// that does not depend on ballots.  nullopt = everyone loses before any vote
// is read (in the all_win_on_true orientation).
struct GadgetFrame {
    TieredFormula formula;
    // voter position (index into the name-sorted distinct-name list, skipping
    // the smallest) feeding each tier 1..subscript_one_max
    int subscript_one_max = 0;
    int subscript_two_max = 0;
};
std::optional<GadgetFrame> gadget_frame(int k, const Candidates& cands,
                                        const std::vector<std::string>& voter_names);

}  // namespace rollcall
