#pragma once

#include "rollcall/obs.hpp"

#include <string>
#include <string_view>

namespace rollcall {

// JSON instance documents.  Top-level keys: variant {mode, priced, weighted,
// bribe_cap?, k?}, rule {kind, alpha? | gadget_k?, gadget_mode?}, candidates,
// sigma, d, past, current, future.  Ballots are candidate-name arrays
// (orders) or 0/1 arrays (approval).  Weights, prices, k and alpha entries
// are decimal; values beyond 64 bits travel as decimal strings.
//
// parse_instance errors carry the path of the offending field and the parsed
// instance is validated before it is returned.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst, int indent = 2);

// FNV-1a of the canonical serialization; used to key cross-check reports.
std::string instance_digest(const Instance& inst);

}  // namespace rollcall
