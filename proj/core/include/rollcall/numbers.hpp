#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace rollcall {

// Weights, prices, budgets and scores are nonnegative integers of arbitrary
// size (the inputs carry them in binary, so fixed-width types would silently
// change the problem).  Nonnegativity is checked at the construction and
// parsing boundaries, not by the type.
using Nat = boost::multiprecision::cpp_int;

inline bool fits_size_t(const Nat& n, std::size_t cap) {
    return n >= 0 && n <= Nat(cap);
}

inline std::size_t to_size_t(const Nat& n) {
    return static_cast<std::size_t>(n);
}

inline std::string to_string(const Nat& n) { return n.str(); }

// Smaller of a Nat and a size_t, as a size_t.
inline std::size_t clamp_count(const Nat& n, std::size_t limit) {
    if (n < 0) return 0;
    if (n > Nat(limit)) return limit;
    return to_size_t(n);
}

}  // namespace rollcall
