#pragma once

#include <stdexcept>
#include <string>

namespace rollcall {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed ballots, duplicate names, bad scoring vectors and the like.
struct DomainError : Error {
    using Error::Error;
};

// An OBS whose shape or spending history contradicts its variant.
struct IllegalInstance : Error {
    enum class Reason { overspent_budget, over_bribe_cap, malformed };
    Reason reason;
    IllegalInstance(Reason r, const std::string& what) : Error(what), reason(r) {}
};

// A decider was handed a rule outside its contract.
struct WrongRule : Error {
    using Error::Error;
};

// A decider was handed a variant outside its contract (e.g. the weighted
// scoring DP).
struct WrongVariant : Error {
    using Error::Error;
};

// Enumeration or table-size limits exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

// Structured-text errors carry the path of the offending field.
struct ParseError : Error {
    std::string path;
    ParseError(std::string p, const std::string& what)
        : Error(p.empty() ? what : p + ": " + what), path(std::move(p)) {}
};

struct MalformedQbf : Error {
    using Error::Error;
};

}  // namespace rollcall
