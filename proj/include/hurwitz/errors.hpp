#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Every failure surfaced by the library derives from Error.  The CLI maps the
// concrete type onto an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied instance violates an operation's precondition
// (degree mismatch, s out of range, r out of range, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The instance lies in the family excluded from the bound chain
// ({lambda, mu} inside {(2k), (k,k)}) or has r <= 0.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// The configured node budget was exhausted; the count is absent, never
// approximate.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Internal consistency check failed: an unclassifiable vertex, a colouring
// that should exist but does not, a construction that produced an invalid
// cover.  Seeing one of these means a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

// mult^R evaluated to a non-integer.
class NonIntegralError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hurwitz
