#ifndef PARHIGGS_ERRORS_HPP
#define PARHIGGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parhiggs {

// Error taxonomy shared by the whole library. Every exception carries a stable
// machine-readable code alongside the human message; the CLI maps the class to
// its exit code (usage 2, non-generic 3, consistency 4).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid caller input: malformed rationals, weights outside (0,1/2),
// out-of-domain genus/points, insufficient stability data.
class UsageError : public Error {
public:
    using Error::Error;
};

// Weights sit on a wall (or a segment hits a codimension-2 locus); the request
// is only defined for generic weights. Carries the offending wall label when
// there is one.
class NonGenericError : public Error {
public:
    using Error::Error;
};

// Internal self-consistency tripwire: a checked division left a remainder, a
// verified identity failed, or a derived polynomial broke an invariant. These
// indicate a defect, never bad user input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace parhiggs

#endif
