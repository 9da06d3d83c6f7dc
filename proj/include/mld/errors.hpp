#ifndef MLD_ERRORS_HPP
#define MLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mld {

// Malformed input: bad polynomial text, bad support set, arity mismatch.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke a documented precondition (e.g. handed the integer
// minimizer an objective that is unbounded below).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Requested enumeration exceeds the configured ceiling.
class EnumerationLimitError : public std::runtime_error {
public:
    explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mld

#endif
