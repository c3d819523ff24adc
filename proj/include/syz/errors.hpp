#ifndef SYZ_ERRORS_HPP
#define SYZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syz {

/// Malformed or out-of-contract input (maps to CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two independent computations disagreed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A computation would exceed its configured size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace syz

#endif
