#pragma once

#include <stdexcept>
#include <string>

namespace lawvere {

/// Malformed or inconsistent input: dimension mismatches, invalid sections,
/// violated syntactic preconditions, parse failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem's hypothesis does not hold for the supplied data.
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lawvere
