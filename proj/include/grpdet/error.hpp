#pragma once

#include <stdexcept>
#include <string>

namespace grpdet {

/** Raised when an argument violates a documented precondition. */
class value_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/** Raised when an internal cross-check fails; indicates a bug, not bad input. */
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/** Raised on census store / checkpoint problems. */
class storage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace grpdet
