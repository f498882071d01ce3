#pragma once

#include <stdexcept>
#include <string>

namespace qplane {

/// Caller supplied something outside an operation's domain. CLI exit code 1.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal guarantee was broken (budget overrun, failed self-check). CLI exit code 2.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qplane
