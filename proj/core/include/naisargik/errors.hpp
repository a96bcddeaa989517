#pragma once

#include <stdexcept>
#include <string>

namespace naisargik {

/// Input outside an operation's mathematical domain (bad symbol, odd length, s > n, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Caller asked for something that does not exist (unknown map name, bad table id).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or sphere computation would exceed the configured guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would not fit the fixed-width fast path.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace naisargik
