#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

/// Malformed or inconsistent input (bad ids, dangling references, bad JSON).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (e.g. a graph with a
/// separating edge where a bridge-free graph is required).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured enumeration cap was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration caps shared by the exponential routines.
struct Limits {
    int max_edges = 16;
    long max_orbit = 100000;
    long max_fiber = 10000;
};

}  // namespace torelli
