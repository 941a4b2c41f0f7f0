#pragma once

#include <stdexcept>
#include <string>

namespace kacpoly {

// Bad input: loops in a quiver, dimension mismatches, violated preconditions,
// oracle search-space caps. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal identity that must hold did not: a non-integral Kac polynomial,
// two methods disagreeing, a negative multiplicity. Always a bug. Exit code 3.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kacpoly
