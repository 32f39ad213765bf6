#pragma once

#include <stdexcept>
#include <string>

namespace dlat {

// Malformed input: bad ids, invalid shapes, wrong popcount, cycles in a cover relation.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A lattice operation was asked of something that is not a lattice (or not balanced, etc).
class NotALattice : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Internal consistency assertion that failed at runtime.
class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mountain/valley rewriting met x_{j-1} == x_{j+1}; no diamond completion is defined there.
class DegeneratePath : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace dlat
