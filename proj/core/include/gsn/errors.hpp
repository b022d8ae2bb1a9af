#pragma once

#include <stdexcept>
#include <string>

namespace gsn {

/// Malformed textual input (rationals, polynomials, flag values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial does not fit the requested basis size.
class DegreeOverflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request exceeds the configured cap on rp + sigma.
class DegreeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gsn
