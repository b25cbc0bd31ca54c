#pragma once

#include <stdexcept>
#include <string>

namespace tq {

/// Malformed or out-of-domain user input (CLI exit code 4).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedGroupError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GroupMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Mathematical domain violation, e.g. the 2-adic odd part of zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inputs that violate an operation's preconditions: non-invertible
/// cohomology isomorphisms, shape mismatches, d∘d ≠ 0.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tq
