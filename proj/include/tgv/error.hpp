#pragma once

#include <stdexcept>
#include <string>

namespace tgv {

/// An argument lies outside the mathematical domain of an operation
/// (e.g. asking for the primes up to 1, or a class of Alt_n with an odd type).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A caller-side precondition does not hold (e.g. an inexact division).
class precondition_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A request exceeds one of the enumeration guards.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tgv
