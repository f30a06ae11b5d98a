#pragma once

#include <stdexcept>
#include <string>

namespace nccr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input: non-monotone weights, rank mismatch,
// diagrams that do not fit the box an operation needs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Certification operations refuse contexts with gcd(n, k) != 1.
class NonCoprimeContext : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but the operation is not defined on it
// ("already projective", "no witness exists").
class DomainError : public Error {
 public:
  using Error::Error;
};

class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nccr
