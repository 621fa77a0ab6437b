#pragma once

#include <stdexcept>
#include <string>

namespace qaff {

// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Evaluation of a rational function at a point where its denominator vanishes.
class PoleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// A structured fraction that was expected to clear to a Laurent polynomial
// still carries a denominator binomial. `binomial()` names the leftover factor.
class NotPolynomialError : public AlgebraError {
 public:
  NotPolynomialError(const std::string& binomial)
      : AlgebraError("not polynomial: leftover denominator factor " + binomial),
        binomial_(binomial) {}
  const std::string& binomial() const { return binomial_; }

 private:
  std::string binomial_;
};

// Violated input contract (bad composition, wrong margins, invariance failure).
class PreconditionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace qaff
