// Typed domain errors.  Precondition failures are reported as exceptions
// carrying a machine-checkable code, never as silent booleans: callers need
// to distinguish "false" from "the question was malformed" (e.g. a weight
// outside the root-lattice coset, or a non-dominant input).

#pragma once

#include <stdexcept>
#include <string>

namespace orthocompact {

enum class Errc {
  NotDominant,      // a weight required to be dominant is not
  NotBelow,         // mu is not <= lambda (includes spin-coset differences)
  NotInRootCoset,   // difference of weights lies outside the root lattice
  NotIntegral,      // a root-lattice vector has a half-integral entry
  NotNonNegative,   // a vector required to lie in N-Delta has a negative entry
  NotAdjoint,       // weights of a simple subset lie in different cosets
  NoUniqueMax,      // zero or several dominance-maximal elements
  SupportMismatch,  // morphism question between different supports
  NotInXi,          // vector outside the semigroup Xi(lambda)
  OutOfRange,       // rank, index or argument outside its documented range
  BadFormat,        // unparsable text or JSON input
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        d_code(code) {}

  Errc code() const { return d_code; }

private:
  Errc d_code;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace orthocompact
