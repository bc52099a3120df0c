#ifndef ABCT_ERRORS_HPP
#define ABCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// gcd(x, m) != 1, so no inverse exists in Z/mZ.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// Symbolic parameters violate the residue congruence or the parity rule.
class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

// 3^p does not divide c, so s cannot be derived.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// rad(abc) = 1 would put a zero in the quality denominator.
class DegenerateRadical : public Error {
 public:
  using Error::Error;
};

// Parameter bit-length too small for the compression ratio to be defined.
class DegenerateLength : public Error {
 public:
  using Error::Error;
};

// Residue orbit has zero mean absolute deviation.
class DegenerateSpread : public Error {
 public:
  using Error::Error;
};

// Affine map with gamma + delta != beta cannot preserve a + b = c.
class NonAdditiveMap : public Error {
 public:
  using Error::Error;
};

// Affine image left the positive integers.
class NonPositiveResult : public Error {
 public:
  using Error::Error;
};

}  // namespace abct

#endif  // ABCT_ERRORS_HPP
