#pragma once

#include "nct/exact/integer.hpp"
#include "nct/exact/real.hpp"

#include <string>

namespace nct {

/// exp(2 pi i k / N), stored as the exact exponent pair (N, k) with 0 <= k < N.
/// Equality compares values, so (4, 1) == (8, 2).
class RootOfUnity {
 public:
  RootOfUnity() : RootOfUnity(1, 0) {}
  RootOfUnity(const Integer& order, const Integer& exponent);

  static RootOfUnity one() { return {1, 0}; }
  static RootOfUnity minus_one() { return {2, 1}; }

  const Integer& order() const { return n_; }
  const Integer& exponent() const { return k_; }

  /// Same value with gcd(k, N) = 1 (N = 1 for the value 1).
  RootOfUnity reduced() const;
  RootOfUnity pow(const Integer& e) const;
  RootOfUnity conj() const { return {n_, -k_}; }
  /// +1 or -1 when the value is real, 0 otherwise.
  int real_sign() const;

  friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y);
  friend bool operator==(const RootOfUnity& x, const RootOfUnity& y);

  std::string to_string() const;

 private:
  Integer n_;
  Integer k_;
};

struct ComplexApprox {
  Complex value;
  /// Rigorous bound on |value - exact|.
  Real error_bound;
};

/// exp(2 pi i k / N) with absolute error < 2^-precision. Values on the
/// coordinate axes (reduced order 1, 2 or 4) are exact.
ComplexApprox root_of_unity_value(const RootOfUnity& z, mpfr_prec_t precision);

}  // namespace nct
