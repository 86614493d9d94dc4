#pragma once

#include "nct/exact/integer.hpp"
#include "nct/exact/real.hpp"
#include "nct/exact/root_of_unity.hpp"

#include <string>
#include <vector>

namespace nct {

/// scale * unit; integral coefficients carry unit = 1.
struct FactorCoefficient {
  Integer scale;
  RootOfUnity unit;

  FactorCoefficient(const Integer& s = 0, const RootOfUnity& u = RootOfUnity::one());
  friend bool operator==(const FactorCoefficient& x, const FactorCoefficient& y) {
    return x.scale == y.scale && x.unit == y.unit;
  }
};

/// Denominator polynomial det(I - L_p z) of a local zeta factor, ascending
/// powers of z, constant term 1.
struct LocalFactor {
  Integer p;
  std::vector<FactorCoefficient> denominator;

  static LocalFactor integral(const Integer& p, const std::vector<Integer>& coefficients);

  std::size_t degree() const { return denominator.empty() ? 0 : denominator.size() - 1; }
  bool is_integral() const;
  /// Throws DomainError when a coefficient is not an integer.
  std::vector<Integer> integer_coefficients() const;
  /// denominator(z) at the precision of z.
  Complex evaluate(const Complex& z) const;
  /// "1 - 6*z + 2*z^2"; root-of-unity coefficients print as "zeta_N^k".
  std::string to_string() const;

  friend bool operator==(const LocalFactor& x, const LocalFactor& y) {
    return x.p == y.p && x.denominator == y.denominator;
  }
};

}  // namespace nct
