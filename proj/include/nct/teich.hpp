#pragma once

#include "nct/exact/quad_int.hpp"
#include "nct/zlinalg/matrix.hpp"

#include <array>

namespace nct {

enum class EndoSide { Complex, Real };

/// 2x2 endomorphism matrix tagged with the side it lives on.
struct EndoMatrix {
  IntMatrix m;
  EndoSide side = EndoSide::Complex;
};

/// (a, b; c, d) on the complex side maps to (a, b; -c, -d) on the real side.
EndoMatrix functor_on_endo(const EndoMatrix& e);

/// Root of x^2 - t x + n of larger absolute value, for m = (t, n; -1, 0).
/// Throws DomainError unless the roots are real, irrational and of distinct
/// absolute value.
QuadInt real_quadratic_from_normalized(const IntMatrix& m);

/// (t, n; -1, 0) -> (t, 1; -1, 0); n must be nonzero.
IntMatrix unit_projection(const IntMatrix& m);

/// Both sides of (t, n; -1, 0)(1, theta)^T = (t, 1; -1, 0)(1, n theta)^T.
struct ProjectionSides {
  std::array<QuadInt, 2> lhs;
  std::array<QuadInt, 2> rhs;
};
ProjectionSides projection_sides(const Integer& t, const Integer& n, const QuadInt& theta);

struct UnitIndexData {
  QuadInt epsilon;
  Integer n;
  unsigned long g = 1;
  QuadInt power;  // epsilon^g = a + b theta with n | b
};

/// Least g >= 1 with epsilon^g in Z + (n theta) Z, where epsilon is the
/// fundamental unit attached to theta.
UnitIndexData unit_index(const QuadInt& theta, const Integer& n);

}  // namespace nct
