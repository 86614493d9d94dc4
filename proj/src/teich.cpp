#include "nct/teich.hpp"

#include "nct/cfrac.hpp"
#include "nct/error.hpp"

namespace nct {

namespace {

void require_2x2(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
}

void require_normalized_shape(const IntMatrix& m) {
  require_2x2(m);
  if (m(1, 0) != -1 || m(1, 1) != 0) throw DomainError("expected a matrix of shape (t, n; -1, 0), got " + to_string(m));
}

}  // namespace

EndoMatrix functor_on_endo(const EndoMatrix& e) {
  if (e.side != EndoSide::Complex) throw DomainError("functor expects a complex-side endomorphism");
  require_2x2(e.m);
  if (det(e.m) == 0) throw DomainError("endomorphism has zero determinant");
  IntMatrix out = e.m;
  out(1, 0) = -out(1, 0);
  out(1, 1) = -out(1, 1);
  return {out, EndoSide::Real};
}

QuadInt real_quadratic_from_normalized(const IntMatrix& m) {
  require_normalized_shape(m);
  const Integer& t = m(0, 0);
  const Integer& n = m(0, 1);
  const Integer disc = t * t - 4 * n;
  if (disc <= 0) throw DomainError("x^2 - " + to_string(t) + "x + " + to_string(n) + " has no distinct real roots");
  if (is_square(disc)) throw DomainError("roots of x^2 - tx + n are rational; not a real quadratic number");
  if (t == 0) throw DomainError("roots have equal absolute value");
  return QuadInt(t, t > 0 ? 1 : -1, 2, disc);
}

IntMatrix unit_projection(const IntMatrix& m) {
  require_normalized_shape(m);
  if (m(0, 1) == 0) throw DomainError("unit projection needs n != 0");
  return IntMatrix{{m(0, 0), Integer(1)}, {Integer(-1), Integer(0)}};
}

ProjectionSides projection_sides(const Integer& t, const Integer& n, const QuadInt& theta) {
  const auto apply = [](const IntMatrix& m, const QuadInt& x0, const QuadInt& x1) {
    return std::array<QuadInt, 2>{QuadInt(m(0, 0)) * x0 + QuadInt(m(0, 1)) * x1,
                                  QuadInt(m(1, 0)) * x0 + QuadInt(m(1, 1)) * x1};
  };
  const IntMatrix full{{t, n}, {Integer(-1), Integer(0)}};
  const IntMatrix unit{{t, Integer(1)}, {Integer(-1), Integer(0)}};
  return {apply(full, QuadInt(1), theta), apply(unit, QuadInt(1), QuadInt(n) * theta)};
}

UnitIndexData unit_index(const QuadInt& theta, const Integer& n) {
  if (n < 1) throw DomainError("unit index needs n >= 1");
  const UnitData unit = fundamental_unit(theta);
  const IntMatrix m = multiplication_matrix(unit.epsilon, theta);
  Integer a = 1;
  Integer b = 0;
  const Integer cap = 6 * n;
  for (unsigned long g = 1; g <= cap; ++g) {
    const Integer na = (a * m(0, 0) + b * m(1, 0)) % n;
    const Integer nb = (a * m(0, 1) + b * m(1, 1)) % n;
    a = na;
    b = nb;
    if (b == 0) return {unit.epsilon, n, g, unit.epsilon.pow(g)};
  }
  throw InternalError("unit index exceeded 6n for n = " + to_string(n));
}

}  // namespace nct
