#pragma once

#include "nct/exact/integer.hpp"
#include "nct/exact/real.hpp"

#include <compare>
#include <string>
#include <utility>

namespace nct {

template <class T>
class Poly;
using IntPoly = Poly<Integer>;

/// Exact element (a + b*sqrt(D)) / c of the real quadratic field Q(sqrt(D)).
///
/// Canonical form: D square-free and > 1, c > 0, gcd(a, b, c) = 1. Rational
/// values have b = 0 and keep whatever D they were created with; D is then
/// ignored by comparisons and adopted from the other operand in arithmetic.
/// Arithmetic between two irrational values of different fields throws
/// DomainError.
class QuadInt {
 public:
  QuadInt() : QuadInt(0) {}
  QuadInt(long value) : QuadInt(Integer(value)) {}  // NOLINT: integers embed
  QuadInt(const Integer& value);                    // NOLINT
  QuadInt(const Rational& value, const Integer& radicand = 2);
  /// Normalizes: pulls square factors out of D, reduces by gcd, makes c > 0.
  /// D <= 0 is rejected; a perfect-square D collapses to a rational value.
  QuadInt(Integer a, Integer b, Integer c, Integer radicand);

  static QuadInt sqrt(const Integer& radicand);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  Rational rational_part() const { return make_rational(a_, c_); }
  Rational surd_coefficient() const { return make_rational(b_, c_); }
  /// Exact value as a Rational; throws DomainError for irrational values.
  Rational to_rational() const;

  QuadInt conjugate() const;
  Rational trace() const;
  Rational norm() const;
  int sign() const;
  Integer floor() const;
  QuadInt pow(unsigned long exponent) const;
  QuadInt inverse() const;
  /// True iff the minimal polynomial is monic with integer coefficients.
  bool is_algebraic_integer() const;

  QuadInt operator-() const;
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator/(const QuadInt& x, const QuadInt& y);
  QuadInt& operator+=(const QuadInt& y) { return *this = *this + y; }
  QuadInt& operator-=(const QuadInt& y) { return *this = *this - y; }
  QuadInt& operator*=(const QuadInt& y) { return *this = *this * y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y);
  friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y);

  Interval enclose(mpfr_prec_t precision) const;
  Real to_real(mpfr_prec_t precision) const;
  double to_double() const;

  /// Human-readable form, e.g. "1+sqrt(2)", "(1+sqrt(5))/2", "-sqrt(2)/2".
  std::string to_string() const;
  /// Shared text grammar form "quad:a,b,c,D".
  std::string to_grammar() const;

 private:
  struct Raw {};
  QuadInt(Raw, Integer a, Integer b, Integer c, Integer radicand);
  void reduce();

  Integer a_;
  Integer b_;
  Integer c_;
  Integer d_;
};

/// Primitive integer polynomial of degree <= 2 vanishing at q, positive
/// leading coefficient; degree 1 iff q is rational.
IntPoly minimal_polynomial(const QuadInt& q);

struct TraceNorm {
  Rational trace;
  Rational norm;
};
TraceNorm trace_norm(const QuadInt& q);

/// Radicand shared by x and y (irrational operands must agree).
Integer common_radicand(const QuadInt& x, const QuadInt& y);

}  // namespace nct
