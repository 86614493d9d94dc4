#pragma once

#include "nct/exact/integer.hpp"

#include <mpfr.h>

#include <string>

namespace nct {

/// Owning MPFR value with an explicit precision. Operations take the rounding
/// mode explicitly; the default is round-to-nearest-even.
class Real {
 public:
  explicit Real(mpfr_prec_t precision = 128);
  Real(const Integer& value, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Rational& value, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(double value, mpfr_prec_t precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  static Real add(const Real& x, const Real& y, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real sub(const Real& x, const Real& y, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real mul(const Real& x, const Real& y, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real div(const Real& x, const Real& y, mpfr_rnd_t rnd = MPFR_RNDN);

  Real operator-() const;
  friend Real operator+(const Real& x, const Real& y) { return add(x, y); }
  friend Real operator-(const Real& x, const Real& y) { return sub(x, y); }
  friend Real operator*(const Real& x, const Real& y) { return mul(x, y); }
  friend Real operator/(const Real& x, const Real& y) { return div(x, y); }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// floor as an exact integer; the value must be finite.
  Integer floor() const;
  Real abs() const;

  friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.value_, y.value_) != 0; }
  friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.value_, y.value_) != 0; }
  friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.value_, y.value_) != 0; }
  friend bool operator>=(const Real& x, const Real& y) { return mpfr_greaterequal_p(x.value_, y.value_) != 0; }
  friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.value_, y.value_) != 0; }

  /// Exactly `digits` significant decimal digits, round-half-even on the
  /// binary value; fixed notation for moderate exponents, otherwise
  /// scientific ("1.2345e-30").
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

Real sqrt(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real log(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real exp(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real cos(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real sin(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real tanh(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
Real pi(mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
/// x^(1/k) for x >= 0.
Real root(const Real& x, unsigned long k, mpfr_rnd_t rnd = MPFR_RNDN);

/// Closed interval [lo, hi] with outward-rounded arithmetic.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision = 128);
  Interval(const Integer& value, mpfr_prec_t precision);
  Interval(const Rational& value, mpfr_prec_t precision);
  Interval(Real lo, Real hi);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }
  Real mid() const;
  Real width() const;
  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const Interval& other) const { return !(hi_ < other.lo_ || other.hi_ < lo_); }
  /// Returns the common floor if every point of the interval has it.
  bool certain_floor(Integer& out) const;

  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  /// Throws DomainError when the divisor contains zero.
  friend Interval operator/(const Interval& x, const Interval& y);
  Interval operator-() const;

 private:
  Real lo_;
  Real hi_;
};

Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval root(const Interval& x, unsigned long k);

/// Minimal complex number over Real; enough for Euler products and roots of
/// unity. All operations round to nearest.
struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t precision = 128) : re(precision), im(precision) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
  friend Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
  friend Complex operator*(const Complex& x, const Complex& y);
  friend Complex operator/(const Complex& x, const Complex& y);
  Complex conj() const { return {re, -im}; }
  Real abs() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex complex_one(mpfr_prec_t precision);
/// exp(i * angle)
Complex unit_complex(const Real& angle);
/// p^(-s) for a positive integer p.
Complex inverse_power(const Integer& p, const Complex& s);

}  // namespace nct
