#include "nct/exact/quad_int.hpp"

#include "nct/error.hpp"
#include "nct/exact/poly.hpp"

#include <tuple>

namespace nct {

QuadInt::QuadInt(const Integer& value) : a_(value), b_(0), c_(1), d_(2) {}

QuadInt::QuadInt(const Rational& value, const Integer& radicand)
    : a_(value.get_num()), b_(0), c_(value.get_den()), d_(radicand) {
  if (d_ < 2) d_ = 2;
}

QuadInt::QuadInt(Integer a, Integer b, Integer c, Integer radicand) {
  if (c == 0) throw DomainError("quadratic number with zero denominator");
  if (radicand <= 0) throw DomainError("radicand must be positive (real quadratic fields only)");
  const SquareSplit split = split_square(radicand);
  b *= split.square_root;
  if (split.core == 1) {
    a += b;
    b = 0;
    radicand = 2;
  } else {
    radicand = split.core;
  }
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(radicand);
  reduce();
}

QuadInt::QuadInt(Raw, Integer a, Integer b, Integer c, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(radicand)) {
  if (c_ == 0) throw DomainError("quadratic number with zero denominator");
  reduce();
}

void QuadInt::reduce() {
  Integer g = gcd(gcd(a_, b_), c_);
  if (g != 1 && g != 0) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
}

QuadInt QuadInt::sqrt(const Integer& radicand) { return QuadInt(0, 1, 1, radicand); }

Rational QuadInt::to_rational() const {
  if (!is_rational()) throw DomainError("value " + to_string() + " is irrational");
  return make_rational(a_, c_);
}

QuadInt QuadInt::conjugate() const { return QuadInt(Raw{}, a_, -b_, c_, d_); }

Rational QuadInt::trace() const { return make_rational(2 * a_, c_); }

Rational QuadInt::norm() const { return make_rational(a_ * a_ - b_ * b_ * d_, c_ * c_); }

int QuadInt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 D (never equal, D square-free > 1)
  const Integer lhs = a_ * a_;
  const Integer rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

Integer QuadInt::floor() const {
  Integer surd_floor;
  if (b_ == 0) {
    surd_floor = 0;
  } else if (b_ > 0) {
    surd_floor = isqrt(b_ * b_ * d_);
  } else {
    surd_floor = -isqrt(b_ * b_ * d_) - 1;
  }
  Integer q;
  const Integer num = a_ + surd_floor;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), c_.get_mpz_t());
  return q;
}

QuadInt QuadInt::pow(unsigned long exponent) const {
  QuadInt result(Raw{}, 1, 0, 1, d_);
  QuadInt base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

QuadInt QuadInt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  // 1/x = conj(x) / norm(x)
  const Rational n = norm();
  const QuadInt conj = conjugate();
  return QuadInt(Raw{}, conj.a_ * n.get_den(), conj.b_ * n.get_den(), conj.c_ * n.get_num(), d_);
}

bool QuadInt::is_algebraic_integer() const {
  const IntPoly m = minimal_polynomial(*this);
  return m.leading() == 1;
}

QuadInt QuadInt::operator-() const { return QuadInt(Raw{}, -a_, -b_, c_, d_); }

Integer common_radicand(const QuadInt& x, const QuadInt& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) {
    throw DomainError("mixed quadratic fields: sqrt(" + to_string(x.radicand()) + ") and sqrt(" +
                      to_string(y.radicand()) + ")");
  }
  return x.radicand();
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  const Integer d = common_radicand(x, y);
  return QuadInt(QuadInt::Raw{}, x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) { return x + (-y); }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  const Integer d = common_radicand(x, y);
  return QuadInt(QuadInt::Raw{}, x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

QuadInt operator/(const QuadInt& x, const QuadInt& y) {
  common_radicand(x, y);
  return x * y.inverse();
}

bool operator==(const QuadInt& x, const QuadInt& y) {
  if (x.b_ != y.b_) return false;
  if (x.a_ != y.a_ || x.c_ != y.c_) return false;
  return x.b_ == 0 || x.d_ == y.d_;
}

std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
  if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand()) {
    // Different fields: order numerically (values are distinct irrationals
    // unless equal, which cannot happen across square-free radicands).
    const Interval ix = x.enclose(256);
    const Interval iy = y.enclose(256);
    if (ix.hi() < iy.lo()) return std::strong_ordering::less;
    if (iy.hi() < ix.lo()) return std::strong_ordering::greater;
    return std::tie(x.d_, x.a_, x.b_, x.c_) < std::tie(y.d_, y.a_, y.b_, y.c_) ? std::strong_ordering::less
                                                                             : std::strong_ordering::greater;
  }
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Interval QuadInt::enclose(mpfr_prec_t precision) const {
  Interval surd = nct::sqrt(Interval(d_, precision));
  Interval value = Interval(a_, precision) + Interval(b_, precision) * surd;
  return value / Interval(c_, precision);
}

Real QuadInt::to_real(mpfr_prec_t precision) const {
  const mpfr_prec_t work = precision + 32;
  Real surd = nct::sqrt(Real(d_, work));
  Real value = (Real(a_, work) + Real(b_, work) * surd) / Real(c_, work);
  Real out(precision);
  mpfr_set(out.get(), value.get(), MPFR_RNDN);
  return out;
}

double QuadInt::to_double() const { return to_real(64).to_double(); }

std::string QuadInt::to_string() const {
  if (b_ == 0) {
    return c_ == 1 ? a_.get_str() : a_.get_str() + "/" + c_.get_str();
  }
  std::string surd = "sqrt(" + d_.get_str() + ")";
  const Integer mag = abs(b_);
  if (mag != 1) surd = mag.get_str() + "*" + surd;
  std::string numerator;
  if (a_ == 0) {
    numerator = (b_ < 0 ? "-" : "") + surd;
  } else {
    numerator = a_.get_str() + (b_ < 0 ? "-" : "+") + surd;
  }
  if (c_ == 1) return numerator;
  if (a_ == 0) return numerator + "/" + c_.get_str();
  return "(" + numerator + ")/" + c_.get_str();
}

std::string QuadInt::to_grammar() const {
  return "quad:" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str();
}

IntPoly minimal_polynomial(const QuadInt& q) {
  if (q.is_rational()) return IntPoly{-q.a(), q.c()};
  // c^2 x^2 - 2ac x + (a^2 - b^2 D), divided by its content
  Integer c2 = q.c() * q.c();
  Integer c1 = -2 * q.a() * q.c();
  Integer c0 = q.a() * q.a() - q.b() * q.b() * q.radicand();
  const Integer content = gcd(gcd(c2, c1), c0);
  return IntPoly{c0 / content, c1 / content, c2 / content};
}

TraceNorm trace_norm(const QuadInt& q) { return {q.trace(), q.norm()}; }

}  // namespace nct
