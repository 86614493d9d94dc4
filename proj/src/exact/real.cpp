#include "nct/exact/real.hpp"

#include "nct/error.hpp"

#include <algorithm>
#include <utility>

namespace nct {

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Integer& value, mpfr_prec_t precision, mpfr_rnd_t rnd) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

Real::Real(const Rational& value, mpfr_prec_t precision, mpfr_rnd_t rnd) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

Real::Real(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {
mpfr_prec_t joint(const Real& x, const Real& y) { return std::max(x.precision(), y.precision()); }
}  // namespace

Real Real::add(const Real& x, const Real& y, mpfr_rnd_t rnd) {
  Real r(joint(x, y));
  mpfr_add(r.value_, x.value_, y.value_, rnd);
  return r;
}

Real Real::sub(const Real& x, const Real& y, mpfr_rnd_t rnd) {
  Real r(joint(x, y));
  mpfr_sub(r.value_, x.value_, y.value_, rnd);
  return r;
}

Real Real::mul(const Real& x, const Real& y, mpfr_rnd_t rnd) {
  Real r(joint(x, y));
  mpfr_mul(r.value_, x.value_, y.value_, rnd);
  return r;
}

Real Real::div(const Real& x, const Real& y, mpfr_rnd_t rnd) {
  Real r(joint(x, y));
  mpfr_div(r.value_, x.value_, y.value_, rnd);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Integer Real::floor() const {
  if (!mpfr_number_p(value_)) throw DomainError("floor of a non-finite value");
  Integer out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) {
    return digits > 1 ? "0." + std::string(static_cast<std::size_t>(digits - 1), '0') : "0";
  }
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exponent
  const long e = static_cast<long>(exponent);
  std::string body;
  if (e > 0 && e <= 21) {
    if (static_cast<std::size_t>(e) >= mantissa.size()) {
      body = mantissa + std::string(static_cast<std::size_t>(e) - mantissa.size(), '0');
    } else {
      body = mantissa.substr(0, static_cast<std::size_t>(e)) + "." + mantissa.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    body = "0." + std::string(static_cast<std::size_t>(-e), '0') + mantissa;
  } else {
    body = mantissa.substr(0, 1);
    if (mantissa.size() > 1) body += "." + mantissa.substr(1);
    body += "e" + std::to_string(e - 1);
  }
  return sign + body;
}

Real sqrt(const Real& x, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), rnd);
  return r;
}

Real log(const Real& x, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), rnd);
  return r;
}

Real exp(const Real& x, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), rnd);
  return r;
}

Real cos(const Real& x, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_cos(r.get(), x.get(), rnd);
  return r;
}

Real sin(const Real& x, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_sin(r.get(), x.get(), rnd);
  return r;
}

Real tanh(const Real& x, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_tanh(r.get(), x.get(), rnd);
  return r;
}

Real pi(mpfr_prec_t precision, mpfr_rnd_t rnd) {
  Real r(precision);
  mpfr_const_pi(r.get(), rnd);
  return r;
}

Real root(const Real& x, unsigned long k, mpfr_rnd_t rnd) {
  Real r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, rnd);
  return r;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval::Interval(const Integer& value, mpfr_prec_t precision)
    : lo_(value, precision, MPFR_RNDD), hi_(value, precision, MPFR_RNDU) {}

Interval::Interval(const Rational& value, mpfr_prec_t precision)
    : lo_(value, precision, MPFR_RNDD), hi_(value, precision, MPFR_RNDU) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InternalError("interval with lo > hi");
}

Real Interval::mid() const {
  Real sum = Real::add(lo_, hi_);
  Real r(sum.precision());
  mpfr_div_2ui(r.get(), sum.get(), 1, MPFR_RNDN);
  return r;
}

Real Interval::width() const { return Real::sub(hi_, lo_, MPFR_RNDU); }

bool Interval::certain_floor(Integer& out) const {
  const Integer a = lo_.floor();
  const Integer b = hi_.floor();
  if (a != b) return false;
  out = a;
  return true;
}

Interval operator+(const Interval& x, const Interval& y) {
  return {Real::add(x.lo_, y.lo_, MPFR_RNDD), Real::add(x.hi_, y.hi_, MPFR_RNDU)};
}

Interval operator-(const Interval& x, const Interval& y) {
  return {Real::sub(x.lo_, y.hi_, MPFR_RNDD), Real::sub(x.hi_, y.lo_, MPFR_RNDU)};
}

Interval Interval::operator-() const { return {-hi_, -lo_}; }

Interval operator*(const Interval& x, const Interval& y) {
  const Real* xs[2] = {&x.lo_, &x.hi_};
  const Real* ys[2] = {&y.lo_, &y.hi_};
  Real lo = Real::mul(*xs[0], *ys[0], MPFR_RNDD);
  Real hi = Real::mul(*xs[0], *ys[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Real l = Real::mul(*xs[i], *ys[j], MPFR_RNDD);
      Real h = Real::mul(*xs[i], *ys[j], MPFR_RNDU);
      if (l < lo) lo = std::move(l);
      if (h > hi) hi = std::move(h);
    }
  }
  return {std::move(lo), std::move(hi)};
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const Real* xs[2] = {&x.lo_, &x.hi_};
  const Real* ys[2] = {&y.lo_, &y.hi_};
  Real lo = Real::div(*xs[0], *ys[0], MPFR_RNDD);
  Real hi = Real::div(*xs[0], *ys[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Real l = Real::div(*xs[i], *ys[j], MPFR_RNDD);
      Real h = Real::div(*xs[i], *ys[j], MPFR_RNDU);
      if (l < lo) lo = std::move(l);
      if (h > hi) hi = std::move(h);
    }
  }
  return {std::move(lo), std::move(hi)};
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) throw DomainError("interval sqrt of a possibly negative value");
  return {sqrt(x.lo(), MPFR_RNDD), sqrt(x.hi(), MPFR_RNDU)};
}

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) throw DomainError("interval log of a possibly non-positive value");
  return {log(x.lo(), MPFR_RNDD), log(x.hi(), MPFR_RNDU)};
}

Interval exp(const Interval& x) { return {exp(x.lo(), MPFR_RNDD), exp(x.hi(), MPFR_RNDU)}; }

Interval root(const Interval& x, unsigned long k) {
  if (x.lo().sign() < 0) throw DomainError("interval root of a possibly negative value");
  return {root(x.lo(), k, MPFR_RNDD), root(x.hi(), k, MPFR_RNDU)};
}

// ----------------------------------------------------------------- Complex

Complex operator*(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Complex operator/(const Complex& x, const Complex& y) {
  const Real denom = y.re * y.re + y.im * y.im;
  if (denom.is_zero()) throw DomainError("complex division by zero");
  return {(x.re * y.re + x.im * y.im) / denom, (x.im * y.re - x.re * y.im) / denom};
}

Real Complex::abs() const {
  Real r(precision());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

Complex complex_one(mpfr_prec_t precision) { return {Real(Integer(1), precision), Real(precision)}; }

Complex unit_complex(const Real& angle) {
  Real c(angle.precision());
  Real s(angle.precision());
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

Complex inverse_power(const Integer& p, const Complex& s) {
  const mpfr_prec_t prec = s.precision();
  if (s.im.is_zero()) {
    // Real exponent: p^(-s) directly keeps exact powers exact (s = 2 gives 1/p^2).
    Real r(prec);
    Real base(p, prec);
    mpfr_pow(r.get(), base.get(), (-s.re).get(), MPFR_RNDN);
    return {std::move(r), Real(prec)};
  }
  const Real logp = log(Real(p, prec));
  const Real magnitude = exp(-(s.re * logp));
  Complex phase = unit_complex(-(s.im * logp));
  return {magnitude * phase.re, magnitude * phase.im};
}

}  // namespace nct
