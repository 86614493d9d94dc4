#pragma once

#include "nct/error.hpp"
#include "nct/exact/integer.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace nct {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }
  explicit Poly(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  explicit Poly(int constant) : c_{T(constant)} { trim(); }

  static Poly constant(const T& value) { return Poly(std::vector<T>{value}); }
  static Poly monomial(const T& value, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = value;
    return Poly(std::move(c));
  }

  const std::vector<T>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  friend Poly operator+(const Poly& x, const Poly& y) {
    std::vector<T> out(std::max(x.c_.size(), y.c_.size()), T(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) out[i] += x.c_[i];
    for (std::size_t i = 0; i < y.c_.size(); ++i) out[i] += y.c_[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  Poly& operator-=(const Poly& y) { return *this = *this - y; }
  Poly operator-() const {
    std::vector<T> out(c_);
    for (auto& v : out) v = -v;
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<T> out(x.c_.size() + y.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const T& s, const Poly& x) {
    std::vector<T> out(x.c_);
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  /// Horner evaluation in any ring that accepts T coefficients.
  template <class U>
  U evaluate(const U& x) const {
    U acc = U(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  /// Coefficients in reverse order: z^deg * p(1/z) for a polynomial of the
  /// given nominal degree.
  Poly reversed(std::size_t nominal_degree) const {
    std::vector<T> out(nominal_degree + 1, T(0));
    for (std::size_t i = 0; i < c_.size() && i <= nominal_degree; ++i) out[nominal_degree - i] = c_[i];
    return Poly(std::move(out));
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const T& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      const bool negative = v < 0;
      const T mag = negative ? T(-v) : v;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (i == 0 || mag != 1) {
        os << mag;
        if (i > 0) os << "*";
      }
      if (i > 0) os << var;
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

struct RatPolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};

inline RatPolyDivision divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const long dd = den.degree();
  if (num.degree() < dd) return {RatPoly{}, num};
  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  for (long k = num.degree(); k >= dd; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / den.leading();
    quo[static_cast<std::size_t>(k - dd)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * den[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

/// Scales a nonzero polynomial to leading coefficient 1.
inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading()) * p;
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

}  // namespace nct
