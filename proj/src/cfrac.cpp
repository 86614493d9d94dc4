#include "nct/cfrac.hpp"

#include "nct/error.hpp"

#include <array>
#include <cmath>
#include <map>

namespace nct {

namespace {

void require_irrational(const QuadInt& theta) {
  if (theta.is_rational()) throw DomainError("expected an irrational quadratic number, got " + theta.to_string());
}

// Coordinates (x, y) with beta = x + y*theta, both integral, else nullopt.
std::optional<std::array<Integer, 2>> coordinates(const QuadInt& beta, const QuadInt& theta) {
  const Rational y = beta.surd_coefficient() / theta.surd_coefficient();
  const Rational x = beta.rational_part() - y * theta.rational_part();
  if (x.get_den() != 1 || y.get_den() != 1) return std::nullopt;
  return std::array<Integer, 2>{x.get_num(), y.get_num()};
}

}  // namespace

CfExpansion cf_expand(const QuadInt& theta) {
  require_irrational(theta);
  std::map<std::array<Integer, 3>, std::size_t> seen;
  std::vector<Integer> digits;
  QuadInt x = theta;
  for (;;) {
    const std::array<Integer, 3> key{x.a(), x.b(), x.c()};
    const auto it = seen.find(key);
    if (it != seen.end()) {
      CfExpansion out;
      out.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
      out.period.assign(digits.begin() + static_cast<long>(it->second), digits.end());
      return out;
    }
    seen.emplace(key, digits.size());
    const Integer a = x.floor();
    digits.push_back(a);
    x = (x - QuadInt(a)).inverse();
  }
}

IntMatrix cf_digit_matrix(const Integer& digit) { return IntMatrix{{digit, Integer(1)}, {Integer(1), Integer(0)}}; }

QuadInt cf_value(const CfExpansion& cf) {
  if (cf.period.empty()) throw DomainError("continued fraction has an empty period");
  IntMatrix p = IntMatrix::identity(2);
  for (const auto& a : cf.period) p = p * cf_digit_matrix(a);
  // y = (p00 y + p01) / (p10 y + p11), the root > 1.
  // q y^2 + lin y - p01 = 0, made primitive so the discriminant stays small.
  const Integer g = gcd(gcd(p(1, 0), p(1, 1) - p(0, 0)), p(0, 1));
  const Integer q = p(1, 0) / g;
  const Integer lin = (p(1, 1) - p(0, 0)) / g;
  const Integer disc = lin * lin + 4 * q * (p(0, 1) / g);
  QuadInt x(-lin, 1, 2 * q, disc);
  for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) x = QuadInt(*it) + x.inverse();
  return x;
}

UnitData fundamental_unit(const QuadInt& theta) {
  require_irrational(theta);
  UnitData out;
  out.theta_polynomial = minimal_polynomial(theta);
  const Integer& qa = out.theta_polynomial[2];
  const Integer& qb = out.theta_polynomial[1];
  const Integer& qc = out.theta_polynomial[0];
  out.discriminant = qb * qb - 4 * qa * qc;

  const CfExpansion cf = cf_expand(theta);
  IntMatrix p = IntMatrix::identity(2);
  for (const auto& a : cf.period) p = p * cf_digit_matrix(a);
  const Integer t = p.trace();
  const Integer n = det(p);
  const Integer disc = t * t - 4 * n;
  if (disc % out.discriminant != 0 || !is_square(disc / out.discriminant)) {
    throw InternalError("period matrix eigenvalue outside the multiplier ring of " + theta.to_string());
  }
  out.epsilon = QuadInt(t, 1, 2, disc);

  const Integer& core = out.epsilon.radicand();
  const Integer field_disc = core % 4 == 1 ? core : 4 * core;
  out.order_index = isqrt(out.discriminant / field_disc);
  if (out.order_index * out.order_index * field_disc != out.discriminant) {
    throw InternalError("discriminant is not a square multiple of the field discriminant");
  }
  return out;
}

IntMatrix multiplication_matrix(const QuadInt& alpha, const QuadInt& theta) {
  require_irrational(theta);
  common_radicand(alpha, theta);
  const auto r0 = coordinates(alpha, theta);
  const auto r1 = coordinates(alpha * theta, theta);
  if (!r0 || !r1) throw DomainError(alpha.to_string() + " does not preserve Z + Z*" + theta.to_string());
  return IntMatrix{{(*r0)[0], (*r0)[1]}, {(*r1)[0], (*r1)[1]}};
}

UnitMatrix unit_matrix_for_theta(const QuadInt& theta) {
  require_irrational(theta);
  if (theta.sign() <= 0) throw DomainError("theta must be positive, got " + theta.to_string());
  if (theta.conjugate().sign() > 0) {
    throw DomainError("theta and its conjugate are both positive; no power of the unit has a positive matrix");
  }
  UnitMatrix out;
  out.unit = fundamental_unit(theta);
  const IntMatrix step = multiplication_matrix(out.unit.epsilon, theta);
  IntMatrix a = step;
  constexpr unsigned long kMaxPower = 4096;
  for (unsigned long m = 1; m <= kMaxPower; ++m, a = a * step) {
    bool positive = true;
    for (const auto& v : a.entries()) positive = positive && v >= 1;
    if (!positive) continue;
    out.matrix = a;
    out.power = m;
    out.lambda = out.unit.epsilon.pow(m);
    if (positive_matrix_root(a)) throw InternalError("minimal positive unit matrix is a proper power");
    return out;
  }
  throw DomainError("no unit power up to 4096 gives a positive matrix");
}

std::optional<MatrixRoot> positive_matrix_root(const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DomainError("matrix roots are implemented for 2x2 matrices only");
  const Integer t = a.trace();
  const Integer n = det(a);
  const Integer disc = t * t - 4 * n;
  if (t < 4 || disc <= 0 || is_square(disc)) return std::nullopt;
  const QuadInt lambda(t, 1, 2, disc);
  const QuadInt spread = lambda - lambda.conjugate();
  const Real lambda_real = lambda.to_real(256);
  const unsigned long kmax = mpz_sizeinbase(t.get_mpz_t(), 2) - 1;  // floor(log2 t)
  for (unsigned long k = 2; k <= kmax; ++k) {
    for (int nb : {1, -1}) {
      const bool odd = (k % 2) == 1;
      const Integer nk = (nb == -1 && odd) ? Integer(-1) : Integer(1);
      if (nk != n) continue;
      const Real mu = root(lambda_real, k);
      const Real s = mu + Real(Integer(nb), 256) / mu;
      const Integer ts = (s + Real(Rational(1, 2), 256)).floor();
      const double gap = (s - Real(ts, 256)).to_double();
      if (std::fabs(gap) > 1e-30) continue;
      const Integer bdisc = ts * ts - 4 * nb;
      if (bdisc <= 0 || is_square(bdisc)) continue;
      const QuadInt m(ts, 1, 2, bdisc);
      if (m.pow(k) != lambda) continue;
      const QuadInt scale = (m - m.conjugate()) / spread;
      const QuadInt shift = m - scale * lambda;
      if (!scale.is_rational() || !shift.is_rational()) continue;
      const Rational sa = scale.to_rational();
      const Rational sb = shift.to_rational();
      IntMatrix b(2, 2);
      bool ok = true;
      for (std::size_t i = 0; i < 2 && ok; ++i) {
        for (std::size_t j = 0; j < 2 && ok; ++j) {
          Rational v = sa * Rational(a(i, j)) + (i == j ? sb : Rational(0));
          v.canonicalize();
          ok = v.get_den() == 1 && v.get_num() >= 1;
          if (ok) b(i, j) = v.get_num();
        }
      }
      if (ok) return MatrixRoot{b, k};
    }
  }
  return std::nullopt;
}

JpState jp_start(std::vector<Interval> theta, mpfr_prec_t precision) {
  if (theta.empty()) throw DomainError("Jacobi-Perron needs at least one coordinate");
  if (precision < 64) throw DomainError("Jacobi-Perron precision must be at least 64 bits");
  for (const auto& v : theta) {
    if (v.lo().sign() <= 0) throw DomainError("Jacobi-Perron coordinates must be positive");
  }
  JpState s;
  s.dimension = theta.size();
  s.precision = precision;
  s.current = std::move(theta);
  return s;
}

namespace {

bool small_width(const Interval& v, mpfr_prec_t precision) {
  const Real w = v.width();
  if (w.is_zero()) return true;
  return mpfr_get_exp(w.get()) < -static_cast<mpfr_exp_t>(precision / 4);
}

bool same_state(const std::vector<Interval>& x, const std::vector<Interval>& y, mpfr_prec_t precision) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].overlaps(y[i]) || !small_width(x[i], precision) || !small_width(y[i], precision)) return false;
  }
  return true;
}

}  // namespace

JpState jp_advance(JpState s) {
  const std::size_t n = s.dimension;
  const std::size_t step = s.digits.size();
  std::vector<Integer> digits(n);
  std::vector<Interval> frac;
  frac.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.current[i].certain_floor(digits[i])) {
      throw DomainError("fractional part of coordinate " + std::to_string(i + 1) + " contains 0 at step " +
                        std::to_string(step) + " (precision exhausted)");
    }
    frac.push_back(s.current[i] - Interval(digits[i], s.current[i].precision()));
  }
  if (frac[0].contains_zero()) {
    throw DomainError("fractional part of coordinate 1 contains 0 at step " + std::to_string(step));
  }
  std::vector<Interval> next;
  next.reserve(n);
  for (std::size_t i = 1; i < n; ++i) next.push_back(frac[i] / frac[0]);
  next.push_back(Interval(Integer(1), frac[0].precision()) / frac[0]);

  s.history.push_back(std::move(s.current));
  s.digits.push_back(std::move(digits));
  s.current = std::move(next);

  if (!s.period) {
    std::vector<Integer> next_digits(n);
    bool certain = true;
    for (std::size_t i = 0; i < n && certain; ++i) certain = s.current[i].certain_floor(next_digits[i]);
    if (certain) {
      const std::size_t j = s.history.size();
      for (std::size_t i = j; i-- > 0;) {
        if (s.digits[i] == next_digits && same_state(s.history[i], s.current, s.precision)) {
          s.period = JpPeriod{i, j - i};
          break;
        }
      }
    }
  }
  return s;
}

JpState jacobi_perron(std::vector<Interval> theta, std::size_t max_iters, mpfr_prec_t precision) {
  JpState s = jp_start(std::move(theta), precision);
  while (!s.period && s.digits.size() < max_iters) s = jp_advance(std::move(s));
  return s;
}

IntMatrix jp_digit_matrix(const std::vector<Integer>& digits) {
  const std::size_t n = digits.size();
  if (n == 0) throw DomainError("empty digit vector");
  IntMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = digits[i];
  m(0, n) = 1;
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  m(n, n - 1) = 1;
  return m;
}

std::vector<Interval> period_eigenvector(const JpState& s) {
  if (!s.period || s.period->length == 0) throw DomainError("state has no period candidate");
  if (s.history.size() <= s.period->start) throw DomainError("state does not carry the period-start vector");
  const auto& alpha = s.history[s.period->start];
  std::vector<Interval> v;
  v.emplace_back(Integer(1), alpha[0].precision());
  for (std::size_t i = 1; i < alpha.size(); ++i) v.push_back(alpha[i] / alpha[0]);
  v.push_back(Interval(Integer(1), alpha[0].precision()) / alpha[0]);
  return v;
}

IntMatrix period_product(const JpState& s) {
  if (!s.period || s.period->length == 0) throw DomainError("state has no period candidate");
  const std::size_t end = s.period->start + s.period->length;
  if (end > s.digits.size()) throw DomainError("period window exceeds the recorded digits");
  IntMatrix p = IntMatrix::identity(s.dimension + 1);
  for (std::size_t i = s.period->start; i < end; ++i) p = p * jp_digit_matrix(s.digits[i]);

  if (s.history.size() > s.period->start) {
    const std::vector<Interval> v = period_eigenvector(s);
    const mpfr_prec_t prec = v[0].precision();
    std::vector<Interval> ratios;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Interval w(Integer(0), prec);
      for (std::size_t j = 0; j < v.size(); ++j) w = w + Interval(p(i, j), prec) * v[j];
      ratios.push_back(w / v[i]);
    }
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      if (!ratios[i].overlaps(ratios[0])) throw DomainError("period candidate fails the eigenvector check");
    }
  }
  return p;
}

}  // namespace nct
