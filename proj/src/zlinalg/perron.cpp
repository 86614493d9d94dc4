#include "nct/zlinalg/zlinalg.hpp"

#include "nct/error.hpp"

namespace nct {

namespace {

void require_positive(const IntMatrix& a) {
  a.require_square("perron_frobenius");
  for (const auto& v : a.entries()) {
    if (v < 1) throw DomainError("perron_frobenius needs strictly positive entries");
  }
}

PFData exact_2x2(const IntMatrix& a) {
  const Integer t = a.trace();
  const Integer d = det(a);
  const Integer disc = t * t - 4 * d;  // > 0 for positive matrices
  const QuadInt lambda = is_square(disc) ? QuadInt(make_rational(t + isqrt(disc), 2)) : QuadInt(t, 1, 2, disc);
  // first row: a00 + a01 v = lambda
  const QuadInt v2 = (lambda - QuadInt(a(0, 0))) / QuadInt(a(0, 1));
  const std::vector<QuadInt> v{QuadInt(1), v2};
  for (std::size_t i = 0; i < 2; ++i) {
    const QuadInt lhs = QuadInt(a(i, 0)) * v[0] + QuadInt(a(i, 1)) * v[1];
    if (!(lhs == lambda * v[i])) throw InternalError("perron_frobenius: A v != lambda v");
  }
  PFData out;
  constexpr mpfr_prec_t prec = 256;
  out.precision = prec;
  out.lambda = lambda.enclose(prec);
  out.vector = {Interval(Integer(1), prec), v2.enclose(prec)};
  out.lambda_exact = lambda;
  out.vector_exact = v;
  return out;
}

Real ratio_upper(const Interval& num, const Interval& den) { return (num / den).hi(); }
Real ratio_lower(const Interval& num, const Interval& den) { return (num / den).lo(); }

/// Projective diameter of the image cone: max log(a_ik a_jl / (a_jk a_il)).
Rational max_cross_ratio(const IntMatrix& a) {
  const std::size_t n = a.rows();
  Rational best(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational r = make_rational(a(i, k) * a(j, l), a(j, k) * a(i, l));
          if (r > best) best = r;
        }
  return best;
}

std::optional<PFData> certified_attempt(const IntMatrix& a, mpfr_prec_t prec) {
  const std::size_t n = a.rows();
  // power iteration in floating point at the working precision
  std::vector<Real> x(n, Real(Integer(1), prec));
  Real tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec - 8), MPFR_RNDN);
  const std::size_t max_iter = 40 * static_cast<std::size_t>(prec);
  for (std::size_t it = 0; it < max_iter; ++it) {
    std::vector<Real> y(n, Real(prec));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] = y[i] + Real(a(i, j), prec) * x[j];
    const Real scale = y[0];
    Real change(prec);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = y[i] / scale;
      const Real diff = (y[i] - x[i]).abs();
      if (diff > change) change = diff;
    }
    x = std::move(y);
    if (change < tol) break;
  }
  // certification
  std::vector<Interval> xi;
  for (const auto& v : x) xi.emplace_back(v, v);
  Real lo_ratio(prec);
  Real hi_ratio(prec);
  for (std::size_t i = 0; i < n; ++i) {
    Interval ax(Integer(0), prec);
    for (std::size_t j = 0; j < n; ++j) ax = ax + Interval(a(i, j), prec) * xi[j];
    const Real l = ratio_lower(ax, xi[i]);
    const Real h = ratio_upper(ax, xi[i]);
    if (i == 0 || l < lo_ratio) lo_ratio = l;
    if (i == 0 || h > hi_ratio) hi_ratio = h;
  }
  // Hilbert distance d(x, Ax) <= log(hi/lo); d(x, v) <= d(x, Ax) / (1 - tau)
  const Real dist_x_ax = log(Real::div(hi_ratio, lo_ratio, MPFR_RNDU), MPFR_RNDU);
  const Real diameter = log(Real(max_cross_ratio(a), prec, MPFR_RNDU), MPFR_RNDU);
  Real quarter(prec);
  mpfr_div_2ui(quarter.get(), diameter.get(), 2, MPFR_RNDU);
  const Real tau = tanh(quarter, MPFR_RNDU);
  const Real gap = Real::sub(Real(Integer(1), prec), tau, MPFR_RNDD);
  if (gap.sign() <= 0) return std::nullopt;
  const Real delta = Real::div(dist_x_ax, gap, MPFR_RNDU);
  Real target(prec);
  mpfr_set_ui_2exp(target.get(), 1, -(prec / 2), MPFR_RNDN);
  if (delta > target) return std::nullopt;

  PFData out;
  out.precision = prec;
  out.lambda = Interval(lo_ratio, hi_ratio);
  const Real up = exp(delta, MPFR_RNDU);
  const Real down = exp(-delta, MPFR_RNDD);
  out.vector.emplace_back(Integer(1), prec);
  for (std::size_t i = 1; i < n; ++i) {
    // x_i > 0 for positive A
    out.vector.emplace_back(Real::mul(x[i], down, MPFR_RNDD), Real::mul(x[i], up, MPFR_RNDU));
  }
  return out;
}

}  // namespace

PFData perron_frobenius(const IntMatrix& a, PfMode mode) {
  require_positive(a);
  const std::size_t n = a.rows();
  if (mode == PfMode::Exact && n >= 3) {
    throw DomainError("exact Perron-Frobenius data is only available for 2x2 matrices");
  }
  if (n == 1) {
    PFData out;
    out.precision = 256;
    out.lambda_exact = QuadInt(a(0, 0));
    out.vector_exact = {QuadInt(1)};
    out.lambda = Interval(a(0, 0), 256);
    out.vector = {Interval(Integer(1), 256)};
    return out;
  }
  if (n == 2 && mode != PfMode::Interval) return exact_2x2(a);
  for (mpfr_prec_t prec = 256; prec <= 4096; prec *= 2) {
    if (auto out = certified_attempt(a, prec)) return *out;
  }
  throw DomainError("perron_frobenius: enclosure did not tighten by 4096 bits");
}

}  // namespace nct
