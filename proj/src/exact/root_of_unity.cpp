#include "nct/exact/root_of_unity.hpp"

#include "nct/error.hpp"

namespace nct {

RootOfUnity::RootOfUnity(const Integer& order, const Integer& exponent) : n_(order) {
  if (order < 1) throw DomainError("root of unity order must be >= 1");
  mpz_fdiv_r(k_.get_mpz_t(), exponent.get_mpz_t(), n_.get_mpz_t());
}

RootOfUnity RootOfUnity::reduced() const {
  if (k_ == 0) return {1, 0};
  const Integer g = gcd(k_, n_);
  return {n_ / g, k_ / g};
}

RootOfUnity RootOfUnity::pow(const Integer& e) const { return {n_, k_ * e}; }

int RootOfUnity::real_sign() const {
  const RootOfUnity r = reduced();
  if (r.n_ == 1) return 1;
  if (r.n_ == 2) return -1;
  return 0;
}

RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
  const Integer n = lcm(x.n_, y.n_);
  return RootOfUnity(n, x.k_ * (n / x.n_) + y.k_ * (n / y.n_)).reduced();
}

bool operator==(const RootOfUnity& x, const RootOfUnity& y) { return x.k_ * y.n_ == y.k_ * x.n_; }

std::string RootOfUnity::to_string() const {
  const RootOfUnity r = reduced();
  if (r.n_ == 1) return "1";
  if (r.n_ == 2) return "-1";
  return "zeta_" + r.n_.get_str() + "^" + r.k_.get_str();
}

ComplexApprox root_of_unity_value(const RootOfUnity& z, mpfr_prec_t precision) {
  if (precision < 32) throw DomainError("root_of_unity_value needs precision >= 32 bits");
  const RootOfUnity r = z.reduced();
  Real zero(precision);
  if (r.order() <= 4 && 4 % r.order().get_ui() == 0) {
    // 1, -1, i, -i
    const unsigned long quarter = r.exponent().get_ui() * (4 / r.order().get_ui());
    const long re_tab[4] = {1, 0, -1, 0};
    const long im_tab[4] = {0, 1, 0, -1};
    return {Complex(Real(Integer(re_tab[quarter]), precision), Real(Integer(im_tab[quarter]), precision)),
            zero};
  }
  // Final rounding to `precision` bits costs at most 2^-(precision+1) for a
  // coordinate of magnitude <= 1. The working-precision angle and sin/cos add
  // a few ulps at 2^-(precision+16); the complex modulus picks up sqrt(2).
  const mpfr_prec_t work = precision + 16;
  Real angle = pi(work) * Real(Integer(2 * r.exponent()), work) / Real(r.order(), work);
  Complex v = unit_complex(angle);
  Complex out(precision);
  mpfr_set(out.re.get(), v.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), v.im.get(), MPFR_RNDN);
  Real bound(precision);
  mpfr_set_ui_2exp(bound.get(), 187, -(precision + 8), MPFR_RNDU);
  return {std::move(out), std::move(bound)};
}

}  // namespace nct
