#include "nct/local_factor.hpp"

#include "nct/error.hpp"

namespace nct {

FactorCoefficient::FactorCoefficient(const Integer& s, const RootOfUnity& u) : scale(s), unit(u.reduced()) {
  if (scale == 0) {
    unit = RootOfUnity::one();
  } else if (unit.real_sign() == -1) {
    scale = -scale;
    unit = RootOfUnity::one();
  }
}

LocalFactor LocalFactor::integral(const Integer& p, const std::vector<Integer>& coefficients) {
  LocalFactor f;
  f.p = p;
  for (const auto& c : coefficients) f.denominator.emplace_back(c);
  return f;
}

bool LocalFactor::is_integral() const {
  for (const auto& c : denominator) {
    if (c.unit.real_sign() != 1) return false;
  }
  return true;
}

std::vector<Integer> LocalFactor::integer_coefficients() const {
  if (!is_integral()) throw DomainError("local factor has non-integral coefficients");
  std::vector<Integer> out;
  for (const auto& c : denominator) out.push_back(c.scale);
  return out;
}

Complex LocalFactor::evaluate(const Complex& z) const {
  const mpfr_prec_t prec = z.precision();
  Complex acc(prec);
  for (std::size_t k = denominator.size(); k-- > 0;) {
    const auto& c = denominator[k];
    Complex coeff(Real(c.scale, prec), Real(prec));
    if (c.unit.real_sign() != 1) {
      const ComplexApprox u = root_of_unity_value(c.unit, prec);
      coeff = Complex(u.value.re * Real(c.scale, prec), u.value.im * Real(c.scale, prec));
    }
    acc = acc * z + coeff;
  }
  return acc;
}

std::string LocalFactor::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < denominator.size(); ++k) {
    const auto& c = denominator[k];
    if (c.scale == 0) continue;
    const bool unit = c.unit.real_sign() == 1;
    const bool negative = c.scale < 0;
    const Integer s = abs(c.scale);
    std::string mag;
    if (unit) {
      mag = (s == 1 && k > 0) ? "" : s.get_str();
    } else {
      mag = (s == 1 ? "" : s.get_str() + "*") + c.unit.to_string();
    }
    std::string term = mag;
    if (k > 0) {
      const std::string zpow = k == 1 ? "z" : "z^" + std::to_string(k);
      term = mag.empty() ? zpow : mag + "*" + zpow;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace nct
