#include "nct/elliptic.hpp"

#include "nct/error.hpp"
#include "nct/exact/grammar.hpp"

namespace nct {

namespace {

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

void require_prime(std::uint64_t p) {
  if (!is_prime(Integer(p))) throw DomainError(std::to_string(p) + " is not prime");
}

std::string signed_term(const Integer& c, const std::string& var, bool first) {
  if (c == 0) return "";
  const bool neg = c < 0;
  const Integer mag = neg ? Integer(-c) : c;
  std::string body = (mag == 1 && !var.empty()) ? var : mag.get_str() + var;
  if (first) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

}  // namespace

CurveModel::CurveModel(Integer a4, Integer a6, std::optional<long> cm_discriminant, std::string name)
    : a4_(std::move(a4)), a6_(std::move(a6)), cm_(cm_discriminant), name_(std::move(name)) {
  disc_ = -16 * (4 * a4_ * a4_ * a4_ + 27 * a6_ * a6_);
  if (disc_ == 0) throw DomainError("singular curve " + equation() + " (discriminant 0)");
}

std::string CurveModel::equation() const {
  return "y^2 = x^3" + signed_term(a4_, "x", false) + signed_term(a6_, "", false);
}

CurveModel parse_curve(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("curve grammar is a4,a6");
  return CurveModel(parse_integer(parts[0]), parse_integer(parts[1]));
}

bool good_reduction(const CurveModel& curve, std::uint64_t p) {
  require_prime(p);
  if (p <= 3) return false;
  return reduce(curve.discriminant(), p) != 0;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

ApRecord count_points(const CurveModel& curve, std::uint64_t p) {
  if (!good_reduction(curve, p)) throw DomainError("bad reduction at p = " + std::to_string(p));
  const std::uint64_t a4 = reduce(curve.a4(), p);
  const std::uint64_t a6 = reduce(curve.a6(), p);
  const std::uint64_t half = (p - 1) / 2;
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = mul_mod(x, x, p);
    const std::uint64_t f = (mul_mod(x2, x, p) + mul_mod(a4, x, p) + a6) % p;
    if (f == 0) {
      count += 1;
    } else if (pow_mod(f, half, p) == 1) {
      count += 2;
    }
  }
  ApRecord r{p, count, static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(count)};
  if (static_cast<unsigned __int128>(r.ap * r.ap) > static_cast<unsigned __int128>(4) * p) {
    throw InternalError("Hasse bound violated at p = " + std::to_string(p));
  }
  return r;
}

LocalFactor curve_local_factor(const CurveModel& curve, std::uint64_t p) {
  const ApRecord r = count_points(curve, p);
  const Integer pp(std::to_string(p));
  return LocalFactor::integral(pp, {Integer(1), Integer(static_cast<long>(-r.ap)), pp});
}

CurveModel parse_catalog_entry(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3 || parts[0].empty()) throw ParseError("catalog entry grammar is name:a4,a6[:cm]");
  const CurveModel base = parse_curve(parts[1]);
  std::optional<long> cm;
  if (parts.size() == 3) cm = parse_integer(parts[2]).get_si();
  return CurveModel(base.a4(), base.a6(), cm, parts[0]);
}

std::vector<CurveModel> cm_catalog(const std::vector<std::string>& extra) {
  std::vector<CurveModel> out{CurveModel(-1, 0, -4, "x3-x"), CurveModel(0, 1, -3, "x3+1")};
  for (const auto& e : extra) out.push_back(parse_catalog_entry(e));
  return out;
}

}  // namespace nct
