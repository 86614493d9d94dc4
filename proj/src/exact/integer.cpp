#include "nct/exact/integer.hpp"

#include "nct/error.hpp"

#include <algorithm>
#include <cctype>

namespace nct {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

SquareSplit split_square(const Integer& n) {
  if (n == 0) return {0, 0};
  // Trial division to 2^20, then the cofactor is square-free unless it is a
  // perfect square or carries a squared prime above the trial bound together
  // with another large prime (cofactor >= 2^60). Callers keep radicands small
  // by working with primitive polynomials.
  constexpr unsigned long kTrialBound = 1UL << 20;
  Integer core = abs(n);
  Integer root = 1;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    const Integer pp = Integer(p) * p;
    if (pp > core) break;
    while (mpz_divisible_ui_p(core.get_mpz_t(), p * 1UL) &&
           mpz_divisible_p(core.get_mpz_t(), pp.get_mpz_t())) {
      core /= pp;
      root *= p;
    }
  }
  if (core > 1 && is_square(core)) {
    root *= isqrt(core);
    core = 1;
  }
  return {root, n < 0 ? Integer(-core) : core};
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer m = abs(n);
  if (m < 2) return out;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Integer p = 5; p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw ParseError("not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace nct
