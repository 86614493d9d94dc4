#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nct {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

/// Deterministic primality for the magnitudes used here (GMP with 40 rounds,
/// exact for n < 2^64).
bool is_prime(const Integer& n);

/// Largest square divisor split: n = s^2 * core with core square-free.
struct SquareSplit {
  Integer square_root;  // s
  Integer core;
};
SquareSplit split_square(const Integer& n);

/// Prime factorization by trial division, ascending, with multiplicity.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// Sieve of Eratosthenes: all primes <= bound.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Integer power for small exponents.
Integer ipow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Parses an optionally signed decimal integer; throws ParseError.
Integer parse_integer(const std::string& text);

}  // namespace nct
