#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the algorithms under test.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

/// Smallest unit (a + b sqrt(D)) / den > 1 of Z[sqrt D] (den = 1) or, for
/// D = 1 mod 4 with `half` set, of Z[(1 + sqrt D)/2] (den = 2), by search
/// over b = 1, 2, ...
struct PellUnit {
  std::int64_t a;
  std::int64_t b;
  std::int64_t den;
  int norm;
};
PellUnit pell_unit(std::int64_t d, bool half);

/// #E(F_p) for y^2 = x^3 + a4 x + a6 by trying every (x, y).
std::uint64_t naive_point_count(std::int64_t a4, std::int64_t a6, std::uint64_t p);

/// det(xI - M) coefficients (ascending) by Lagrange interpolation of
/// rational Gaussian-elimination determinants at x = 0..n.
std::vector<mpz_class> char_poly_interpolated(const std::vector<std::vector<mpz_class>>& m);

/// Determinant by Gaussian elimination over Q.
mpq_class rational_det(std::vector<std::vector<mpq_class>> m);

/// Determinantal divisors d_k = gcd of all k x k minors, k = 1..n (n <= 3).
std::vector<mpz_class> determinantal_divisors(const std::vector<std::vector<mpz_class>>& m);

/// sum_{k<=K} 1/k^2 and the Catalan alternating series, in long double.
long double zeta2_partial(std::uint64_t terms);
long double catalan_partial(std::uint64_t terms);
constexpr long double kZeta2 = 1.6449340668482264364724151666460251892L;
constexpr long double kCatalan = 0.9159655941772190150546035149323841108L;

/// Frozen tables computed once by a separate script.
/// g_n for theta = sqrt(2), n = 1..50.
const std::vector<unsigned long>& unit_index_sqrt2();
/// a_p for y^2 = x^3 - x, p = 3..31.
const std::map<std::uint64_t, std::int64_t>& ap_x3_minus_x();
/// tr(A^p) for A = [[1,1],[2,1]].
const std::map<std::uint64_t, mpz_class>& trace_powers_121();

}  // namespace oracle
