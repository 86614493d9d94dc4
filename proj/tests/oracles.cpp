#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

bool is_square_u128(unsigned __int128 n, std::uint64_t& root) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  root = r;
  return static_cast<unsigned __int128>(r) * r == n;
}

}  // namespace

PellUnit pell_unit(std::int64_t d, bool half) {
  const std::int64_t target = half ? 4 : 1;
  for (std::int64_t b = 1; b < 100000000; ++b) {
    const unsigned __int128 db2 = static_cast<unsigned __int128>(d) * b * b;
    std::uint64_t a = 0;
    // Norm -1 first: for the same b it gives the smaller value.
    if (db2 >= static_cast<unsigned __int128>(target) && is_square_u128(db2 - target, a) && a > 0) {
      if (!half || (a % 2) == static_cast<std::uint64_t>(b % 2)) return {static_cast<std::int64_t>(a), b, half ? 2 : 1, -1};
    }
    if (is_square_u128(db2 + target, a)) {
      if (!half || (a % 2) == static_cast<std::uint64_t>(b % 2)) return {static_cast<std::int64_t>(a), b, half ? 2 : 1, 1};
    }
  }
  throw std::runtime_error("pell search exhausted");
}

std::uint64_t naive_point_count(std::int64_t a4, std::int64_t a6, std::uint64_t p) {
  const auto m = [p](std::int64_t v) {
    const std::int64_t q = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((v % q) + q) % q);
  };
  const std::uint64_t A = m(a4);
  const std::uint64_t B = m(a6);
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = (x * x % p * x + A * x + B) % p;
    for (std::uint64_t y = 0; y < p; ++y) {
      if (y * y % p == rhs) ++count;
    }
  }
  return count;
}

mpq_class rational_det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<mpz_class> char_poly_interpolated(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  std::vector<mpq_class> xs;
  std::vector<mpq_class> ys;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? mpq_class(static_cast<long>(k)) : mpq_class(0)) - mpq_class(m[i][j]);
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(rational_det(a));
  }
  // Lagrange basis expanded into coefficients.
  std::vector<mpq_class> coeff(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeff[k] += ys[i] * basis[k] / denom;
  }
  std::vector<mpz_class> out;
  for (auto& c : coeff) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::runtime_error("non-integral characteristic coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

std::vector<mpz_class> determinantal_divisors(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<mpz_class> out;
  const std::size_t kmax = std::min(rows, cols);
  for (std::size_t k = 1; k <= kmax; ++k) {
    mpz_class g = 0;
    // Enumerate k-subsets of rows and columns by bitmask (small sizes only).
    for (unsigned rm = 0; rm < (1U << rows); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1U << cols); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        std::vector<std::vector<mpq_class>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if ((rm & (1U << i)) == 0) continue;
          std::vector<mpq_class> row;
          for (std::size_t j = 0; j < cols; ++j) {
            if (cm & (1U << j)) row.emplace_back(m[i][j]);
          }
          sub.push_back(row);
        }
        const mpq_class d = rational_det(sub);
        mpz_class dz = d.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dz.get_mpz_t());
      }
    }
    out.push_back(g);
  }
  return out;
}

long double zeta2_partial(std::uint64_t terms) {
  long double s = 0;
  for (std::uint64_t k = terms; k >= 1; --k) s += 1.0L / (static_cast<long double>(k) * static_cast<long double>(k));
  return s;
}

long double catalan_partial(std::uint64_t terms) {
  long double s = 0;
  for (std::uint64_t k = terms; k-- > 0;) {
    const long double d = 2.0L * static_cast<long double>(k) + 1.0L;
    s += ((k % 2) ? -1.0L : 1.0L) / (d * d);
  }
  return s;
}

const std::vector<unsigned long>& unit_index_sqrt2() {
  static const std::vector<unsigned long> table{1,  2,  4,  4,  3,  4,  6,  8, 12, 6,  12, 4,  7,  6,  12, 16, 8,
                                                12, 20, 12, 12, 12, 22, 8, 15, 14, 36, 12, 5,  12, 30, 32, 12, 8,
                                                6,  12, 19, 20, 28, 24, 10, 12, 44, 12, 12, 22, 46, 16, 42, 30};
  return table;
}

const std::map<std::uint64_t, std::int64_t>& ap_x3_minus_x() {
  static const std::map<std::uint64_t, std::int64_t> table{{3, 0},  {5, -2}, {7, 0},  {11, 0},   {13, 6},
                                                           {17, 2}, {19, 0}, {23, 0}, {29, -10}, {31, 0}};
  return table;
}

const std::map<std::uint64_t, mpz_class>& trace_powers_121() {
  static const std::map<std::uint64_t, mpz_class> table{{2, 6},        {3, 14},        {5, 82},
                                                         {7, 478},      {11, 16238},    {13, 94642},
                                                         {17, 3215042}, {19, 18738638}};
  return table;
}

}  // namespace oracle
