#include "nct/zlinalg/matrix.hpp"

#include "nct/exact/grammar.hpp"

namespace nct {

Integer det(const IntMatrix& m) {
  m.require_square("det");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix parse_matrix(std::string_view text) {
  const auto rows = split(text, ';');
  std::vector<Integer> entries;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    const auto cells = split(row, ',');
    if (cols == 0) cols = cells.size();
    if (cells.size() != cols) throw ParseError("matrix rows have different lengths: '" + std::string(text) + "'");
    for (const auto& cell : cells) entries.push_back(parse_integer(cell));
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ";";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ",";
      out += m(i, j).get_str();
    }
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> e;
  e.reserve(m.entries().size());
  for (const auto& v : m.entries()) e.emplace_back(v);
  return RatMatrix(m.rows(), m.cols(), std::move(e));
}

}  // namespace nct
