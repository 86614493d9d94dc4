#pragma once

#include "nct/exact/poly.hpp"
#include "nct/zlinalg/matrix.hpp"

#include <optional>
#include <vector>

namespace nct {

/// U * M * V = S with U, V unimodular and S diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

/// Smith normal form over Z. Pivot is the smallest nonzero |entry| of the
/// active block, first in row-major order, so output is reproducible.
SnfResult smith_normal_form(const IntMatrix& m);

/// Diagonal of S (length min(rows, cols)).
std::vector<Integer> invariant_factors(const SnfResult& snf);

namespace detail {

struct IntegerEuclid {
  static Integer key(const Integer& x) { return abs(x); }
  static Integer quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool divides(const Integer& b, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }
  /// Unit u with x / u in canonical form; its inverse scales the pivot row.
  static Integer unit_inverse(const Integer& x) { return x < 0 ? Integer(-1) : Integer(1); }
};

struct RatPolyEuclid {
  static long key(const RatPoly& x) { return x.degree(); }
  static RatPoly quotient(const RatPoly& a, const RatPoly& b) { return divmod(a, b).quotient; }
  static bool divides(const RatPoly& b, const RatPoly& a) { return divmod(a, b).remainder.is_zero(); }
  static RatPoly unit_inverse(const RatPoly& x) { return RatPoly::constant(Rational(1) / x.leading()); }
};

/// In-place Smith reduction over a Euclidean domain; U and V (optional)
/// accumulate the row and column operations.
template <class T, class Euclid>
void smith_reduce(Matrix<T>& s, Matrix<T>* u, Matrix<T>* v) {
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == T(0)) continue;
          if (!pivot || Euclid::key(s(i, j)) < Euclid::key(s(pivot->first, pivot->second))) pivot = {i, j};
        }
      }
      if (!pivot) return;
      if (pivot->first != t) {
        s.swap_rows(t, pivot->first);
        if (u) u->swap_rows(t, pivot->first);
      }
      if (pivot->second != t) {
        s.swap_cols(t, pivot->second);
        if (v) v->swap_cols(t, pivot->second);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == T(0)) continue;
        const T q = Euclid::quotient(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        if (u) u->add_row_multiple(i, t, -q);
        if (!(s(i, t) == T(0))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == T(0)) continue;
        const T q = Euclid::quotient(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        if (v) v->add_col_multiple(j, t, -q);
        if (!(s(t, j) == T(0))) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!Euclid::divides(s(t, t), s(i, j))) {
            s.add_row_multiple(t, i, T(1));
            if (u) u->add_row_multiple(t, i, T(1));
            divisible = false;
            break;
          }
        }
      }
      if (!divisible) continue;
      const T scale = Euclid::unit_inverse(s(t, t));
      for (std::size_t j = 0; j < n; ++j) s(t, j) = scale * s(t, j);
      if (u) {
        for (std::size_t j = 0; j < u->cols(); ++j) (*u)(t, j) = scale * (*u)(t, j);
      }
      break;
    }
  }
}

}  // namespace detail
}  // namespace nct
