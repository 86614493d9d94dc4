#include "nct/zlinalg/zlinalg.hpp"

#include "nct/error.hpp"

namespace nct {

IntPoly char_poly(const IntMatrix& m) {
  m.require_square("char_poly");
  const std::size_t n = m.rows();
  // coefficients of det(xI - M_k) for the leading k x k block, highest first
  std::vector<Integer> v{1, -m(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R M C, -R M^2 C, ...
    std::vector<Integer> t(k + 2);
    t[0] = 1;
    t[1] = -m(k, k);
    std::vector<Integer> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = m(i, k);
    for (std::size_t p = 0; p < k; ++p) {
      Integer rc = 0;
      for (std::size_t j = 0; j < k; ++j) rc += m(k, j) * col[j];
      t[p + 2] = -rc;
      std::vector<Integer> next(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * col[j];
      }
      col = std::move(next);
    }
    std::vector<Integer> w(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) w[i] += t[i - j] * v[j];
    }
    v = std::move(w);
  }
  return IntPoly(std::vector<Integer>(v.rbegin(), v.rend()));
}

std::vector<RatPoly> char_matrix_invariants(const IntMatrix& m) {
  m.require_square("char_matrix_invariants");
  const std::size_t n = m.rows();
  Matrix<RatPoly> cm(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RatPoly entry = RatPoly::constant(Rational(-m(i, j)));
      if (i == j) entry += RatPoly{Rational(0), Rational(1)};
      cm(i, j) = std::move(entry);
    }
  }
  detail::smith_reduce<RatPoly, detail::RatPolyEuclid>(cm, nullptr, nullptr);
  std::vector<RatPoly> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(monic(cm(i, i)));
  return out;
}

bool similar_via_char_matrix(const IntMatrix& a, const IntMatrix& b) {
  a.require_square("similar_via_char_matrix");
  b.require_square("similar_via_char_matrix");
  if (a.rows() != b.rows()) throw DomainError("similar_via_char_matrix: dimension mismatch");
  return char_matrix_invariants(a) == char_matrix_invariants(b);
}

NormalizedEndo normalize_endomorphism(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("normalize_endomorphism needs a 2x2 matrix");
  if (m(0, 1) != 1) throw DomainError("normalize_endomorphism needs top-right entry 1");
  if (det(m) == 0) throw DomainError("normalize_endomorphism: zero determinant");
  const Integer& a = m(0, 0);
  const Integer& c = m(1, 0);
  const Integer& d = m(1, 1);
  IntMatrix normalized{{a + d, 1}, {c - a * d, 0}};
  IntMatrix conjugator{{1, 0}, {d, 1}};
  const IntMatrix check = unimodular_inverse(conjugator) * m * conjugator;
  if (!(check == normalized)) throw InternalError("normalize_endomorphism: conjugation check failed");
  return {std::move(normalized), std::move(conjugator)};
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer d = det(m);
  if (d != 1 && d != -1) throw DomainError("unimodular_inverse: determinant is not +-1");
  const RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = inv(i, j).get_num();
  }
  return out;
}

}  // namespace nct
