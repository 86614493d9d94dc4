#include "nct/error.hpp"
#include "nct/zlinalg/zlinalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nct;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

std::vector<std::vector<mpz_class>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> r(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

bool is_diagonal(const IntMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("zlinalg") {

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(parse_matrix("1,1;2,1")).to_string() == "x^2 - 2*x - 1");
  CHECK(char_poly(IntMatrix::identity(2)) == IntPoly{1, -2, 1});
  CHECK(char_poly(parse_matrix("6,2;-1,0")).to_string() == "x^2 - 6*x + 2");
  CHECK_THROWS_AS(char_poly(parse_matrix("1,2,3;4,5,6")), DomainError);
}

TEST_CASE("characteristic polynomial agrees with interpolated determinants") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    const auto expected = oracle::char_poly_interpolated(rows_of(m));
    const IntPoly got = char_poly(m);
    REQUIRE(got.degree() == static_cast<long>(n));
    for (std::size_t k = 0; k <= n; ++k) CHECK(got[k] == expected[k]);
  }
}

TEST_CASE("constant term of char(A^p) is det(A)^p") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix a = random_matrix(rng, 3, -4, 4);
    const unsigned long p = std::vector<unsigned long>{2, 3, 5, 7}[static_cast<std::size_t>(t % 4)];
    const IntPoly c = char_poly(a.pow(p));
    // det(xI - M) at x = 0 is (-1)^n det M.
    CHECK(-c[0] == ipow(det(a), p));
  }
}

TEST_CASE("Smith normal form examples") {
  const SnfResult id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.U == IntMatrix::identity(3));
  CHECK(id.S == IntMatrix::identity(3));
  CHECK(id.V == IntMatrix::identity(3));
  CHECK(smith_normal_form(parse_matrix("2,0;0,3")).S == parse_matrix("1,0;0,6"));
  CHECK(smith_normal_form(parse_matrix("2,4;6,8")).S == parse_matrix("2,0;0,4"));
  const SnfResult rect = smith_normal_form(parse_matrix("2,4,4;-6,6,12"));
  CHECK(invariant_factors(rect) == std::vector<Integer>{2, 6});
  CHECK(rect.U * parse_matrix("2,4,4;-6,6,12") * rect.V == rect.S);
}

TEST_CASE("Smith normal form on random 3x3 matrices") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix m = random_matrix(rng, 3, -10, 10);
    const SnfResult r = smith_normal_form(m);
    CHECK(r.U * m * r.V == r.S);
    CHECK(abs(det(r.U)) == 1);
    CHECK(abs(det(r.V)) == 1);
    CHECK(is_diagonal(r.S));
    const auto d = invariant_factors(r);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      if (d[i] == 0 && i + 1 < d.size()) CHECK(d[i + 1] == 0);
    }
    // d_1 ... d_k equals the gcd of the k x k minors.
    const auto dk = oracle::determinantal_divisors(rows_of(m));
    Integer acc = 1;
    for (std::size_t k = 0; k < 3; ++k) {
      acc *= d[k];
      CHECK(acc == dk[k]);
    }
  }
}

TEST_CASE("Smith form is reproducible") {
  const IntMatrix m = parse_matrix("3,-7,2;5,1,9;-4,8,6");
  const SnfResult a = smith_normal_form(m);
  const SnfResult b = smith_normal_form(m);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
}

TEST_CASE("similarity through characteristic matrices") {
  const IntMatrix n = parse_matrix("6,1;-5,0");
  CHECK(similar_via_char_matrix(n, n.transpose()));
  CHECK(similar_via_char_matrix(n, n));
  CHECK_FALSE(similar_via_char_matrix(IntMatrix::identity(2), parse_matrix("1,1;0,1")));
  CHECK_THROWS_AS(similar_via_char_matrix(IntMatrix::identity(2), IntMatrix::identity(3)), DomainError);
  const auto inv = char_matrix_invariants(parse_matrix("1,1;0,1"));
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == RatPoly{1});
  CHECK(inv[1] == RatPoly{1, -2, 1});
}

TEST_CASE("normalized endomorphism examples") {
  const NormalizedEndo a = normalize_endomorphism(parse_matrix("1,1;1,0"));
  CHECK(a.normalized == parse_matrix("1,1;1,0"));
  CHECK(a.conjugator == IntMatrix::identity(2));
  const NormalizedEndo b = normalize_endomorphism(parse_matrix("2,1;3,4"));
  CHECK(b.normalized == parse_matrix("6,1;-5,0"));
  CHECK(b.conjugator == parse_matrix("1,0;4,1"));
  const NormalizedEndo c = normalize_endomorphism(parse_matrix("0,1;5,0"));
  CHECK(c.normalized == parse_matrix("0,1;5,0"));
  CHECK(c.conjugator == IntMatrix::identity(2));
  CHECK_THROWS_AS(normalize_endomorphism(parse_matrix("1,2;3,4")), DomainError);
  CHECK_THROWS_AS(normalize_endomorphism(parse_matrix("1,1;2,2")), DomainError);
}

TEST_CASE("normalization, transpose similarity and companion similarity on random samples") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<long> dist(-20, 20);
  int done = 0;
  while (done < 500) {
    const long a = dist(rng), c = dist(rng), d = dist(rng);
    if (a * d - c == 0) continue;
    ++done;
    const IntMatrix m{{a, 1}, {c, d}};
    const NormalizedEndo r = normalize_endomorphism(m);
    const IntMatrix expected{{a + d, 1}, {c - a * d, 0}};
    CHECK(unimodular_inverse(r.conjugator) * m * r.conjugator == expected);
    CHECK(r.conjugator == IntMatrix{{1, 0}, {d, 1}});
    CHECK(similar_via_char_matrix(expected, expected.transpose()));
    CHECK(similar_via_char_matrix(m, IntMatrix{{a + d, c - a * d}, {1, 0}}));
  }
}

TEST_CASE("exact Perron-Frobenius data") {
  const PFData a = perron_frobenius(parse_matrix("1,1;2,1"));
  REQUIRE(a.lambda_exact);
  CHECK(*a.lambda_exact == QuadInt(1, 1, 1, 2));
  CHECK(a.vector_exact == std::vector<QuadInt>{QuadInt(1), QuadInt::sqrt(2)});
  const PFData b = perron_frobenius(parse_matrix("2,1;1,1"));
  CHECK(*b.lambda_exact == QuadInt(3, 1, 2, 5));
  CHECK(b.vector_exact[1] == QuadInt(-1, 1, 2, 5));
  const PFData c = perron_frobenius(parse_matrix("1,1;1,1"));
  CHECK(*c.lambda_exact == QuadInt(2));
  CHECK(c.vector_exact[1] == QuadInt(1));
  CHECK_THROWS_AS(perron_frobenius(parse_matrix("1,0;1,1")), DomainError);
  CHECK_THROWS_AS(perron_frobenius(parse_matrix("1,1,1;1,1,1;1,1,2"), PfMode::Exact), DomainError);
}

TEST_CASE("exact Perron-Frobenius residual is zero on random positive matrices") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_matrix(rng, 2, 1, 30);
    const PFData pf = perron_frobenius(a, PfMode::Exact);
    for (std::size_t i = 0; i < 2; ++i) {
      QuadInt row(0);
      for (std::size_t j = 0; j < 2; ++j) row += QuadInt(a(i, j)) * pf.vector_exact[j];
      CHECK(row - *pf.lambda_exact * pf.vector_exact[i] == QuadInt(0));
    }
    CHECK(pf.lambda.overlaps(pf.lambda_exact->enclose(256)));
  }
}

TEST_CASE("interval Perron-Frobenius enclosures") {
  const IntMatrix a = parse_matrix("0,1,0;0,0,1;1,1,0") + IntMatrix(3, 3, std::vector<Integer>(9, 1));
  const PFData pf = perron_frobenius(a);
  CHECK_FALSE(pf.lambda_exact);
  REQUIRE(pf.vector.size() == 3);
  CHECK(pf.vector[0].lo().to_double() == 1.0);
  // A v and lambda v overlap coordinatewise.
  for (std::size_t i = 0; i < 3; ++i) {
    Interval row(Integer(0), pf.precision);
    for (std::size_t j = 0; j < 3; ++j) row = row + Interval(a(i, j), pf.precision) * pf.vector[j];
    CHECK(row.overlaps(pf.lambda * pf.vector[i]));
  }
  CHECK(pf.lambda.width().to_double() < 1e-60);
  // Power-iteration oracle in double precision.
  std::vector<double> v{1, 1, 1};
  double lambda = 0;
  for (int it = 0; it < 200; ++it) {
    std::vector<double> w(3, 0.0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) w[i] += a(i, j).get_d() * v[j];
    lambda = w[0] / v[0];
    const double w0 = w[0];
    for (auto& x : w) x /= w0;
    v = w;
  }
  CHECK(pf.lambda.mid().to_double() == doctest::Approx(lambda).epsilon(1e-12));
  CHECK(pf.vector[2].mid().to_double() == doctest::Approx(v[2]).epsilon(1e-12));
}

TEST_CASE("matrix grammar") {
  CHECK(to_string(parse_matrix(" 1, -2 ; 3,4 ")) == "1,-2;3,4");
  CHECK_THROWS_AS(parse_matrix("1,2;3"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,x"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
}

}  // TEST_SUITE
