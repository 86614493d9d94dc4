#include "nct/error.hpp"
#include "nct/exact/grammar.hpp"
#include "nct/exact/poly.hpp"
#include "nct/exact/quad_int.hpp"
#include "nct/exact/root_of_unity.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nct;

namespace {

QuadInt random_quad(std::mt19937_64& rng, long d) {
  std::uniform_int_distribution<long> coef(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  return QuadInt(coef(rng), coef(rng), den(rng), d);
}

std::vector<Integer> coeffs(const IntPoly& p) { return p.coefficients(); }

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("minimal polynomial of quadratic numbers") {
  CHECK(coeffs(minimal_polynomial(QuadInt::sqrt(2))) == std::vector<Integer>{-2, 0, 1});
  CHECK(coeffs(minimal_polynomial(QuadInt(1, 1, 1, 2))) == std::vector<Integer>{-1, -2, 1});
  CHECK(coeffs(minimal_polynomial(QuadInt(1, 1, 2, 5))) == std::vector<Integer>{-1, -1, 1});
  CHECK(minimal_polynomial(QuadInt(Rational(3, 4))).degree() == 1);
  CHECK(minimal_polynomial(QuadInt(1, 1, 1, 2)).to_string() == "x^2 - 2*x - 1");
}

TEST_CASE("trace and norm") {
  const TraceNorm a = trace_norm(QuadInt::sqrt(7));
  CHECK(a.trace == 0);
  CHECK(a.norm == -7);
  const TraceNorm b = trace_norm(QuadInt(1, 1, 1, 2));
  CHECK(b.trace == 2);
  CHECK(b.norm == -1);
  const TraceNorm c = trace_norm(QuadInt(Rational(2, 3)));
  CHECK(c.trace == Rational(4, 3));
  CHECK(c.norm == Rational(4, 9));
}

TEST_CASE("canonical form") {
  const QuadInt q(2, 2, 2, 8);  // (2 + 2 sqrt 8)/2 = 1 + 2 sqrt 2
  CHECK(q.a() == 1);
  CHECK(q.b() == 2);
  CHECK(q.c() == 1);
  CHECK(q.radicand() == 2);
  const QuadInt r(3, 0, -6, 5);
  CHECK(r == QuadInt(Rational(-1, 2)));
  CHECK(QuadInt(0, 1, 1, 9) == QuadInt(3));
  CHECK_THROWS_AS(QuadInt(0, 1, 1, -3), DomainError);
  CHECK_THROWS_AS(QuadInt::sqrt(2) + QuadInt::sqrt(3), DomainError);
  CHECK(QuadInt(Rational(1, 2)) + QuadInt::sqrt(3) == QuadInt(1, 2, 2, 3));
}

TEST_CASE("floor, sign and ordering") {
  CHECK(QuadInt::sqrt(2).floor() == 1);
  CHECK((-QuadInt::sqrt(2)).floor() == -2);
  CHECK(QuadInt(1, 1, 2, 5).floor() == 1);
  CHECK(QuadInt(-3, 2, 1, 2).sign() < 0);  // 2 sqrt 2 < 3
  CHECK(QuadInt(-2, 2, 1, 2).sign() > 0);
  CHECK(QuadInt::sqrt(2) < QuadInt(3, 0, 2, 2));
  CHECK(QuadInt(1, 1, 1, 2).to_string() == "1+sqrt(2)");
  CHECK(QuadInt(1, 1, 2, 5).to_string() == "(1+sqrt(5))/2");
  CHECK(QuadInt(0, -1, 2, 2).to_string() == "-sqrt(2)/2");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const long d = std::vector<long>{2, 3, 5, 6, 7, 10, 13}[static_cast<std::size_t>(i % 7)];
    const QuadInt x = random_quad(rng, d);
    const QuadInt y = random_quad(rng, d);
    const QuadInt z = random_quad(rng, d);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadInt(1));
  }
}

TEST_CASE("trace additive, norm multiplicative") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const long d = std::vector<long>{2, 3, 5, 11, 14}[static_cast<std::size_t>(i % 5)];
    const QuadInt x = random_quad(rng, d);
    const QuadInt y = random_quad(rng, d);
    CHECK(trace_norm(x * y).norm == trace_norm(x).norm * trace_norm(y).norm);
    CHECK(trace_norm(x + y).trace == trace_norm(x).trace + trace_norm(y).trace);
  }
}

TEST_CASE("minimal polynomial vanishes at its root") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const QuadInt q = random_quad(rng, std::vector<long>{2, 3, 5, 21}[static_cast<std::size_t>(i % 4)]);
    const IntPoly p = minimal_polynomial(q);
    QuadInt acc(0);
    for (long k = p.degree(); k >= 0; --k) acc = acc * q + QuadInt(p[static_cast<std::size_t>(k)]);
    CHECK(acc.is_zero());
    CHECK(p.leading() > 0);
  }
}

TEST_CASE("roots of unity") {
  const ComplexApprox i = root_of_unity_value(RootOfUnity(4, 1), 64);
  CHECK(i.value.re.is_zero());
  CHECK(i.value.im.to_double() == 1.0);
  CHECK(i.error_bound.is_zero());
  const ComplexApprox one = root_of_unity_value(RootOfUnity(1, 0), 64);
  CHECK(one.value.re.to_double() == 1.0);
  CHECK(one.value.im.is_zero());
  const ComplexApprox i2 = root_of_unity_value(RootOfUnity(8, 2), 64);
  CHECK(i2.value.im.to_double() == 1.0);
  CHECK(i2.value.re.is_zero());
  CHECK(RootOfUnity(8, 2) == RootOfUnity(4, 1));
  CHECK(RootOfUnity(4, 3).to_string() == "zeta_4^3");
}

TEST_CASE("root of unity product matches value product within the error bounds") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> order(1, 60);
  for (int t = 0; t < 200; ++t) {
    const long n1 = order(rng);
    const long n2 = order(rng);
    const RootOfUnity z1(n1, static_cast<long>(rng() % static_cast<unsigned long>(n1)));
    const RootOfUnity z2(n2, static_cast<long>(rng() % static_cast<unsigned long>(n2)));
    const mpfr_prec_t prec = 96;
    const ComplexApprox a = root_of_unity_value(z1, prec);
    const ComplexApprox b = root_of_unity_value(z2, prec);
    const ComplexApprox c = root_of_unity_value(z1 * z2, prec);
    const Complex prod = a.value * b.value;
    const Real diff = (prod - c.value).abs();
    // |ab - exact| <= ea + eb + ea eb, plus rounding of the product itself.
    const Real bound = (a.error_bound + b.error_bound + c.error_bound + Real(std::ldexp(1.0, -90), prec));
    CHECK(diff <= Real(Integer(2), prec) * bound);
  }
}

TEST_CASE("text grammar") {
  CHECK(parse_quad("quad:1,1,2,5") == QuadInt(1, 1, 2, 5));
  CHECK(parse_quad("sqrt:2") == QuadInt::sqrt(2));
  CHECK(parse_quad("int:3") == QuadInt(3));
  CHECK(parse_quad(" 7 ") == QuadInt(7));
  CHECK_THROWS_AS(parse_quad("quad:1,2"), ParseError);
  CHECK_THROWS_AS(parse_quad("sqrt:-2"), ParseError);
  CHECK_THROWS_AS(parse_quad("pi"), ParseError);
  const auto v = parse_real_list("root:2:3;rat:1/3", 128);
  REQUIRE(v.size() == 2);
  CHECK(v[0].lo().to_double() == doctest::Approx(1.2599210498948732));
  CHECK(v[1].contains(Real(Rational(1, 3), 200)));
}

TEST_CASE("real formatting is fixed at 20 significant digits") {
  CHECK(pi(128).to_string() == "3.1415926535897932385");
  CHECK(Real(Rational(1, 3), 128).to_string() == "0.33333333333333333333");
  CHECK(Real(Integer(2), 128).to_string(5) == "2.0000");
}

TEST_CASE("interval enclosures") {
  const Interval r2 = QuadInt::sqrt(2).enclose(128);
  Integer f;
  CHECK(r2.certain_floor(f));
  CHECK(f == 1);
  const Interval sq = r2 * r2;
  CHECK(sq.contains(Real(Integer(2), 128)));
  CHECK_THROWS_AS(r2 / (r2 - r2), DomainError);
}

}  // TEST_SUITE
