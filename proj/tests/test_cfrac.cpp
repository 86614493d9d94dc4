#include "nct/cfrac.hpp"
#include "nct/error.hpp"
#include "nct/exact/grammar.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nct;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Interval> enclose_all(const std::vector<QuadInt>& q, mpfr_prec_t prec) {
  std::vector<Interval> out;
  for (const auto& x : q) out.push_back(x.enclose(prec));
  return out;
}

}  // namespace

TEST_SUITE("cfrac") {

TEST_CASE("continued fraction expansion") {
  const CfExpansion r2 = cf_expand(QuadInt::sqrt(2));
  CHECK(r2.preperiod == ints({1}));
  CHECK(r2.period == ints({2}));
  const CfExpansion phi = cf_expand(QuadInt(1, 1, 2, 5));
  CHECK(phi.preperiod.empty());
  CHECK(phi.period == ints({1}));
  const CfExpansion r3 = cf_expand(QuadInt::sqrt(3));
  CHECK(r3.preperiod == ints({1}));
  CHECK(r3.period == ints({1, 2}));
  CHECK_THROWS_AS(cf_expand(QuadInt(Rational(7, 3))), DomainError);
}

TEST_CASE("expansion folds back to its input") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  const std::vector<long> radicands{2, 3, 5, 6, 7, 13, 19, 31, 46, 94};
  for (int t = 0; t < 300; ++t) {
    long b = coef(rng);
    if (b == 0) b = 1;
    const QuadInt theta(coef(rng), b, den(rng), radicands[static_cast<std::size_t>(t) % radicands.size()]);
    const CfExpansion cf = cf_expand(theta);
    CHECK_FALSE(cf.period.empty());
    for (std::size_t i = 0; i < cf.period.size(); ++i) CHECK(cf.period[i] >= 1);
    for (std::size_t i = 1; i < cf.preperiod.size(); ++i) CHECK(cf.preperiod[i] >= 1);
    CHECK(cf_value(cf) == theta);
  }
}

TEST_CASE("fundamental units") {
  const UnitData r2 = fundamental_unit(QuadInt::sqrt(2));
  CHECK(r2.epsilon == QuadInt(1, 1, 1, 2));
  CHECK(r2.epsilon.norm() == -1);
  CHECK(r2.order_index == 1);
  const UnitData phi = fundamental_unit(QuadInt(1, 1, 2, 5));
  CHECK(phi.epsilon == QuadInt(1, 1, 2, 5));
  CHECK(phi.epsilon.norm() == -1);
  const UnitData r3 = fundamental_unit(QuadInt::sqrt(3));
  CHECK(r3.epsilon == QuadInt(2, 1, 1, 3));
  CHECK(r3.epsilon.norm() == 1);
  CHECK(fundamental_unit(QuadInt::sqrt(5)).order_index == 2);
  CHECK(fundamental_unit(QuadInt::sqrt(5)).epsilon == QuadInt(2, 1, 1, 5));
  CHECK_THROWS_AS(fundamental_unit(QuadInt(3)), DomainError);
}

TEST_CASE("fundamental units agree with the Pell search for D <= 100") {
  for (long d = 2; d <= 100; ++d) {
    if (is_square(Integer(d))) continue;
    if (split_square(Integer(d)).core != d) continue;  // sqrt(D) must stay Z[sqrt D]
    CAPTURE(d);
    const UnitData u = fundamental_unit(QuadInt::sqrt(d));
    const oracle::PellUnit p = oracle::pell_unit(d, false);
    CHECK(u.epsilon == QuadInt(p.a, p.b, 1, d));
    CHECK(abs(u.epsilon.norm()) == 1);
    CHECK(u.epsilon.norm() == p.norm);
    if (d % 4 == 1) {
      const UnitData h = fundamental_unit(QuadInt(1, 1, 2, d));
      const oracle::PellUnit q = oracle::pell_unit(d, true);
      CHECK(h.epsilon == QuadInt(q.a, q.b, q.den, d));
    }
  }
}

TEST_CASE("unit matrices") {
  const UnitMatrix r2 = unit_matrix_for_theta(QuadInt::sqrt(2));
  CHECK(r2.matrix == parse_matrix("1,1;2,1"));
  CHECK(r2.lambda == QuadInt(1, 1, 1, 2));
  CHECK(r2.power == 1);
  const UnitMatrix phi = unit_matrix_for_theta(QuadInt(1, 1, 2, 5));
  CHECK(phi.matrix == parse_matrix("1,1;1,2"));
  CHECK(phi.power == 2);
  const UnitMatrix r3 = unit_matrix_for_theta(QuadInt::sqrt(3));
  CHECK(r3.matrix == parse_matrix("2,1;3,2"));
  CHECK(r3.lambda == QuadInt(2, 1, 1, 3));
  CHECK_THROWS_AS(unit_matrix_for_theta(QuadInt(2)), DomainError);
  CHECK_THROWS_AS(unit_matrix_for_theta(-QuadInt::sqrt(2)), DomainError);
}

TEST_CASE("unit matrix eigenvector, determinant and positivity on random theta") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> small(-6, 6);
  const std::vector<long> radicands{2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21};
  int done = 0;
  while (done < 120) {
    const long d = radicands[rng() % radicands.size()];
    long b = small(rng);
    if (b == 0) continue;
    const QuadInt theta(small(rng), b, 1, d);
    if (theta.sign() <= 0 || theta.conjugate().sign() >= 0) continue;
    ++done;
    CAPTURE(theta.to_string());
    const UnitMatrix u = unit_matrix_for_theta(theta);
    const IntMatrix& a = u.matrix;
    CHECK(QuadInt(a(0, 0)) + QuadInt(a(0, 1)) * theta == u.lambda);
    CHECK(QuadInt(a(1, 0)) + QuadInt(a(1, 1)) * theta == u.lambda * theta);
    CHECK(abs(det(a)) == 1);
    for (const auto& e : a.entries()) CHECK(e >= 1);
    CHECK_FALSE(positive_matrix_root(a));
  }
}

TEST_CASE("matrix roots") {
  const auto r = positive_matrix_root(parse_matrix("2,3;3,5"));
  REQUIRE(r);
  CHECK(r->k == 2);
  CHECK(r->root == parse_matrix("1,1;1,2"));
  CHECK_FALSE(positive_matrix_root(parse_matrix("1,1;2,1")));
  const auto cube = positive_matrix_root(parse_matrix("1,1;2,1").pow(3));
  REQUIRE(cube);
  CHECK(cube->root.pow(cube->k) == parse_matrix("1,1;2,1").pow(3));
}

TEST_CASE("Jacobi-Perron on cube roots finds a period") {
  const auto theta = parse_real_list("root:2:3;root:4:3", 665);
  const JpState s = jacobi_perron(theta, 100, 665);
  REQUIRE(s.period);
  CHECK(s.heuristic);
  CHECK(s.digits.size() <= 100);
  CHECK(s.period->start == 2);
  CHECK(s.period->length == 1);
  CHECK(s.digits[0] == ints({1, 1}));
  CHECK(s.digits[1] == ints({2, 3}));
  CHECK(s.digits[2] == ints({3, 3}));
  CHECK(period_product(s) == parse_matrix("0,3,1;1,3,0;0,1,0"));
  const auto v = period_eigenvector(s);
  REQUIRE(v.size() == 3);
  CHECK(v[0].lo().to_double() == 1.0);
}

TEST_CASE("Jacobi-Perron without a short period") {
  const auto theta = parse_real_list("sqrt:2;sqrt:3", 665);
  const JpState s = jacobi_perron(theta, 50, 665);
  CHECK_FALSE(s.period);
  CHECK(s.digits.size() == 50);
  CHECK_THROWS_AS(period_product(s), DomainError);
}

TEST_CASE("Jacobi-Perron stops on rational input") {
  const auto theta = parse_real_list("rat:1/2;rat:1/3", 256);
  CHECK_THROWS_AS(jacobi_perron(theta, 20, 256), DomainError);
}

TEST_CASE("Jacobi-Perron in one dimension reproduces the continued fraction") {
  for (const QuadInt& q : {QuadInt::sqrt(2), QuadInt::sqrt(3), QuadInt(1, 1, 2, 5), QuadInt::sqrt(7)}) {
    CAPTURE(q.to_string());
    const CfExpansion cf = cf_expand(q);
    const JpState s = jacobi_perron(enclose_all({q}, 256), 40, 256);
    REQUIRE(s.period);
    std::vector<Integer> flat;
    for (const auto& d : s.digits) flat.push_back(d[0]);
    std::vector<Integer> expected = cf.preperiod;
    while (expected.size() < flat.size()) expected.insert(expected.end(), cf.period.begin(), cf.period.end());
    expected.resize(flat.size());
    CHECK(flat == expected);
    CHECK(s.period->length == cf.period.size());
  }
}

TEST_CASE("period products of one-dimensional states") {
  JpState one;
  one.dimension = 1;
  one.digits = {{Integer(2)}};
  one.period = JpPeriod{0, 1};
  CHECK(period_product(one) == parse_matrix("2,1;1,0"));
  JpState two = one;
  two.digits = {{Integer(1)}, {Integer(2)}};
  two.period = JpPeriod{0, 2};
  CHECK(period_product(two) == parse_matrix("3,1;2,1"));
  JpState empty = one;
  empty.period = JpPeriod{0, 0};
  CHECK_THROWS_AS(period_product(empty), DomainError);
  CHECK(jp_digit_matrix({Integer(2)}) == cf_digit_matrix(2));
}

TEST_CASE("period product of sqrt(2) has eigenvector (1, sqrt(2) - 1)") {
  const JpState s = jacobi_perron(enclose_all({QuadInt::sqrt(2)}, 256), 10, 256);
  REQUIRE(s.period);
  CHECK(period_product(s) == parse_matrix("2,1;1,0"));
  const auto v = period_eigenvector(s);
  CHECK(v[1].overlaps((QuadInt::sqrt(2) - QuadInt(1)).enclose(256)));
}

}  // TEST_SUITE
