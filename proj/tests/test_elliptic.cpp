#include "nct/elliptic.hpp"
#include "nct/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace nct;

TEST_SUITE("elliptic") {

TEST_CASE("curve models") {
  const CurveModel e(-1, 0);
  CHECK(e.discriminant() == 64);
  CHECK(e.equation() == "y^2 = x^3 - x");
  CHECK(CurveModel(0, 1).equation() == "y^2 = x^3 + 1");
  CHECK(CurveModel(0, 1).discriminant() == -432);
  CHECK_THROWS_AS(CurveModel(0, 0), DomainError);
  CHECK_THROWS_AS(CurveModel(-3, 2), DomainError);
  CHECK(parse_curve("-1,0").a4() == -1);
  CHECK_THROWS_AS(parse_curve("1"), ParseError);
  CHECK_THROWS_AS(parse_curve("a,b"), ParseError);
}

TEST_CASE("good reduction") {
  const CurveModel e(-1, 0);
  CHECK(good_reduction(e, 5));
  CHECK_FALSE(good_reduction(e, 2));
  CHECK_FALSE(good_reduction(CurveModel(0, 1), 3));
  CHECK_FALSE(good_reduction(CurveModel(1, 1), 31));  // disc = -16 * 31
  CHECK_THROWS_AS(good_reduction(e, 9), DomainError);
}

TEST_CASE("point counts") {
  const CurveModel e(-1, 0);
  const ApRecord r5 = count_points(e, 5);
  CHECK(r5.count == 8);
  CHECK(r5.ap == -2);
  CHECK(count_points(e, 7).ap == 0);
  CHECK(count_points(e, 13).ap == oracle::ap_x3_minus_x().at(13));
  CHECK_THROWS_AS(count_points(e, 3), DomainError);
  for (const auto& [p, ap] : oracle::ap_x3_minus_x())
    if (p > 3) CHECK(count_points(e, p).ap == ap);
}

TEST_CASE("point counts agree with the double-loop count") {
  const std::vector<std::pair<long, long>> curves{{-1, 0}, {0, 1}, {2, 3}, {-7, 6}, {5, -11}};
  for (const auto& [a4, a6] : curves) {
    const CurveModel e(a4, a6);
    for (const auto p : primes_up_to(61)) {
      if (!good_reduction(e, p)) continue;
      CAPTURE(p);
      CHECK(count_points(e, p).count == oracle::naive_point_count(a4, a6, p));
    }
  }
}

TEST_CASE("Hasse bound and supersingular primes") {
  const CurveModel e(-1, 0);
  for (const auto p : primes_up_to(2000)) {
    if (!good_reduction(e, p)) continue;
    const ApRecord r = count_points(e, p);
    CHECK(static_cast<double>(r.ap * r.ap) <= 4.0 * static_cast<double>(p));
    if (p % 4 == 3 && p <= 200) CHECK(r.ap == 0);
  }
}

TEST_CASE("curve local factors") {
  const CurveModel e(-1, 0);
  CHECK(curve_local_factor(e, 5).integer_coefficients() == std::vector<Integer>{1, 2, 5});
  CHECK(curve_local_factor(e, 7).integer_coefficients() == std::vector<Integer>{1, 0, 7});
  CHECK_THROWS_AS(curve_local_factor(e, 2), DomainError);
  for (const auto p : primes_up_to(300)) {
    if (!good_reduction(e, p)) continue;
    const auto c = curve_local_factor(e, p).integer_coefficients();
    CHECK(c[0] + c[1] + c[2] == Integer(static_cast<unsigned long>(count_points(e, p).count)));
  }
}

TEST_CASE("CM catalog") {
  const auto cat = cm_catalog();
  REQUIRE(cat.size() == 2);
  CHECK(cat[0].equation() == "y^2 = x^3 - x");
  CHECK(cat[0].cm_discriminant() == -4);
  CHECK(cat[1].equation() == "y^2 = x^3 + 1");
  CHECK(cat[1].cm_discriminant() == -3);
  for (const auto& c : cat) CHECK(c.discriminant() != 0);
  const auto more = cm_catalog({"twist:-2,0:-4"});
  REQUIRE(more.size() == 3);
  CHECK(more[2].name() == "twist");
  CHECK(more[2].cm_discriminant() == -4);
  CHECK_THROWS_AS(parse_catalog_entry("nope"), ParseError);
  CHECK_THROWS_AS(cm_catalog({"sing:0,0"}), DomainError);
}

TEST_CASE("modular helpers") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(mul_mod(0xFFFFFFFFFFFFFFC5ULL - 1, 2, 0xFFFFFFFFFFFFFFC5ULL) == 0xFFFFFFFFFFFFFFC5ULL - 2);
}

}  // TEST_SUITE
