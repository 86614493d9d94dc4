#pragma once

#include "nct/exact/integer.hpp"
#include "nct/local_factor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nct {

/// y^2 = x^3 + a4 x + a6 over Q, nonsingular.
class CurveModel {
 public:
  /// Throws DomainError when the discriminant vanishes.
  CurveModel(Integer a4, Integer a6, std::optional<long> cm_discriminant = std::nullopt, std::string name = "");

  const Integer& a4() const { return a4_; }
  const Integer& a6() const { return a6_; }
  const std::optional<long>& cm_discriminant() const { return cm_; }
  const std::string& name() const { return name_; }
  /// -16 (4 a4^3 + 27 a6^2)
  const Integer& discriminant() const { return disc_; }
  /// "y^2 = x^3 - x"
  std::string equation() const;

 private:
  Integer a4_;
  Integer a6_;
  std::optional<long> cm_;
  std::string name_;
  Integer disc_;
};

/// "a4,a6"
CurveModel parse_curve(std::string_view text);

/// p > 3 and p does not divide the discriminant. p must be prime.
bool good_reduction(const CurveModel& curve, std::uint64_t p);

struct ApRecord {
  std::uint64_t p = 0;
  std::uint64_t count = 0;  // #E(F_p), point at infinity included
  std::int64_t ap = 0;
};

/// Enumerates x in F_p with Legendre symbols by Euler's criterion.
ApRecord count_points(const CurveModel& curve, std::uint64_t p);

/// 1 - a_p z + p z^2.
LocalFactor curve_local_factor(const CurveModel& curve, std::uint64_t p);

/// y^2 = x^3 - x (CM discriminant -4) and y^2 = x^3 + 1 (-3), then any
/// extra entries in the form "name:a4,a6[:cm]".
std::vector<CurveModel> cm_catalog(const std::vector<std::string>& extra = {});

CurveModel parse_catalog_entry(std::string_view text);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

}  // namespace nct
