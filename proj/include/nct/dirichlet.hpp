#pragma once

#include "nct/exact/integer.hpp"
#include "nct/exact/root_of_unity.hpp"
#include "nct/local_factor.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace nct {

namespace detail {
struct UnitGroupLogs;
}

/// Dirichlet character mod N built from a fixed generator decomposition of
/// (Z/NZ)^x: cyclic components ordered by prime, and for 2^e with e >= 3 the
/// pair -1, 5. Character number j is read in mixed radix over the component
/// orders, first component least significant.
class DirichletCharacter {
 public:
  const Integer& modulus() const { return modulus_; }
  std::size_t index() const { return index_; }
  /// Exponent of the character on each component.
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }

  /// chi(a); nullopt when gcd(a, N) > 1.
  std::optional<RootOfUnity> operator()(const Integer& a) const;
  bool is_trivial() const;

 private:
  friend std::vector<DirichletCharacter> dirichlet_character_group(std::uint64_t n);
  friend DirichletCharacter dirichlet_character(std::uint64_t n, std::size_t index);

  Integer modulus_;
  std::size_t index_ = 0;
  std::vector<std::uint64_t> exponents_;
  std::shared_ptr<const detail::UnitGroupLogs> logs_;
};

/// All phi(N) characters in index order; index 0 is trivial.
std::vector<DirichletCharacter> dirichlet_character_group(std::uint64_t n);

/// Character number `index` mod N (0 <= index < phi(N)).
DirichletCharacter dirichlet_character(std::uint64_t n, std::size_t index);

/// 1 - chi(p) z, or 1 when p | N.
LocalFactor dirichlet_local_factor(const DirichletCharacter& chi, const Integer& p);

}  // namespace nct
