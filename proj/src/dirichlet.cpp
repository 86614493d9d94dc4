#include "nct/dirichlet.hpp"

#include "nct/error.hpp"

#include <unordered_map>

namespace nct {

namespace detail {

struct Component {
  std::uint64_t modulus;  // prime power q
  std::uint64_t generator;
  std::uint64_t order;
  bool minus_one = false;  // the -1 factor of (Z/2^e)^x, e >= 3
};

struct UnitGroupLogs {
  std::uint64_t n = 1;
  std::vector<Component> components;
  // logs[a] holds the discrete log of a on each component.
  std::vector<std::vector<std::uint64_t>> logs;
  std::vector<char> unit;  // gcd(a, n) == 1
};

}  // namespace detail

namespace {

using detail::Component;
using detail::UnitGroupLogs;

constexpr std::uint64_t kMaxModulus = 2000000;

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// Smallest primitive root mod p^e (p odd).
std::uint64_t primitive_root(std::uint64_t p, unsigned e) {
  std::vector<std::uint64_t> qs;
  for (const auto& [q, mult] : factor(Integer(p - 1))) {
    (void)mult;
    qs.push_back(q.get_ui());
  }
  std::uint64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto q : qs) ok = ok && power_mod(g, (p - 1) / q, p) != 1;
    if (ok) break;
  }
  if (e >= 2 && power_mod(g, p - 1, p * p) == 1) g += p;
  return g;
}

std::vector<Component> decompose(std::uint64_t n) {
  std::vector<Component> out;
  for (const auto& [pz, ez] : factor(Integer(n))) {
    const std::uint64_t p = pz.get_ui();
    const unsigned e = ez;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e == 2) out.push_back({4, 3, 2});
      if (e >= 3) {
        out.push_back({q, q - 1, 2, true});
        out.push_back({q, 5, q / 4});
      }
    } else {
      out.push_back({q, primitive_root(p, e), q / p * (p - 1)});
    }
  }
  return out;
}

std::shared_ptr<const UnitGroupLogs> build_logs(std::uint64_t n) {
  if (n < 1) throw DomainError("character modulus must be >= 1");
  if (n > kMaxModulus) throw DomainError("character modulus too large (limit 2000000)");
  auto t = std::make_shared<UnitGroupLogs>();
  t->n = n;
  t->components = decompose(n);
  t->logs.assign(n, {});
  t->unit.assign(n, 0);
  // Per-component discrete log tables.
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> tables;
  for (const auto& c : t->components) {
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    if (!c.minus_one) {
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i < c.order; ++i) {
        table.emplace(x, i);
        x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * c.generator % c.modulus);
      }
    }
    tables.push_back(std::move(table));
  }
  for (std::uint64_t a = 0; a < n; ++a) {
    if (gcd(Integer(a), Integer(n)) != 1) continue;
    std::vector<std::uint64_t> l;
    for (std::size_t i = 0; i < t->components.size(); ++i) {
      const Component& c = t->components[i];
      std::uint64_t r = a % c.modulus;
      if (c.minus_one) {
        l.push_back(r % 4 == 3 ? 1 : 0);
        continue;
      }
      if (i > 0 && t->components[i - 1].minus_one && r % 4 == 3) r = c.modulus - r;
      l.push_back(tables[i].at(r));
    }
    t->logs[a] = std::move(l);
    t->unit[a] = 1;
  }
  return t;
}

std::uint64_t group_order(const UnitGroupLogs& t) {
  std::uint64_t o = 1;
  for (const auto& c : t.components) o *= c.order;
  return o;
}

}  // namespace

std::optional<RootOfUnity> DirichletCharacter::operator()(const Integer& a) const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t());
  const std::uint64_t idx = r.get_ui();
  if (!logs_->unit[idx]) return std::nullopt;
  RootOfUnity v = RootOfUnity::one();
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const auto& c = logs_->components[i];
    v = v * RootOfUnity(Integer(c.order), Integer(exponents_[i]) * Integer(logs_->logs[idx][i]));
  }
  return v;
}

bool DirichletCharacter::is_trivial() const {
  for (auto e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

DirichletCharacter dirichlet_character(std::uint64_t n, std::size_t index) {
  DirichletCharacter chi;
  chi.logs_ = build_logs(n);
  if (index >= group_order(*chi.logs_)) {
    throw DomainError("character index " + std::to_string(index) + " out of range for modulus " + std::to_string(n));
  }
  chi.modulus_ = Integer(n);
  chi.index_ = index;
  std::size_t rest = index;
  for (const auto& c : chi.logs_->components) {
    chi.exponents_.push_back(rest % c.order);
    rest /= c.order;
  }
  return chi;
}

std::vector<DirichletCharacter> dirichlet_character_group(std::uint64_t n) {
  const auto logs = build_logs(n);
  const std::uint64_t order = group_order(*logs);
  std::vector<DirichletCharacter> out;
  out.reserve(order);
  for (std::uint64_t j = 0; j < order; ++j) {
    DirichletCharacter chi;
    chi.logs_ = logs;
    chi.modulus_ = Integer(n);
    chi.index_ = j;
    std::uint64_t rest = j;
    for (const auto& c : logs->components) {
      chi.exponents_.push_back(rest % c.order);
      rest /= c.order;
    }
    out.push_back(std::move(chi));
  }
  return out;
}

LocalFactor dirichlet_local_factor(const DirichletCharacter& chi, const Integer& p) {
  if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");
  LocalFactor f;
  f.p = p;
  f.denominator.emplace_back(Integer(1));
  const auto v = chi(p);
  if (v) f.denominator.emplace_back(Integer(-1), *v);
  return f;
}

}  // namespace nct
