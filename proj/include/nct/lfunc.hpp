#pragma once

#include "nct/dirichlet.hpp"
#include "nct/elliptic.hpp"
#include "nct/exact/real.hpp"
#include "nct/exact/root_of_unity.hpp"
#include "nct/local_factor.hpp"
#include "nct/zlinalg/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nct {

/// L_p: first row (a_1, ..., a_n, p), subdiagonal -1, zero elsewhere, where
/// char(A^p) = x^{n+1} + c_1 x^n + ... and a_i = (-1)^i c_i. For n = 0 the
/// matrix is the 1x1 root of unity `root`.
struct LocalFrobenius {
  Integer p;
  std::size_t n = 0;
  IntMatrix matrix;
  std::optional<RootOfUnity> root;
  Integer trace;  // a_1 = tr(A^p); unused for n = 0
};

/// A square with |det A| = 1, p prime.
LocalFrobenius build_lp(const IntMatrix& a, const Integer& p);

/// n = 0 with the root-of-unity rule A^p = zeta_N^p.
LocalFrobenius build_lp_root(const Integer& modulus, const Integer& p);

/// det(I - L_p z).
LocalFactor local_zeta(const LocalFrobenius& lp);

struct ExcludedPrimes {
  Integer discriminant;  // tr(A)^2 - (n+1)^2
  bool all = false;      // discriminant 0: every prime excluded
  std::vector<std::uint64_t> primes;

  bool contains(std::uint64_t p) const;
};

ExcludedPrimes excluded_primes(const IntMatrix& a, std::uint64_t bound);

struct EulerEval {
  Complex s;
  std::uint64_t prime_bound = 0;
  Complex value;
  std::vector<std::uint64_t> excluded;
  std::size_t factor_count = 0;
  mpfr_prec_t precision = 128;
};

using FactorSource = std::function<LocalFactor(std::uint64_t p)>;

/// Product of 1/denominator(p^-s) over primes p <= bound not in `excluded`,
/// ascending p, at `precision` bits. Factors are evaluated on up to `threads`
/// workers; the product itself is always taken sequentially so the result
/// does not depend on the thread count.
EulerEval euler_product(const FactorSource& source, const Complex& s, std::uint64_t prime_bound,
                        const std::vector<std::uint64_t>& excluded, unsigned threads = 1,
                        mpfr_prec_t precision = 128);

/// Same over an explicit list of factors (sorted by p, filtered by bound).
EulerEval euler_product(const std::vector<LocalFactor>& factors, const Complex& s, std::uint64_t prime_bound,
                        const std::vector<std::uint64_t>& excluded, unsigned threads = 1,
                        mpfr_prec_t precision = 128);

struct ArtinPair {
  Complex diagonal[2];  // sigma_2(Fr_p) = diag(v, conj v)
  Complex det_term;     // det(I - sigma_2 p^-s) = 1 - tr z + det z^2
  Complex product_term; // (1 - v z)(1 - conj(v) z)
  Complex factor;       // 1 / det_term
  Real discrepancy;     // |det_term - product_term|
};

/// Throws DomainError unless |v| = 1 within 2^-(precision-8); throws
/// InternalError if the two evaluations disagree beyond 1e-25.
ArtinPair artin_pair_combine(const Complex& v, const Integer& p, const Complex& s);
ArtinPair artin_pair_combine(const RootOfUnity& v, const Integer& p, const Complex& s, mpfr_prec_t precision = 128);

struct CompareRow {
  std::uint64_t p = 0;
  std::int64_t ap = 0;
  Integer tr_ap;
  std::vector<Integer> curve_factor;
  std::vector<Integer> torus_factor;
  bool excluded = false;
  bool equal = false;
};

struct CompareReport {
  ExcludedPrimes excluded;
  std::vector<CompareRow> rows;
};

/// One row per good prime p <= bound (p > 3, p not dividing the curve
/// discriminant), ascending. Excluded primes are kept and flagged.
CompareReport compare_report(const IntMatrix& a, const CurveModel& curve, std::uint64_t prime_bound,
                             unsigned threads = 1);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace nct
