#pragma once

#include "nct/exact/poly.hpp"
#include "nct/exact/quad_int.hpp"
#include "nct/exact/real.hpp"
#include "nct/zlinalg/matrix.hpp"
#include "nct/zlinalg/snf.hpp"

#include <optional>
#include <vector>

namespace nct {

/// det(xI - M), monic of degree dim M (Berkowitz, division-free).
IntPoly char_poly(const IntMatrix& m);

/// Monic invariant factors of the characteristic matrix xI - M over Q[x],
/// in divisibility order (leading ones included).
std::vector<RatPoly> char_matrix_invariants(const IntMatrix& m);

/// Similarity over Q: xI - A and xI - B have the same Smith form over Q[x].
bool similar_via_char_matrix(const IntMatrix& a, const IntMatrix& b);

struct NormalizedEndo {
  IntMatrix normalized;  // (a+d, 1; c-ad, 0)
  IntMatrix conjugator;  // S = (1, 0; d, 1), S^-1 m S = normalized
};

/// For m = (a, 1; c, d) with det m != 0.
NormalizedEndo normalize_endomorphism(const IntMatrix& m);

/// Inverse of a unimodular integer matrix (det = +-1).
IntMatrix unimodular_inverse(const IntMatrix& m);

enum class PfMode { Auto, Exact, Interval };

/// Perron-Frobenius eigendata of a strictly positive matrix. The enclosures
/// are always filled; the exact fields only in exact (2x2) mode.
struct PFData {
  std::optional<QuadInt> lambda_exact;
  std::vector<QuadInt> vector_exact;  // first coordinate 1
  Interval lambda;
  std::vector<Interval> vector;       // first coordinate [1, 1]
  mpfr_prec_t precision = 0;
};

/// Exact mode: 2x2, eigenvalue and eigenvector over Q(sqrt(disc)), checked
/// with A v == lambda v. Interval mode: power iteration certified with
/// Collatz-Wielandt bounds for lambda and the Birkhoff contraction bound in
/// Hilbert's projective metric for the eigenvector; starts at 256 bits and
/// doubles up to 4096 bits.
PFData perron_frobenius(const IntMatrix& a, PfMode mode = PfMode::Auto);

}  // namespace nct
