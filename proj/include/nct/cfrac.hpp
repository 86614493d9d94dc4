#pragma once

#include "nct/exact/poly.hpp"
#include "nct/exact/quad_int.hpp"
#include "nct/exact/real.hpp"
#include "nct/zlinalg/matrix.hpp"

#include <optional>
#include <vector>

namespace nct {

/// Eventually periodic simple continued fraction [pre; period...].
struct CfExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

/// Exact expansion of an irrational quadratic number; the period is minimal
/// and detected by repetition of complete quotients.
CfExpansion cf_expand(const QuadInt& theta);

/// Folds an expansion back into the quadratic irrational it represents.
QuadInt cf_value(const CfExpansion& cf);

/// [[a, 1], [1, 0]]
IntMatrix cf_digit_matrix(const Integer& digit);

struct UnitData {
  QuadInt epsilon;          // smallest unit > 1 of the multiplier ring
  Integer order_index;      // conductor f of the ring in the maximal order
  Integer discriminant;     // f^2 times the field discriminant
  IntPoly theta_polynomial; // primitive minimal polynomial of theta
};

/// Fundamental unit of the multiplier ring {x : x(Z + Z theta) in Z + Z theta},
/// which is Z[theta] when theta is an algebraic integer. Computed as the
/// dominant eigenvalue of the product of digit matrices over one period.
UnitData fundamental_unit(const QuadInt& theta);

/// Integer matrix A with A (1, theta)^T = alpha (1, theta)^T. Throws
/// DomainError when alpha does not preserve Z + Z theta.
IntMatrix multiplication_matrix(const QuadInt& alpha, const QuadInt& theta);

struct UnitMatrix {
  IntMatrix matrix;
  QuadInt lambda;           // epsilon^power
  unsigned long power = 1;
  UnitData unit;
};

/// Smallest positive power of the fundamental unit whose multiplication
/// matrix on (1, theta) has all entries >= 1. Needs theta > 0 and a negative
/// conjugate (otherwise no power is positive).
UnitMatrix unit_matrix_for_theta(const QuadInt& theta);

/// A positive integer k-th root (k >= 2) of a 2x2 matrix, if one exists among
/// k <= log2(tr A).
struct MatrixRoot {
  IntMatrix root;
  unsigned long k;
};
std::optional<MatrixRoot> positive_matrix_root(const IntMatrix& a);

struct JpPeriod {
  std::size_t start = 0;
  std::size_t length = 0;
};

/// Jacobi-Perron iteration state. Every working vector is a certified
/// enclosure; period candidates are heuristic (state overlap at the working
/// precision), never proofs.
struct JpState {
  std::size_t dimension = 0;
  mpfr_prec_t precision = 0;
  std::vector<std::vector<Integer>> digits;
  std::vector<std::vector<Interval>> history;  // history[i] produced digits[i]
  std::vector<Interval> current;               // next vector to expand
  std::optional<JpPeriod> period;
  bool heuristic = true;
};

JpState jp_start(std::vector<Interval> theta, mpfr_prec_t precision);

/// One step. Throws DomainError when a fractional part cannot be separated
/// from zero at the working precision.
JpState jp_advance(JpState state);

/// Iterates until a period candidate appears or max_iters steps were taken.
/// n = 1 runs the ordinary continued fraction in the same engine.
JpState jacobi_perron(std::vector<Interval> theta, std::size_t max_iters, mpfr_prec_t precision = 256);

/// (n+1)x(n+1) step matrix for one digit vector: (alpha, 1) is proportional
/// to M (alpha', 1).
IntMatrix jp_digit_matrix(const std::vector<Integer>& digits);

/// Product of step matrices over the period window. When the state carries
/// the working vectors, checks that the vector at the period start is an
/// eigenvector of the product.
IntMatrix period_product(const JpState& state);

/// Eigenvector of the period product implied by the state at the period
/// start, normalized to first coordinate 1.
std::vector<Interval> period_eigenvector(const JpState& state);

}  // namespace nct
