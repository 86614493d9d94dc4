#pragma once

#include "nct/exact/quad_int.hpp"
#include "nct/zlinalg/matrix.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nct {

using QuadMatrix = Matrix<QuadInt>;

/// Skew-symmetric parameter matrix. `numeric` is always present; `exact` only
/// when every entry was given in the quadratic grammar.
struct SkewMatrix {
  std::optional<QuadMatrix> exact;
  Eigen::MatrixXd numeric;

  std::size_t dimension() const { return static_cast<std::size_t>(numeric.rows()); }
  static SkewMatrix from_exact(const QuadMatrix& m);
  static SkewMatrix from_numeric(const Eigen::MatrixXd& m);
};

/// Upper-triangle entries row by row: rows split by `;`, entries by `,`.
/// Entries use the quad grammar (exact) or decimal/`pi` (numeric), e.g.
/// "sqrt:2,0,0;0,0;int:1" is 4x4. A 2x2 matrix is a single entry.
SkewMatrix parse_skew(std::string_view text);

/// Block form (A, B; C, D) of a 2k x 2k integer matrix.
struct RsElement {
  IntMatrix a, b, c, d;

  static RsElement from_matrix(const IntMatrix& g);
  IntMatrix assembled() const;
};

/// g^t F g == F with F = (0, I; I, 0), the Gram matrix of x1 x_{k+1} + ... .
bool check_so_nn(const IntMatrix& g);

/// g^t J g == J with J = (0, I; -I, 0).
bool is_symplectic(const IntMatrix& g);

/// The block embedding of a symplectic (a, b; c, d) into O(2n, 2n):
/// A = diag(a, a), B = (0, b; -b, 0), C = (0, -c; c, 0), D = diag(d, d).
/// For n = 1 this is the action on 2x2 parameter matrices of the boundary.
IntMatrix symplectic_to_rs(const IntMatrix& g);

/// Theta' = (A Theta + B)(C Theta + D)^-1. Exact when Theta is exact; the
/// result must be skew-symmetric. Throws DomainError if C Theta + D is
/// singular.
SkewMatrix apply_rs_action(const RsElement& g, const SkewMatrix& theta);

/// (a theta + b)/(c theta + d) for det = 1.
QuadInt moebius_boundary(const IntMatrix& m, const QuadInt& theta);

struct TorusEntry {
  double value = 0;
  std::optional<QuadInt> exact;
  std::string label;
};

struct NormalTorus {
  std::vector<TorusEntry> thetas;

  static NormalTorus from_exact(const std::vector<QuadInt>& thetas);
  /// Entries that only have a numeric value and a display label (e.g. "pi").
  static NormalTorus from_numeric(const std::vector<double>& values, const std::vector<std::string>& labels = {});
};

struct NormalFormResult {
  NormalTorus torus;
  Eigen::MatrixXd q;  // orthogonal, q^t Theta q = Theta_0
  double residual = 0;
};

/// Block-diagonalizes a generic skew matrix, blocks (0, theta_j; -theta_j, 0)
/// with theta_j > 0 descending. Non-generic input (zero or repeated pairs
/// within 1e-10 relative) throws DomainError.
NormalFormResult normal_form(const SkewMatrix& theta);

/// Theta_0 for the given parameters.
Eigen::MatrixXd normal_block_matrix(const std::vector<double>& thetas);

struct TraceLattice {
  std::vector<std::vector<std::size_t>> subsets;  // indices into thetas
  std::vector<std::string> generators;
  std::vector<double> values;
  std::optional<std::vector<QuadInt>> reduced_basis;
  std::optional<std::string> statement;
};

/// All subset products of the thetas (2^n of them, the empty product first).
TraceLattice trace_lattice(const NormalTorus& t);

enum class Tristate { False, True, Unknown };

struct RmResult {
  Tristate value = Tristate::Unknown;
  std::string description;
};

RmResult has_real_multiplication(const NormalTorus& t);

std::string to_string(Tristate v);

}  // namespace nct
