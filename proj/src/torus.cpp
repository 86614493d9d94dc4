#include "nct/torus.hpp"

#include "nct/error.hpp"
#include "nct/exact/grammar.hpp"
#include "nct/exact/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nct {

namespace {

constexpr double kGenericTolerance = 1e-10;

void require_even_square(const IntMatrix& g, const char* what) {
  if (!g.is_square()) throw DomainError(std::string(what) + " needs a square matrix");
  if (g.rows() % 2 != 0) throw DomainError(std::string(what) + " needs an even dimension");
}

IntMatrix form_matrix(std::size_t k, int lower_sign) {
  IntMatrix f(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    f(i, k + i) = 1;
    f(k + i, i) = lower_sign;
  }
  return f;
}

bool preserves(const IntMatrix& g, const IntMatrix& f) { return g.transpose() * f * g == f; }

bool looks_exact(const std::string& token) {
  if (token.rfind("quad:", 0) == 0 || token.rfind("sqrt:", 0) == 0 || token.rfind("int:", 0) == 0) return true;
  std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  return true;
}

double parse_numeric(const std::string& token) {
  if (token == "pi") return M_PI;
  if (token == "-pi") return -M_PI;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError("cannot parse skew-matrix entry '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(v)) throw ParseError("cannot parse skew-matrix entry '" + token + "'");
  return v;
}

// Row tokens; a `quad:` entry swallows the three pieces that follow it.
std::vector<std::string> row_tokens(const std::string& row) {
  std::vector<std::string> out;
  if (row.empty()) return out;
  const auto pieces = split(row, ',');
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].rfind("quad:", 0) == 0) {
      if (i + 3 >= pieces.size()) throw ParseError("incomplete quad entry in skew matrix");
      out.push_back(pieces[i] + "," + pieces[i + 1] + "," + pieces[i + 2] + "," + pieces[i + 3]);
      i += 3;
    } else {
      out.push_back(pieces[i]);
    }
  }
  return out;
}

// Z-basis of the lattice spanned by integer vectors in Z^2.
std::vector<std::array<Integer, 2>> lattice_basis(std::vector<std::array<Integer, 2>> rows) {
  std::vector<std::array<Integer, 2>> out;
  // Euclid on the second coordinate.
  for (;;) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][1] != 0 && (best == rows.size() || abs(rows[i][1]) < abs(rows[best][1]))) best = i;
    }
    if (best == rows.size()) break;
    bool reduced = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best || rows[i][1] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][1].get_mpz_t(), rows[best][1].get_mpz_t());
      rows[i][0] -= q * rows[best][0];
      rows[i][1] -= q * rows[best][1];
      reduced = true;
    }
    if (!reduced) break;
  }
  std::array<Integer, 2> pivot{0, 0};
  Integer h = 0;
  for (const auto& r : rows) {
    if (r[1] != 0) {
      pivot = r;
    } else {
      h = gcd(h, r[0]);
    }
  }
  if (pivot[1] < 0) pivot = {-pivot[0], -pivot[1]};
  if (h != 0) {
    out.push_back({h, 0});
    if (pivot[1] != 0) {
      Integer u;
      mpz_fdiv_r(u.get_mpz_t(), pivot[0].get_mpz_t(), h.get_mpz_t());
      pivot[0] = u;
    }
  }
  if (pivot[1] != 0) out.push_back(pivot);
  return out;
}

}  // namespace

SkewMatrix SkewMatrix::from_exact(const QuadMatrix& m) {
  SkewMatrix s;
  s.exact = m;
  s.numeric.resize(static_cast<long>(m.rows()), static_cast<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.numeric(static_cast<long>(i), static_cast<long>(j)) = m(i, j).to_double();
  return s;
}

SkewMatrix SkewMatrix::from_numeric(const Eigen::MatrixXd& m) {
  SkewMatrix s;
  s.numeric = m;
  return s;
}

SkewMatrix parse_skew(std::string_view text) {
  const auto rows = split(text, ';');
  const std::size_t m = rows.size() + 1;
  std::vector<std::vector<std::string>> tokens;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    tokens.push_back(row_tokens(rows[i]));
    if (tokens.back().size() != m - 1 - i) {
      throw ParseError("skew matrix row " + std::to_string(i + 1) + " needs " + std::to_string(m - 1 - i) + " entries");
    }
  }
  bool exact = true;
  for (const auto& r : tokens)
    for (const auto& t : r) exact = exact && looks_exact(t);
  if (exact) {
    QuadMatrix q(m, m);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      for (std::size_t k = 0; k < tokens[i].size(); ++k) {
        const std::size_t j = i + 1 + k;
        q(i, j) = parse_quad(tokens[i][k]);
        q(j, i) = -q(i, j);
      }
    }
    return SkewMatrix::from_exact(q);
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<long>(m), static_cast<long>(m));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t k = 0; k < tokens[i].size(); ++k) {
      const long r = static_cast<long>(i);
      const long c = static_cast<long>(i + 1 + k);
      d(r, c) = looks_exact(tokens[i][k]) ? parse_quad(tokens[i][k]).to_double() : parse_numeric(tokens[i][k]);
      d(c, r) = -d(r, c);
    }
  }
  return SkewMatrix::from_numeric(d);
}

RsElement RsElement::from_matrix(const IntMatrix& g) {
  require_even_square(g, "RS element");
  const std::size_t k = g.rows() / 2;
  return {g.block(0, 0, k, k), g.block(0, k, k, k), g.block(k, 0, k, k), g.block(k, k, k, k)};
}

IntMatrix RsElement::assembled() const {
  const std::size_t k = a.rows();
  IntMatrix g(2 * k, 2 * k);
  g.set_block(0, 0, a);
  g.set_block(0, k, b);
  g.set_block(k, 0, c);
  g.set_block(k, k, d);
  return g;
}

bool check_so_nn(const IntMatrix& g) {
  require_even_square(g, "check_so_nn");
  return preserves(g, form_matrix(g.rows() / 2, 1));
}

bool is_symplectic(const IntMatrix& g) {
  require_even_square(g, "is_symplectic");
  return preserves(g, form_matrix(g.rows() / 2, -1));
}

IntMatrix symplectic_to_rs(const IntMatrix& g) {
  require_even_square(g, "symplectic_to_rs");
  const RsElement s = RsElement::from_matrix(g);
  const std::size_t n = s.a.rows();
  RsElement out{IntMatrix(2 * n, 2 * n), IntMatrix(2 * n, 2 * n), IntMatrix(2 * n, 2 * n), IntMatrix(2 * n, 2 * n)};
  out.a.set_block(0, 0, s.a);
  out.a.set_block(n, n, s.a);
  out.b.set_block(0, n, s.b);
  out.b.set_block(n, 0, -s.b);
  out.c.set_block(0, n, -s.c);
  out.c.set_block(n, 0, s.c);
  out.d.set_block(0, 0, s.d);
  out.d.set_block(n, n, s.d);
  return out.assembled();
}

SkewMatrix apply_rs_action(const RsElement& g, const SkewMatrix& theta) {
  const std::size_t k = theta.dimension();
  if (g.a.rows() != k) throw DomainError("RS element block size does not match the parameter matrix");
  if (theta.exact) {
    const auto lift = [](const IntMatrix& m) {
      QuadMatrix q(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = QuadInt(m(i, j));
      return q;
    };
    const QuadMatrix& t = *theta.exact;
    const QuadMatrix num = lift(g.a) * t + lift(g.b);
    const QuadMatrix den = lift(g.c) * t + lift(g.d);
    QuadMatrix inv;
    try {
      inv = inverse(den);
    } catch (const DomainError&) {
      throw DomainError("C*Theta + D is singular");
    }
    const QuadMatrix out = num * inv;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (out(i, j) != -out(j, i)) throw DomainError("action result is not skew-symmetric; element is not in O(k,k)");
      }
    return SkewMatrix::from_exact(out);
  }
  const auto lift = [](const IntMatrix& m) {
    Eigen::MatrixXd d(static_cast<long>(m.rows()), static_cast<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) d(static_cast<long>(i), static_cast<long>(j)) = m(i, j).get_d();
    return d;
  };
  const Eigen::MatrixXd& t = theta.numeric;
  const Eigen::MatrixXd num = lift(g.a) * t + lift(g.b);
  const Eigen::MatrixXd den = lift(g.c) * t + lift(g.d);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(den);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw DomainError("C*Theta + D is singular");
  const Eigen::MatrixXd out = num * lu.inverse();
  const double scale = std::max(1.0, out.norm());
  if ((out + out.transpose()).norm() > 1e-9 * scale) {
    throw DomainError("action result is not skew-symmetric; element is not in O(k,k)");
  }
  return SkewMatrix::from_numeric(0.5 * (out - out.transpose()));
}

QuadInt moebius_boundary(const IntMatrix& m, const QuadInt& theta) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("Moebius action needs a 2x2 matrix");
  if (det(m) != 1) throw DomainError("Moebius action needs determinant 1");
  const QuadInt den = QuadInt(m(1, 0)) * theta + QuadInt(m(1, 1));
  if (den.is_zero()) throw DomainError("theta is the pole of the Moebius map");
  return (QuadInt(m(0, 0)) * theta + QuadInt(m(0, 1))) / den;
}

NormalTorus NormalTorus::from_exact(const std::vector<QuadInt>& thetas) {
  NormalTorus t;
  for (const auto& q : thetas) t.thetas.push_back({q.to_double(), q, q.to_string()});
  return t;
}

NormalTorus NormalTorus::from_numeric(const std::vector<double>& values, const std::vector<std::string>& labels) {
  NormalTorus t;
  for (std::size_t i = 0; i < values.size(); ++i) {
    t.thetas.push_back({values[i], std::nullopt, i < labels.size() ? labels[i] : std::string()});
  }
  return t;
}

Eigen::MatrixXd normal_block_matrix(const std::vector<double>& thetas) {
  const long m = static_cast<long>(2 * thetas.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const long i = static_cast<long>(2 * j);
    out(i, i + 1) = thetas[j];
    out(i + 1, i) = -thetas[j];
  }
  return out;
}

NormalFormResult normal_form(const SkewMatrix& theta) {
  const Eigen::MatrixXd& m = theta.numeric;
  const long dim = m.rows();
  if (dim == 0 || dim % 2 != 0) throw DomainError("normal form needs an even-dimensional skew matrix");
  if ((m + m.transpose()).norm() != 0) throw DomainError("matrix is not skew-symmetric");
  const double scale = m.norm();
  if (scale == 0) throw DomainError("zero matrix is not generic");
  const long n = dim / 2;

  bool block_diagonal = true;
  for (long i = 0; i < dim && block_diagonal; ++i)
    for (long j = 0; j < dim; ++j) {
      if (i / 2 != j / 2 && m(i, j) != 0) {
        block_diagonal = false;
        break;
      }
    }

  Eigen::MatrixXd u;
  std::vector<double> values;
  bool exact_blocks = block_diagonal;
  if (block_diagonal) {
    u = Eigen::MatrixXd::Identity(dim, dim);
    for (long j = 0; j < n; ++j) values.push_back(m(2 * j, 2 * j + 1));
  } else {
    Eigen::RealSchur<Eigen::MatrixXd> schur(m);
    const Eigen::MatrixXd& t = schur.matrixT();
    u = schur.matrixU();
    long i = 0;
    while (i < dim) {
      if (i + 1 < dim && t(i + 1, i) != 0) {
        const double b = t(i, i + 1);
        const double c = t(i + 1, i);
        if (b * c >= 0) throw DomainError("Schur block has real eigenvalues; matrix is not generic");
        values.push_back(std::copysign(std::sqrt(-b * c), b));
        i += 2;
      } else {
        throw DomainError("zero eigenvalue pair; matrix is not generic");
      }
    }
  }
  // Orient each block so that theta_j > 0, then sort descending.
  for (long j = 0; j < n; ++j) {
    if (values[static_cast<std::size_t>(j)] < 0) {
      u.col(2 * j + 1) *= -1;
      values[static_cast<std::size_t>(j)] = -values[static_cast<std::size_t>(j)];
    }
  }
  std::vector<long> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](long x, long y) { return values[static_cast<std::size_t>(x)] > values[static_cast<std::size_t>(y)]; });
  Eigen::MatrixXd q(dim, dim);
  std::vector<double> sorted;
  for (long j = 0; j < n; ++j) {
    const long src = order[static_cast<std::size_t>(j)];
    q.col(2 * j) = u.col(2 * src);
    q.col(2 * j + 1) = u.col(2 * src + 1);
    sorted.push_back(values[static_cast<std::size_t>(src)]);
  }
  const double top = sorted.front();
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted[j] <= kGenericTolerance * top) throw DomainError("zero eigenvalue pair; matrix is not generic");
    if (j > 0 && sorted[j - 1] - sorted[j] <= kGenericTolerance * top) {
      throw DomainError("repeated eigenvalue pair; matrix is not generic");
    }
  }

  NormalFormResult out;
  out.torus = NormalTorus::from_numeric(sorted);
  out.q = q;
  const Eigen::MatrixXd theta0 = normal_block_matrix(sorted);
  if (exact_blocks) {
    out.residual = (q.transpose() * m * q - theta0).norm();
  } else {
    // Computed residual plus a rounding allowance for forming Q^t M Q.
    const double eps = std::numeric_limits<double>::epsilon();
    out.residual = (q.transpose() * m * q - theta0).norm() + 4.0 * static_cast<double>(dim) * eps * scale;
  }
  return out;
}

TraceLattice trace_lattice(const NormalTorus& t) {
  const std::size_t n = t.thetas.size();
  if (n > 20) throw DomainError("trace lattice limited to n <= 20");
  TraceLattice out;
  bool all_exact = true;
  std::optional<Integer> field;
  for (const auto& e : t.thetas) {
    all_exact = all_exact && e.exact.has_value();
    if (!all_exact || e.exact->is_rational()) continue;
    if (field && *field != e.exact->radicand()) all_exact = false;  // no common quadratic field
    field = e.exact->radicand();
  }
  std::vector<QuadInt> products;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    std::string name;
    double value = 1;
    QuadInt prod(1);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask & (std::size_t{1} << i)) == 0) continue;
      subset.push_back(i);
      const std::string label = n == 1 && !t.thetas[i].label.empty() ? t.thetas[i].label : "theta_" + std::to_string(i + 1);
      name += name.empty() ? label : "*" + label;
      value *= t.thetas[i].value;
      if (all_exact) prod = prod * *t.thetas[i].exact;
    }
    out.subsets.push_back(subset);
    out.generators.push_back(name.empty() ? "1" : name);
    out.values.push_back(value);
    if (all_exact) products.push_back(prod);
  }
  if (!all_exact || n == 0) return out;

  const QuadInt& first = *t.thetas[0].exact;
  if (n == 1 && !first.is_rational()) {
    out.reduced_basis = std::vector<QuadInt>{QuadInt(1), first};
    if (first.is_algebraic_integer()) out.statement = "tau(K0) = Z + " + first.to_string() + " Z";
    return out;
  }
  const Integer radicand = field.value_or(Integer(2));
  Integer denom = 1;
  for (const auto& p : products) denom = lcm(denom, p.c());
  std::vector<std::array<Integer, 2>> rows;
  for (const auto& p : products) rows.push_back({p.a() * (denom / p.c()), p.b() * (denom / p.c())});
  std::vector<QuadInt> basis;
  for (const auto& r : lattice_basis(rows)) basis.emplace_back(r[0], r[1], denom, radicand);
  out.reduced_basis = basis;
  return out;
}

RmResult has_real_multiplication(const NormalTorus& t) {
  RmResult out;
  std::string orders;
  for (std::size_t i = 0; i < t.thetas.size(); ++i) {
    const auto& e = t.thetas[i];
    if (!e.exact) {
      out.value = Tristate::Unknown;
      out.description = "entry " + std::to_string(i + 1) + (e.label.empty() ? "" : " (" + e.label + ")") +
                        " has no declared minimal polynomial";
      return out;
    }
  }
  for (const auto& e : t.thetas) {
    const QuadInt& q = *e.exact;
    if (q.is_rational() || !q.is_algebraic_integer()) {
      out.value = Tristate::False;
      out.description = q.to_string() + " is not a real quadratic integer (minimal polynomial " +
                        minimal_polynomial(q).to_string() + ")";
      return out;
    }
    orders += (orders.empty() ? "" : ", ") + std::string("Z[") + q.to_string() + "]";
  }
  out.value = Tristate::True;
  out.description = (t.thetas.size() == 1 ? "endomorphisms by the order " : "endomorphisms by the orders ") + orders;
  return out;
}

std::string to_string(Tristate v) {
  switch (v) {
    case Tristate::True:
      return "true";
    case Tristate::False:
      return "false";
    case Tristate::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace nct
