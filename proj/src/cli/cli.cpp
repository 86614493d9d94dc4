#include "nct/cli.hpp"

#include "nct/cfrac.hpp"
#include "nct/dirichlet.hpp"
#include "nct/elliptic.hpp"
#include "nct/error.hpp"
#include "nct/exact/grammar.hpp"
#include "nct/lfunc.hpp"
#include "nct/teich.hpp"
#include "nct/torus.hpp"
#include "nct/zlinalg/snf.hpp"
#include "nct/zlinalg/zlinalg.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace nct::cli {

namespace {

struct Flags {
  std::string format;
  std::string out;
  std::optional<long> precision;
  std::string config;
  unsigned threads = 1;
  std::string theta;
  std::string matrix;
  std::string curve;
  std::string prime;
  std::optional<std::uint64_t> modulus;
  std::size_t character = 0;
  std::string s = "2";
  std::optional<std::uint64_t> prime_bound;
  std::string n = "1";
  std::size_t max_iters = 100;
};

struct RunConfig {
  std::string command;
  std::string format = "json";
  std::string out;
  std::optional<long> precision;  // resolved later against the command default
  std::uint64_t prime_bound = 1000;
  unsigned threads = 1;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto parts = split(line, '=');
    if (parts.size() != 2) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string& key = parts[0];
    const std::string& value = parts[1];
    if (key != "precision" && key != "prime_bound" && key != "output_format") {
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    kv[key] = value;
  }
  return kv;
}

long parse_long(const std::string& text, const char* what) {
  const Integer v = parse_integer(text);
  if (!v.fits_slong_p()) throw ParseError(std::string(what) + " out of range");
  return v.get_si();
}

RunConfig resolve(const std::string& command, const Flags& f) {
  RunConfig rc;
  rc.command = command;
  rc.out = f.out;
  rc.threads = std::max(1U, f.threads);
  std::map<std::string, std::string> kv;
  if (!f.config.empty()) kv = read_config(f.config);
  if (const char* env = std::getenv("NCT_PRECISION"); env != nullptr && *env != '\0') {
    rc.precision = parse_long(env, "NCT_PRECISION");
  }
  if (kv.count("precision")) rc.precision = parse_long(kv["precision"], "precision");
  if (f.precision) rc.precision = *f.precision;
  if (rc.precision && *rc.precision < 64) throw ParseError("precision must be at least 64 bits");
  if (kv.count("prime_bound")) rc.prime_bound = static_cast<std::uint64_t>(parse_long(kv["prime_bound"], "prime_bound"));
  if (f.prime_bound) rc.prime_bound = *f.prime_bound;
  if (rc.prime_bound < 2) throw ParseError("prime bound must be at least 2");
  if (kv.count("output_format")) rc.format = kv["output_format"];
  if (!f.format.empty()) rc.format = f.format;
  if (rc.format != "json" && rc.format != "csv" && rc.format != "text") {
    throw ParseError("output format must be json, csv or text");
  }
  if (rc.format == "csv" && command != "compare") throw ParseError("csv output is only available for compare");
  return rc;
}

mpfr_prec_t precision_or(const RunConfig& rc, mpfr_prec_t fallback) {
  return rc.precision ? static_cast<mpfr_prec_t>(*rc.precision) : fallback;
}

IntMatrix torus_matrix(const Flags& f, Json& j) {
  if (!f.matrix.empty() && !f.theta.empty()) throw ParseError("give either --theta or --matrix, not both");
  if (!f.matrix.empty()) {
    const IntMatrix a = parse_matrix(f.matrix);
    j["matrix_A"] = to_string(a);
    return a;
  }
  if (f.theta.empty()) throw ParseError("--theta or --matrix is required");
  const QuadInt theta = parse_quad(f.theta);
  const UnitMatrix um = unit_matrix_for_theta(theta);
  j["theta"] = theta.to_string();
  j["matrix_A"] = to_string(um.matrix);
  return um.matrix;
}

Json factor_json(const LocalFactor& f) {
  Json a = Json::array();
  for (const auto& c : f.denominator) {
    if (c.unit.real_sign() == 1) {
      a.push_back(number(c.scale));
    } else {
      a.push_back((c.scale == 1 ? std::string() : c.scale.get_str() + "*") + c.unit.to_string());
    }
  }
  return a;
}

Complex parse_s(const std::string& text, mpfr_prec_t prec) {
  const auto parts = split(text, ',');
  if (parts.size() > 2 || parts[0].empty()) throw ParseError("--s is 're' or 're,im'");
  Complex s(prec);
  if (mpfr_set_str(s.re.get(), parts[0].c_str(), 10, MPFR_RNDN) != 0) throw ParseError("cannot parse --s '" + text + "'");
  if (parts.size() == 2 && mpfr_set_str(s.im.get(), parts[1].c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("cannot parse --s '" + text + "'");
  }
  return s;
}

Json cmd_unit(const Flags& f) {
  if (f.theta.empty()) throw ParseError("--theta is required");
  const QuadInt theta = parse_quad(f.theta);
  const UnitMatrix um = unit_matrix_for_theta(theta);
  const CfExpansion cf = cf_expand(theta);
  Json j;
  j["theta"] = theta.to_string();
  j["epsilon"] = um.unit.epsilon.to_string();
  j["epsilon_norm"] = number(um.unit.epsilon.norm().get_num());
  j["epsilon_minimal_polynomial"] = minimal_polynomial(um.unit.epsilon).to_string();
  j["theta_minimal_polynomial"] = um.unit.theta_polynomial.to_string();
  j["discriminant"] = number(um.unit.discriminant);
  j["order_index"] = number(um.unit.order_index);
  j["cf_preperiod"] = numbers(cf.preperiod);
  j["cf_period"] = numbers(cf.period);
  j["matrix"] = to_string(um.matrix);
  j["power"] = um.power;
  j["lambda"] = um.lambda.to_string();
  return j;
}

Json cmd_localzeta(const Flags& f) {
  if (f.prime.empty()) throw ParseError("--prime is required");
  const Integer p = parse_integer(f.prime);
  Json j;
  if (f.modulus) {
    const DirichletCharacter chi = dirichlet_character(*f.modulus, f.character);
    const LocalFactor lf = dirichlet_local_factor(chi, p);
    j["p"] = number(p);
    j["n"] = 0;
    j["modulus"] = *f.modulus;
    j["character"] = f.character;
    const auto v = chi(p);
    j["chi_p"] = v ? v->to_string() : "0";
    j["denominator"] = factor_json(lf);
    return j;
  }
  const IntMatrix a = torus_matrix(f, j);
  const LocalFrobenius lp = build_lp(a, p);
  j["p"] = number(p);
  j["n"] = lp.n;
  j["trAp"] = number(lp.trace);
  j["matrix"] = to_string(lp.matrix);
  j["denominator"] = factor_json(local_zeta(lp));
  return j;
}

Json cmd_lfunction(const Flags& f, const RunConfig& rc, std::ostream& err) {
  const mpfr_prec_t prec = precision_or(rc, 128);
  const Complex s = parse_s(f.s, prec);
  Json j;
  EulerEval e;
  if (f.modulus) {
    const DirichletCharacter chi = dirichlet_character(*f.modulus, f.character);
    j["modulus"] = *f.modulus;
    j["character"] = f.character;
    e = euler_product([&](std::uint64_t p) { return dirichlet_local_factor(chi, Integer(p)); }, s, rc.prime_bound, {},
                      rc.threads, prec);
  } else {
    const IntMatrix a = torus_matrix(f, j);
    const ExcludedPrimes ex = excluded_primes(a, rc.prime_bound);
    if (ex.all) {
      err << "warning: tr(A)^2 = (n+1)^2 for A = " << to_string(a) << "; every prime is excluded\n";
      throw DomainError("degenerate excluded-prime set: the Euler product is empty");
    }
    e = euler_product([&](std::uint64_t p) { return local_zeta(build_lp(a, Integer(p))); }, s, rc.prime_bound,
                      ex.primes, rc.threads, prec);
  }
  j["s"] = f.s;
  j["prime_bound"] = e.prime_bound;
  j["precision"] = e.precision;
  j["factors"] = e.factor_count;
  j["excluded"] = e.excluded;
  j["value"] = complex_json(e.value);
  return j;
}

std::string cmd_compare(const Flags& f, const RunConfig& rc, std::ostream& err) {
  if (f.curve.empty()) throw ParseError("--curve is required");
  const CurveModel curve = parse_curve(f.curve);
  Json meta;
  const IntMatrix a = torus_matrix(f, meta);
  const CompareReport report = compare_report(a, curve, rc.prime_bound, rc.threads);
  if (report.excluded.all) err << "warning: tr(A)^2 = (n+1)^2; every prime is flagged as excluded\n";
  if (rc.format == "csv") return compare_rows_csv(report);
  return dump(compare_rows_json(report));
}

Json cmd_snf(const Flags& f) {
  if (f.matrix.empty()) throw ParseError("--matrix is required");
  const IntMatrix m = parse_matrix(f.matrix);
  const SnfResult r = smith_normal_form(m);
  Json j;
  j["matrix"] = to_string(m);
  j["S"] = to_string(r.S);
  j["U"] = to_string(r.U);
  j["V"] = to_string(r.V);
  j["invariant_factors"] = numbers(invariant_factors(r));
  return j;
}

Json cmd_jp(const Flags& f, const RunConfig& rc) {
  if (f.theta.empty()) throw ParseError("--theta is required (';'-separated coordinates)");
  const mpfr_prec_t prec = precision_or(rc, 256);
  const JpState st = jacobi_perron(parse_real_list(f.theta, prec), f.max_iters, prec);
  Json j;
  j["dimension"] = st.dimension;
  j["precision"] = st.precision;
  j["iterations"] = st.digits.size();
  Json digits = Json::array();
  for (const auto& d : st.digits) digits.push_back(numbers(d));
  j["digits"] = digits;
  j["heuristic"] = true;
  if (st.period) {
    j["period_candidate"] = Json{{"start", st.period->start}, {"length", st.period->length}};
    j["period_product"] = to_string(period_product(st));
    Json v = Json::array();
    for (const auto& x : period_eigenvector(st)) v.push_back(number(x.mid()));
    j["eigenvector"] = v;
  } else {
    j["period_candidate"] = nullptr;
  }
  return j;
}

Json cmd_normalform(const Flags& f) {
  if (f.matrix.empty()) throw ParseError("--matrix is required (upper triangle, rows split by ';')");
  const SkewMatrix sk = parse_skew(f.matrix);
  const NormalFormResult nf = normal_form(sk);
  NormalTorus torus = nf.torus;
  // Already-normal exact input keeps its exact parameters.
  if (sk.exact && nf.residual == 0) {
    std::vector<QuadInt> exact;
    for (std::size_t j = 0; j + 1 < sk.dimension(); j += 2) {
      const QuadInt& v = (*sk.exact)(j, j + 1);
      exact.push_back(v.sign() < 0 ? -v : v);
    }
    std::stable_sort(exact.begin(), exact.end(), [](const QuadInt& x, const QuadInt& y) { return x > y; });
    torus = NormalTorus::from_exact(exact);
  }
  Json j;
  Json thetas = Json::array();
  for (const auto& e : torus.thetas) {
    thetas.push_back(e.exact ? Json(e.exact->to_string()) : number(Real(e.value, 53)));
  }
  j["thetas"] = thetas;
  j["residual"] = number(Real(nf.residual, 53));
  const TraceLattice tl = trace_lattice(torus);
  j["trace_lattice"] = tl.generators;
  if (tl.reduced_basis) {
    Json b = Json::array();
    for (const auto& q : *tl.reduced_basis) b.push_back(q.to_string());
    j["reduced_basis"] = b;
  } else {
    j["reduced_basis"] = nullptr;
  }
  if (tl.statement) j["statement"] = *tl.statement;
  const RmResult rm = has_real_multiplication(torus);
  j["real_multiplication"] = to_string(rm.value);
  j["description"] = rm.description;
  return j;
}

Json cmd_so_check(const Flags& f) {
  if (f.matrix.empty()) throw ParseError("--matrix is required");
  const IntMatrix g = parse_matrix(f.matrix);
  Json j;
  j["matrix"] = to_string(g);
  j["so_nn"] = check_so_nn(g);
  return j;
}

Json cmd_symplectic_check(const Flags& f) {
  if (f.matrix.empty()) throw ParseError("--matrix is required");
  const IntMatrix g = parse_matrix(f.matrix);
  Json j;
  j["matrix"] = to_string(g);
  j["symplectic"] = is_symplectic(g);
  j["so_nn"] = check_so_nn(g);
  j["block_embedding_so_nn"] = check_so_nn(symplectic_to_rs(g));
  return j;
}

Json cmd_functor(const Flags& f) {
  if (f.matrix.empty()) throw ParseError("--matrix is required");
  const IntMatrix m = parse_matrix(f.matrix);
  const NormalizedEndo ne = normalize_endomorphism(m);
  const IntMatrix complex_side = ne.normalized.transpose();
  const EndoMatrix image = functor_on_endo({complex_side, EndoSide::Complex});
  Json j;
  j["input"] = to_string(m);
  j["normalized"] = to_string(ne.normalized);
  j["conjugator"] = to_string(ne.conjugator);
  j["complex_side"] = to_string(complex_side);
  j["image"] = to_string(image.m);
  const QuadInt omega = real_quadratic_from_normalized(image.m);
  j["omega"] = omega.to_string();
  j["trace"] = number(complex_side.trace());
  j["unit_projection"] = to_string(unit_projection(image.m));
  return j;
}

Json cmd_unit_index(const Flags& f) {
  if (f.theta.empty()) throw ParseError("--theta is required");
  const QuadInt theta = parse_quad(f.theta);
  const UnitIndexData d = unit_index(theta, parse_integer(f.n));
  Json j;
  j["theta"] = theta.to_string();
  j["epsilon"] = d.epsilon.to_string();
  j["n"] = number(d.n);
  j["g"] = d.g;
  j["power"] = d.power.to_string();
  return j;
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(rc.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError("cannot open output file '" + rc.out + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative tori with real multiplication: units, local zeta factors and L-function comparisons",
               "nct"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--format", f.format, "json | csv | text");
  app.add_option("--out", f.out, "write the report to this file");
  app.add_option("--precision", f.precision, "working precision in bits (>= 64)");
  app.add_option("--config", f.config, "key=value file: precision, prime_bound, output_format");
  app.add_option("--threads", f.threads, "worker threads for prime sweeps");

  auto* unit = app.add_subcommand("unit", "fundamental unit and positive unit matrix for theta");
  auto* localzeta = app.add_subcommand("localzeta", "local zeta denominator det(I - L_p z)");
  auto* lfunction = app.add_subcommand("lfunction", "partial Euler product");
  auto* compare = app.add_subcommand("compare", "curve vs torus local factors prime by prime");
  auto* snf = app.add_subcommand("snf", "Smith normal form");
  auto* jp = app.add_subcommand("jp", "Jacobi-Perron expansion (heuristic period detection)");
  auto* normalform = app.add_subcommand("normalform", "normal form of a skew-symmetric matrix");
  auto* so_check = app.add_subcommand("so-check", "membership in O(n,n|Z)");
  auto* symplectic = app.add_subcommand("symplectic-check", "membership in Sp(2n,Z)");
  auto* functor = app.add_subcommand("functor", "normalize an endomorphism and apply the functor");
  auto* uindex = app.add_subcommand("unit-index", "least g with epsilon^g in Z + n theta Z");

  for (auto* c : {unit, localzeta, lfunction, compare, uindex}) c->add_option("--theta", f.theta, "theta in the quad grammar");
  jp->add_option("--theta", f.theta, "';'-separated positive coordinates");
  for (auto* c : {localzeta, lfunction}) {
    c->add_option("--modulus", f.modulus, "Dirichlet modulus N (n = 0 mode)");
    c->add_option("--char", f.character, "character index mod N");
  }
  for (auto* c : {localzeta, lfunction, compare, snf, normalform, so_check, symplectic, functor}) {
    c->add_option("--matrix", f.matrix, "matrix, rows split by ';'");
  }
  localzeta->add_option("--prime", f.prime, "prime p");
  lfunction->add_option("--s", f.s, "evaluation point: re or re,im");
  for (auto* c : {lfunction, compare}) c->add_option("--prime-bound", f.prime_bound, "largest prime");
  compare->add_option("--curve", f.curve, "a4,a6");
  uindex->add_option("--n", f.n, "sublattice index n >= 1");
  jp->add_option("--max-iters", f.max_iters, "iteration cap");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 1;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();
  try {
    const RunConfig rc = resolve(command, f);
    std::string text;
    if (command == "compare") {
      text = cmd_compare(f, rc, err);
    } else {
      Json j;
      if (command == "unit") j = cmd_unit(f);
      else if (command == "localzeta") j = cmd_localzeta(f);
      else if (command == "lfunction") j = cmd_lfunction(f, rc, err);
      else if (command == "snf") j = cmd_snf(f);
      else if (command == "jp") j = cmd_jp(f, rc);
      else if (command == "normalform") j = cmd_normalform(f);
      else if (command == "so-check") j = cmd_so_check(f);
      else if (command == "symplectic-check") j = cmd_symplectic_check(f);
      else if (command == "functor") j = cmd_functor(f);
      else j = cmd_unit_index(f);
      text = rc.format == "text" ? dump_text(j) : dump(j);
    }
    emit(rc, text, out);
    return 0;
  } catch (const nct::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace nct::cli
