#include "nct/lfunc.hpp"

#include "nct/error.hpp"
#include "nct/exact/poly.hpp"
#include "nct/zlinalg/zlinalg.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace nct {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

LocalFrobenius build_lp(const IntMatrix& a, const Integer& p) {
  a.require_square("build_lp");
  if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");
  const Integer d = det(a);
  if (d != 1 && d != -1) throw DomainError("build_lp needs |det A| = 1, got det " + to_string(d));
  if (!p.fits_ulong_p()) throw DomainError("prime too large");
  const std::size_t n = a.rows() - 1;
  const IntPoly cp = char_poly(a.pow(p.get_ui()));
  LocalFrobenius lp;
  lp.p = p;
  lp.n = n;
  lp.matrix = IntMatrix(n + 1, n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const Integer& c = cp[n + 1 - i];
    lp.matrix(0, i - 1) = (i % 2 == 0) ? c : Integer(-c);
  }
  lp.matrix(0, n) = p;
  for (std::size_t i = 1; i <= n; ++i) lp.matrix(i, i - 1) = -1;
  lp.trace = n >= 1 ? lp.matrix(0, 0) : Integer(0);
  return lp;
}

LocalFrobenius build_lp_root(const Integer& modulus, const Integer& p) {
  if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");
  LocalFrobenius lp;
  lp.p = p;
  lp.n = 0;
  lp.root = RootOfUnity(modulus, p);
  lp.matrix = IntMatrix(1, 1);
  return lp;
}

LocalFactor local_zeta(const LocalFrobenius& lp) {
  LocalFactor f;
  f.p = lp.p;
  if (lp.root) {
    f.denominator = {FactorCoefficient(1), FactorCoefficient(-1, *lp.root)};
    return f;
  }
  const IntPoly d = char_poly(lp.matrix).reversed(lp.n + 1);
  for (std::size_t k = 0; k <= lp.n + 1; ++k) f.denominator.emplace_back(d[k]);
  return f;
}

bool ExcludedPrimes::contains(std::uint64_t p) const {
  return all || std::binary_search(primes.begin(), primes.end(), p);
}

ExcludedPrimes excluded_primes(const IntMatrix& a, std::uint64_t bound) {
  a.require_square("excluded_primes");
  const Integer d = det(a);
  if (d != 1 && d != -1) throw DomainError("excluded_primes needs |det A| = 1, got det " + to_string(d));
  const Integer t = a.trace();
  const Integer dim(static_cast<unsigned long>(a.rows()));
  ExcludedPrimes out;
  out.discriminant = t * t - dim * dim;
  if (out.discriminant == 0) {
    out.all = true;
    return out;
  }
  if (bound < 2) return out;
  for (auto p : primes_up_to(bound)) {
    if (mpz_divisible_ui_p(out.discriminant.get_mpz_t(), p) != 0) out.primes.push_back(p);
  }
  return out;
}

EulerEval euler_product(const FactorSource& source, const Complex& s, std::uint64_t prime_bound,
                        const std::vector<std::uint64_t>& excluded, unsigned threads, mpfr_prec_t precision) {
  std::vector<std::uint64_t> skip = excluded;
  std::sort(skip.begin(), skip.end());
  std::vector<std::uint64_t> primes;
  if (prime_bound >= 2) {
    for (auto p : primes_up_to(prime_bound)) {
      if (!std::binary_search(skip.begin(), skip.end(), p)) primes.push_back(p);
    }
  }
  Complex sp(precision);
  mpfr_set(sp.re.get(), s.re.get(), MPFR_RNDN);
  mpfr_set(sp.im.get(), s.im.get(), MPFR_RNDN);

  std::vector<Complex> local(primes.size(), Complex(precision));
  parallel_for(primes.size(), threads, [&](std::size_t i) {
    const Integer p(primes[i]);
    const LocalFactor f = source(primes[i]);
    const Complex den = f.evaluate(inverse_power(p, sp));
    if (den.is_zero()) throw DomainError("local factor vanishes at p = " + std::to_string(primes[i]));
    local[i] = complex_one(precision) / den;
  });
  Complex value = complex_one(precision);
  for (const auto& v : local) value = value * v;

  EulerEval out;
  out.s = sp;
  out.prime_bound = prime_bound;
  out.value = value;
  out.excluded = skip;
  out.factor_count = primes.size();
  out.precision = precision;
  return out;
}

EulerEval euler_product(const std::vector<LocalFactor>& factors, const Complex& s, std::uint64_t prime_bound,
                        const std::vector<std::uint64_t>& excluded, unsigned threads, mpfr_prec_t precision) {
  std::vector<const LocalFactor*> by_prime;
  for (const auto& f : factors) by_prime.push_back(&f);
  std::sort(by_prime.begin(), by_prime.end(), [](const LocalFactor* x, const LocalFactor* y) { return x->p < y->p; });
  std::vector<std::uint64_t> listed;
  for (const auto* f : by_prime) {
    if (f->p <= prime_bound) listed.push_back(f->p.get_ui());
  }
  // Primes without a supplied factor contribute 1, i.e. behave as excluded.
  std::vector<std::uint64_t> skip = excluded;
  if (prime_bound >= 2) {
    for (auto p : primes_up_to(prime_bound)) {
      if (!std::binary_search(listed.begin(), listed.end(), p)) skip.push_back(p);
    }
  }
  const FactorSource source = [&](std::uint64_t p) {
    const auto it = std::lower_bound(listed.begin(), listed.end(), p);
    return *by_prime[static_cast<std::size_t>(it - listed.begin())];
  };
  EulerEval out = euler_product(source, s, prime_bound, skip, threads, precision);
  std::vector<std::uint64_t> ex = excluded;
  std::sort(ex.begin(), ex.end());
  out.excluded = ex;
  return out;
}

ArtinPair artin_pair_combine(const Complex& v, const Integer& p, const Complex& s) {
  const mpfr_prec_t prec = v.precision();
  Real tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec - 8), MPFR_RNDN);
  if ((v.abs() - Real(Integer(1), prec)).abs() > tol) throw DomainError("Artin pair value must have modulus 1");
  const Complex z = inverse_power(p, s);
  const Complex one = complex_one(prec);
  const Complex vb = v.conj();
  const Complex tr = v + vb;
  const Complex dt = v * vb;
  ArtinPair out{{v, vb}, one - tr * z + dt * z * z, (one - v * z) * (one - vb * z), Complex(prec), Real(prec)};
  out.factor = one / out.det_term;
  out.discrepancy = (out.det_term - out.product_term).abs();
  if (out.discrepancy.to_double() > 1e-25) throw InternalError("Artin pair factors disagree");
  return out;
}

ArtinPair artin_pair_combine(const RootOfUnity& v, const Integer& p, const Complex& s, mpfr_prec_t precision) {
  Complex sp(precision);
  mpfr_set(sp.re.get(), s.re.get(), MPFR_RNDN);
  mpfr_set(sp.im.get(), s.im.get(), MPFR_RNDN);
  const ComplexApprox u = root_of_unity_value(v, precision);
  Complex w = u.value;
  // Normalize the approximation onto the unit circle at working precision.
  const Real m = w.abs();
  w = Complex(w.re / m, w.im / m);
  return artin_pair_combine(w, p, sp);
}

CompareReport compare_report(const IntMatrix& a, const CurveModel& curve, std::uint64_t prime_bound, unsigned threads) {
  CompareReport out;
  out.excluded = excluded_primes(a, prime_bound);
  if (prime_bound < 2) return out;
  std::vector<std::uint64_t> primes;
  for (auto p : primes_up_to(prime_bound)) {
    if (good_reduction(curve, p)) primes.push_back(p);
  }
  out.rows.resize(primes.size());
  parallel_for(primes.size(), threads, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    CompareRow& row = out.rows[i];
    row.p = p;
    row.ap = count_points(curve, p).ap;
    const LocalFrobenius lp = build_lp(a, Integer(p));
    row.tr_ap = lp.trace;
    row.curve_factor = curve_local_factor(curve, p).integer_coefficients();
    row.torus_factor = local_zeta(lp).integer_coefficients();
    row.excluded = out.excluded.contains(p);
    row.equal = row.curve_factor == row.torus_factor;
  });
  return out;
}

}  // namespace nct
