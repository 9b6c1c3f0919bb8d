#include "polyinv/pipelines.hpp"

#include "polyinv/errors.hpp"
#include "polyinv/linalg.hpp"
#include "polyinv/text.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace polyinv {

namespace {

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool is_zero_matrix(const ScalarMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Scalar& x) { return x.is_zero(); });
}

void require_translation_invariant(const FunctionSpace& v) {
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    const ExpPoly& b = v.basis()[i];
    FunctionSpace closure = translation_closure(b);
    for (const auto& g : closure.basis())
      if (!v.contains(g))
        throw NotInvariantError("translations", i, to_string(b), to_string(v.residual(g)));
  }
}

Rational frac_part(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(x - f);
}

Rational rational_pow(const Rational& x, long k) {
  Rational out = 1, b = x;
  unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
  while (n) {
    if (n & 1u) out *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return k < 0 ? Rational(1 / out) : out;
}

UniPoly<Scalar> unipotent_char_poly(std::size_t n) {
  UniPoly<Scalar> p = UniPoly<Scalar>::constant(Scalar(1));
  for (std::size_t i = 0; i < n; ++i) p = p * UniPoly<Scalar>::linear_root(Scalar(1));
  return p;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a > mpz_class("1000000000000", 10))
    throw Error(ErrorCode::InconclusivePowerClosure, "coefficient too large for rational root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

UniPoly<Rational> cyclotomic(unsigned m) {
  // Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d
  UniPoly<Rational> p = UniPoly<Rational>::monomial(Rational(1), m) - UniPoly<Rational>::constant(Rational(1));
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = p.divmod(cyclotomic(d)).first;
  return p;
}

}  // namespace

// --- annihilator --------------------------------------------------------------

ScalarMatrix evaluate_annihilator(const AnnihilatorReport& r, const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  ScalarMatrix acc(n, n);
  const auto& c = r.base.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc.pow(r.power);
}

UniPoly<Scalar> expand_annihilator(const AnnihilatorReport& r) { return r.base.pow(r.power); }

AnnihilatorReport annihilator_from_space(const FunctionSpace& v, const GroupSpec& spec, const RationalVector& z0,
                                         std::uint64_t seed, const AnnihilatorConfig& config) {
  if (v.dimension() == 0) throw Error(ErrorCode::InvalidArgument, "annihilator needs a nonzero space");
  if (z0.size() != v.ambient_dim() || spec.d != v.ambient_dim())
    throw Error(ErrorCode::Dimension, "space, group and z0 must share the ambient dimension");
  if (is_zero_vector(z0))
    throw Error(ErrorCode::InvalidStart, "z0 = 0: Lambda_{G,0} = {0} has empty interior");

  AnnihilatorReport r;
  r.dimension = v.dimension();
  require_translation_invariant(v);
  r.translation_invariant = true;

  std::vector<RationalMatrix> elements;
  if (spec.is_finite()) {
    elements = finite_group(spec).elements;
    r.group_exhaustive = true;
  } else {
    elements = sample(spec, seed, config.element_samples);
  }
  for (const auto& e : elements) composition_matrix(v, e);
  r.group_elements_checked = elements.size();

  r.char_poly = char_poly(translation_matrix(v, z0));
  r.base = ratio_roots_base(r.char_poly);
  r.power = static_cast<unsigned>(r.dimension);
  r.degree = static_cast<std::size_t>(r.base.degree()) * r.power;
  Scalar a0(1);
  for (unsigned i = 0; i < r.power; ++i) a0 *= r.base.coefficient(0);
  r.constant_term = a0;
  if (a0.is_zero()) throw Error(ErrorCode::Internal, "annihilator has q(0) = 0");

  LambdaSample lam = lambda_sample(spec, z0, config.verify_samples, seed ^ kAnnihilationSeedMix);
  r.annihilation_holds = true;
  for (std::size_t k = 0; k < lam.points.size(); ++k) {
    AnnihilationStep step{lam.points[k], lam.witnesses[k].first, lam.witnesses[k].second, false};
    step.annihilates = is_zero_matrix(evaluate_annihilator(r, translation_matrix(v, lam.points[k])));
    r.annihilation_holds = r.annihilation_holds && step.annihilates;
    r.verified_steps.push_back(std::move(step));
  }

  SplitMix64 rng(seed ^ 0x0FF1A3BDull);
  for (std::size_t k = 0; k < config.off_lambda_probes; ++k) {
    RationalVector z(z0.size());
    for (auto& x : z) x = make_rational(rng.uniform_int(-7, 7), rng.uniform_int(1, 5));
    AnnihilationStep step{z, 0, 0, false};
    step.annihilates = is_zero_matrix(evaluate_annihilator(r, translation_matrix(v, z)));
    r.off_lambda.push_back(std::move(step));
  }

  r.interior = interior_evidence(lambda_sample(spec, z0, config.interior_samples, seed + 1), config.interior);
  r.concluded = r.annihilation_holds && r.interior.verdict == InteriorVerdict::Nonempty;
  if (r.concluded) {
    r.degree_bound = r.degree - 1;
    r.reason = "q(tau_z) = 0 on every sampled z in Lambda and Lambda has interior evidence";
  } else if (!r.annihilation_holds) {
    r.reason = "q(tau_z) is nonzero at a sampled z in Lambda";
  } else {
    r.reason = std::string("annihilation holds on Lambda but the interior test is ") + to_string(r.interior.verdict) +
               ": " + r.interior.reason;
  }
  return r;
}

// --- Frechet / Montel -----------------------------------------------------------

bool frechet_conclusion_check(const ExpPoly& f, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "difference order must be positive");
  Classification c = classify(f);
  if (!c.is_ordinary_polynomial) return false;
  if (n >= 20) return *c.total_degree <= static_cast<long>(n) - 1;
  return mixed_difference_symbolic(f, n).is_zero();
}

MontelReport montel_check(const ExpPoly& f, const std::vector<RationalVector>& steps, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "difference order must be positive");
  if (steps.empty()) throw Error(ErrorCode::InvalidArgument, "step set is empty");
  for (const auto& h : steps) {
    if (h.size() != f.dim()) throw Error(ErrorCode::Dimension, "step dimension differs from f");
    if (is_zero_vector(h)) throw Error(ErrorCode::InvalidArgument, "steps must be nonzero");
  }
  MontelReport r;
  r.hypothesis = true;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<RationalVector> tuple;
    for (std::size_t i : idx) tuple.push_back(steps[i]);
    ++r.tuples_checked;
    if (!mixed_difference(f, tuple).is_zero()) {
      r.hypothesis = false;
      r.failing_tuple = idx;
      break;
    }
    // next nondecreasing index vector
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == steps.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < n; ++j) idx[j] = idx[pos - 1];
  }
  RationalMatrix e(steps.size(), f.dim());
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) e(i, j) = steps[i][j];
  r.steps_span = e.rank() == f.dim();
  r.classification = classify(f);
  r.conclusion = r.classification.is_ordinary_polynomial && r.classification.fdeg &&
                 *r.classification.fdeg <= static_cast<long>(n) - 1;
  return r;
}

std::vector<std::vector<double>> kronecker_generators(std::size_t d, unsigned n) {
  if (d == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "kronecker generators need d, n >= 1");
  std::vector<unsigned> primes;
  for (unsigned c = 2; primes.size() < d; ++c)
    if (std::all_of(primes.begin(), primes.end(), [c](unsigned p) { return c % p != 0; })) primes.push_back(c);
  const double s = 1.0 / n;
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = s;
    out.push_back(e);
  }
  std::vector<double> theta;
  for (unsigned p : primes) theta.push_back(std::sqrt(static_cast<double>(p)) * s);
  out.push_back(theta);
  return out;
}

// --- power-closed sets -------------------------------------------------------

PowerElement PowerElement::make(const Rational& c, const Rational& e, const Rational& theta) {
  if (sgn(c) == 0) throw Error(ErrorCode::InvalidArgument, "power-closed sets cannot contain 0");
  PowerElement x;
  x.c = abs(c);
  x.e = e;
  x.theta = frac_part(sgn(c) < 0 ? Rational(theta + make_rational(1, 2)) : theta);
  return x;
}

PowerElement PowerElement::pow(long k) const {
  PowerElement x;
  x.c = rational_pow(c, k);
  x.e = e * k;
  x.theta = frac_part(Rational(theta * k));
  return x;
}

std::string to_string(const PowerElement& x) {
  const bool real = sgn(x.theta) == 0 || x.theta == make_rational(1, 2);
  std::string out = sgn(x.theta) != 0 && real ? "-" : "";
  std::vector<std::string> parts;
  if (x.c != 1 || (sgn(x.e) == 0 && real)) parts.push_back(to_string(x.c));
  if (sgn(x.e) != 0) parts.push_back("exp(" + to_string(x.e) + ")");
  if (!real) parts.push_back("e^{2 pi i " + to_string(x.theta) + "}");
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

const char* to_string(PowerClosureOutcome o) {
  switch (o) {
    case PowerClosureOutcome::ForcedSingleton: return "forced_singleton";
    case PowerClosureOutcome::PremiseViolated: return "premise_violated";
    case PowerClosureOutcome::CounterexampleStructure: return "counterexample_structure";
  }
  return "?";
}

PowerClosureReport power_closed_analysis(const std::vector<PowerElement>& a, const std::vector<long>& exponents) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "power-closed analysis needs a nonempty set");
  if (exponents.empty()) throw Error(ErrorCode::InvalidArgument, "power-closed analysis needs exponents");
  std::set<PowerElement> set;
  for (const auto& x : a) {
    if (sgn(x.c) <= 0) throw Error(ErrorCode::InvalidArgument, "power-closed sets cannot contain 0");
    set.insert(PowerElement::make(x.c, x.e, x.theta));
  }
  PowerClosureReport r;
  r.set.assign(set.begin(), set.end());
  for (long k : exponents) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "exponent 0 is not allowed");
    std::set<PowerElement> image;
    for (const auto& x : set) image.insert(x.pow(k));
    if (image != set) {
      r.outcome = PowerClosureOutcome::PremiseViolated;
      r.violating_exponent = k;
      r.violating_image.assign(image.begin(), image.end());
      r.detail = "phi_" + std::to_string(k) + "(A) differs from A";
      return r;
    }
  }
  if (set.size() == 1 && *set.begin() == PowerElement{}) {
    r.outcome = PowerClosureOutcome::ForcedSingleton;
    r.detail = "A = {1}";
  } else {
    r.outcome = PowerClosureOutcome::CounterexampleStructure;
    r.detail = "A = phi_k(A) for every given k but A != {1}; forcing A = {1} needs the exponent differences "
               "m - n to lie in the exponent set as well";
  }
  return r;
}

std::vector<PowerElement> supported_roots(const UniPoly<Rational>& p) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "polynomial has no roots");
  if (sgn(p.coefficient(0)) == 0) throw Error(ErrorCode::InvalidArgument, "power-closed sets cannot contain 0");
  std::vector<PowerElement> roots;
  UniPoly<Rational> rest = p.monic();

  // rational roots of the integer-scaled polynomial
  auto integer_coeffs = [](const UniPoly<Rational>& q) {
    mpz_class l = 1;
    for (const auto& c : q.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : q.coefficients()) out.push_back(mpz_class(Rational(c * l)));
    return out;
  };
  bool found = true;
  while (found && rest.degree() >= 1) {
    found = false;
    std::vector<mpz_class> ic = integer_coeffs(rest);
    for (const auto& num : divisors(ic.front())) {
      for (const auto& den : divisors(ic.back())) {
        for (int s : {1, -1}) {
          Rational x(mpz_class(s * num), den);
          x.canonicalize();
          if (sgn(rest(x)) == 0) {
            roots.push_back(PowerElement::make(x));
            rest = rest.divmod(UniPoly<Rational>::linear_root(x)).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  for (unsigned m = 3; m <= 64 && rest.degree() >= 1; ++m) {
    UniPoly<Rational> phi = cyclotomic(m);
    while (rest.degree() >= phi.degree()) {
      auto [quot, rem] = rest.divmod(phi);
      if (!rem.is_zero()) break;
      rest = quot;
      for (unsigned j = 1; j < m; ++j)
        if (std::gcd(j, m) == 1) roots.push_back(PowerElement::make(Rational(1), Rational(0), make_rational(j, m)));
    }
  }
  if (rest.degree() >= 1)
    throw Error(ErrorCode::InconclusivePowerClosure,
                "factor " + to_string(rest) + " has roots outside the supported domain");
  return roots;
}

PowerClosureReport power_closed_analysis(const UniPoly<Rational>& p, const std::vector<long>& exponents) {
  return power_closed_analysis(supported_roots(p), exponents);
}

// --- dilations ----------------------------------------------------------------

DilationReport dilation_pipeline(const FunctionSpace& v, const std::vector<long>& ks, const RationalVector& h) {
  if (v.dimension() == 0) throw Error(ErrorCode::InvalidArgument, "dilation pipeline needs a nonzero space");
  if (h.size() != v.ambient_dim()) throw Error(ErrorCode::Dimension, "step dimension differs from the space");
  if (is_zero_vector(h)) throw Error(ErrorCode::InvalidArgument, "step h must be nonzero");
  if (ks.empty()) throw Error(ErrorCode::InvalidArgument, "dilation pipeline needs dilation factors");
  for (long k : ks)
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "dilation factors must be >= 2");

  const std::size_t d = v.ambient_dim();
  DilationReport r;
  r.dimension = v.dimension();
  r.ks = ks;
  require_translation_invariant(v);
  for (long k : ks) composition_matrix(v, Rational(k) * RationalMatrix::identity(d));

  ScalarMatrix m = translation_matrix(v, h);
  r.char_poly = char_poly(m);
  for (long k : ks) {
    RationalVector kh(h);
    for (auto& x : kh) x *= k;
    r.char_poly_matches.push_back(char_poly(translation_matrix(v, kh)) == char_poly(m.pow(static_cast<unsigned>(k))));
  }

  // The spectrum of tau_h is {exp(<lambda, h>)} over the frequencies of V.
  std::vector<PowerElement> spectrum;
  for (const auto& b : v.basis())
    for (const auto& [lambda, poly] : b.terms()) {
      Rational e = dot(lambda, h);
      if (!r.char_poly(Scalar(FormalExp::exp(e))).is_zero())
        throw Error(ErrorCode::Internal, "frequency " + to_string(lambda) + " does not give an eigenvalue");
      spectrum.push_back(PowerElement::make(Rational(1), e));
    }
  r.spectrum = power_closed_analysis(spectrum, ks);
  if (r.spectrum.outcome == PowerClosureOutcome::CounterexampleStructure)
    throw Error(ErrorCode::InconclusivePowerClosure, "spectrum " + to_string(r.spectrum.set.front()) +
                                                         "... is power-closed without being {1}");
  r.power_closure_holds = r.spectrum.outcome == PowerClosureOutcome::ForcedSingleton;
  r.unipotent = r.char_poly == unipotent_char_poly(r.dimension);
  if (r.power_closure_holds) {
    std::vector<RationalVector> steps(r.dimension, h);
    bool all = true;
    for (const auto& b : v.basis()) all = all && mixed_difference(b, steps).is_zero();
    r.unmixed_check = all;
  }
  bool matches = std::all_of(r.char_poly_matches.begin(), r.char_poly_matches.end(), [](bool b) { return b; });
  r.concluded = matches && r.power_closure_holds && r.unipotent && r.unmixed_check.value_or(false);
  if (r.concluded) r.functional_degree_bound = r.dimension - 1;
  return r;
}

// --- degree bounds -------------------------------------------------------------

DegreeBounds degree_bounds(std::size_t dim_rg, std::size_t d) {
  if (dim_rg == 0 || d == 0) throw Error(ErrorCode::InvalidArgument, "degree bounds need dim >= 1 and d >= 1");
  DegreeBounds b;
  b.dim_rg = dim_rg;
  b.d = d;
  b.upper = dim_rg - 1;
  const mpz_class dim(static_cast<unsigned long>(dim_rg));
  mpz_class root;
  int exact = mpz_root(root.get_mpz_t(), dim.get_mpz_t(), static_cast<unsigned long>(d));
  // smallest n with (n+1)^d >= dim
  b.lower = static_cast<std::size_t>(root.get_ui()) - (exact ? 1 : 0);

  mpz_class c;
  for (unsigned long n = 0;; ++n) {
    mpz_bin_uiui(c.get_mpz_t(), n + d, d);
    if (c == dim) b.binomial_n = n;
    if (c >= dim) break;
  }
  if (b.binomial_n) {
    mpz_class fact, prod;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    prod = fact * dim;
    mpz_root(root.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(d));
    b.refined = static_cast<std::size_t>(root.get_ui()) - 1;
  }
  return b;
}

// --- commuting spectra -----------------------------------------------------------

namespace {

CommutingSpectraReport match_spectra(const std::vector<std::complex<double>>& lt,
                                     const std::vector<std::complex<double>>& ls,
                                     const std::vector<std::complex<double>>& lts, double tol) {
  const std::size_t n = lts.size();
  CommutingSpectraReport r;
  std::vector<bool> used_t(n), used_s(n);
  std::vector<SpectraMatch> current;
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used_t[j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (used_s[k]) continue;
        double err = std::abs(lts[i] - lt[j] * ls[k]) / std::max(1.0, std::abs(lts[i]));
        if (err > tol) continue;
        used_t[j] = used_s[k] = true;
        current.push_back({lt[j], ls[k], lts[i]});
        if (search(i + 1)) return true;
        current.pop_back();
        used_t[j] = used_s[k] = false;
      }
    }
    return false;
  };
  r.found = search(0);
  if (r.found) {
    r.matching = current;
    for (const auto& m : current)
      r.max_error = std::max(r.max_error, std::abs(m.ts - m.t * m.s) / std::max(1.0, std::abs(m.ts)));
  }
  return r;
}

}  // namespace

CommutingSpectraReport commuting_spectra_check(const RationalMatrix& t, const RationalMatrix& s, double tol) {
  if (!t.is_square() || !s.is_square() || t.rows() != s.rows())
    throw Error(ErrorCode::Dimension, "commuting spectra need square matrices of one size");
  if (t.rows() > 8) throw Error(ErrorCode::Unsupported, "spectral matching is limited to N <= 8");
  RationalMatrix ts = t * s;
  if (ts != s * t) throw Error(ErrorCode::NonCommuting, "T S != S T");
  CommutingSpectraReport r = match_spectra(eigenvalues_float(t), eigenvalues_float(s), eigenvalues_float(ts), tol);
  r.char_t = char_poly(t);
  r.char_s = char_poly(s);
  r.char_ts = char_poly(ts);
  return r;
}

CommutingSpectraReport commuting_spectra_check(const std::vector<double>& t, const std::vector<double>& s,
                                               std::size_t n, double tol) {
  if (t.size() != n * n || s.size() != n * n) throw Error(ErrorCode::Dimension, "matrix size mismatch");
  if (n > 8) throw Error(ErrorCode::Unsupported, "spectral matching is limited to N <= 8");
  std::vector<double> ts(n * n), st(n * n);
  double scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ts[i * n + j] += t[i * n + k] * s[k * n + j];
        st[i * n + j] += s[i * n + k] * t[k * n + j];
      }
    }
  for (double x : ts) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < n * n; ++i)
    if (std::abs(ts[i] - st[i]) > tol * scale) throw Error(ErrorCode::NonCommuting, "T S != S T within tol");
  return match_spectra(eigenvalues_float(t, n), eigenvalues_float(s, n), eigenvalues_float(ts, n), tol);
}

}  // namespace polyinv
