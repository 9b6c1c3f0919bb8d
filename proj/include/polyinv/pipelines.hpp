#pragma once

#include "polyinv/function_space.hpp"
#include "polyinv/groups.hpp"
#include "polyinv/orbit.hpp"
#include "polyinv/unipoly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

// --- annihilator --------------------------------------------------------------

/// Annihilation steps come from lambda_sample(spec, z0, verify_samples,
/// seed ^ kAnnihilationSeedMix), so callers can re-derive the witnesses.
inline constexpr std::uint64_t kAnnihilationSeedMix = 0x5DEECE66Dull;

struct AnnihilatorConfig {
  std::size_t verify_samples = 25;     // Lambda points where q(tau_z) = 0 is checked
  std::size_t element_samples = 8;     // sampled group elements for the invariance check
  std::size_t interior_samples = 2000; // Lambda points for the coverage test
  std::size_t off_lambda_probes = 3;   // informational probes at z outside the sample
  InteriorConfig interior;
};

struct AnnihilationStep {
  RationalVector z;
  std::size_t p = 0, q = 0;  // witnesses into the sampled element list
  bool annihilates = false;
};

/// q = base^power where base = monic Res_w(p(w), p(zw)) has the pairwise
/// eigenvalue ratios of tau_{z0} as roots. The expanded q is never stored;
/// q(M) is evaluated as base(M)^power.
struct AnnihilatorReport {
  std::size_t dimension = 0;  // N
  UniPoly<Scalar> char_poly;  // of tau_{z0}
  UniPoly<Scalar> base;
  unsigned power = 0;
  std::size_t degree = 0;     // m = deg q
  Scalar constant_term;       // q(0) = base(0)^power
  bool translation_invariant = false;
  std::size_t group_elements_checked = 0;
  bool group_exhaustive = false;
  std::vector<AnnihilationStep> verified_steps;
  bool annihilation_holds = false;
  std::vector<AnnihilationStep> off_lambda;  // information only
  InteriorEvidence interior;
  bool concluded = false;
  std::optional<std::size_t> degree_bound;  // m - 1, only when concluded
  std::string reason;
};

/// Builds the annihilator of tau_{z0} on V and checks q(tau_z) = 0 on sampled
/// z in Lambda_{G,z0}. The polynomial conclusion is drawn only when the
/// annihilation holds and Lambda shows interior evidence. Throws InvalidStart
/// for z0 = 0 and NotInvariant when V is not stable.
AnnihilatorReport annihilator_from_space(const FunctionSpace& v, const GroupSpec& spec, const RationalVector& z0,
                                         std::uint64_t seed, const AnnihilatorConfig& config = {});

/// q(M) = base(M)^power.
ScalarMatrix evaluate_annihilator(const AnnihilatorReport& r, const ScalarMatrix& m);

/// Expanded q; the degree grows as N^3, so this is for small spaces.
UniPoly<Scalar> expand_annihilator(const AnnihilatorReport& r);

// --- Frechet / Montel -----------------------------------------------------------

/// True iff f is an ordinary polynomial of total degree <= n-1, certified by the
/// order-n mixed difference with formal steps vanishing identically.
bool frechet_conclusion_check(const ExpPoly& f, unsigned n);

struct MontelReport {
  bool hypothesis = false;  // all order-n mixed differences over E vanish
  std::size_t tuples_checked = 0;
  std::optional<std::vector<std::size_t>> failing_tuple;  // indices into E
  bool steps_span = false;  // E spans R^d
  bool conclusion = false;  // f is a polynomial with fdeg <= n-1
  Classification classification;
};

/// Differences commute, so multisets of steps cover every n-tuple.
MontelReport montel_check(const ExpPoly& f, const std::vector<RationalVector>& steps, unsigned n);

/// (1/n) {e_1, ..., e_d, (sqrt(p_1), ..., sqrt(p_d))} with p_i the i-th prime.
std::vector<std::vector<double>> kronecker_generators(std::size_t d, unsigned n);

// --- power-closed sets -------------------------------------------------------

/// c * exp(e) * e^{2 pi i theta} with c > 0 and theta in [0, 1).
struct PowerElement {
  Rational c = 1;
  Rational e = 0;
  Rational theta = 0;

  static PowerElement make(const Rational& c, const Rational& e = 0, const Rational& theta = 0);
  PowerElement pow(long k) const;
  friend bool operator==(const PowerElement&, const PowerElement&) = default;
  friend bool operator<(const PowerElement& a, const PowerElement& b) {
    if (a.c != b.c) return a.c < b.c;
    if (a.e != b.e) return a.e < b.e;
    return a.theta < b.theta;
  }
};

std::string to_string(const PowerElement& x);

enum class PowerClosureOutcome { ForcedSingleton, PremiseViolated, CounterexampleStructure };
const char* to_string(PowerClosureOutcome o);

struct PowerClosureReport {
  PowerClosureOutcome outcome = PowerClosureOutcome::PremiseViolated;
  std::vector<PowerElement> set;
  std::optional<long> violating_exponent;
  std::vector<PowerElement> violating_image;
  std::string detail;
};

/// Decides A = phi_k(A) for every k in exponents. Forced only for A = {1};
/// a set that satisfies the premise but differs from {1} is returned as a
/// counterexample structure. Throws InvalidArgument for a zero element.
PowerClosureReport power_closed_analysis(const std::vector<PowerElement>& a, const std::vector<long>& exponents);

/// Roots of a rational polynomial that splits into linear factors and
/// cyclotomic factors of order <= 64; throws InconclusivePowerClosure otherwise.
std::vector<PowerElement> supported_roots(const UniPoly<Rational>& p);
PowerClosureReport power_closed_analysis(const UniPoly<Rational>& p, const std::vector<long>& exponents);

// --- dilations ----------------------------------------------------------------

struct DilationReport {
  std::size_t dimension = 0;
  UniPoly<Scalar> char_poly;  // of tau_h
  std::vector<long> ks;
  std::vector<bool> char_poly_matches;  // char(tau_{kh}) == char(M^k), per k
  PowerClosureReport spectrum;
  bool power_closure_holds = false;
  bool unipotent = false;  // char poly is (z-1)^N
  std::optional<bool> unmixed_check;  // Delta_h^N b = 0 for every basis element
  bool concluded = false;
  std::optional<std::size_t> functional_degree_bound;  // N - 1
};

DilationReport dilation_pipeline(const FunctionSpace& v, const std::vector<long>& ks, const RationalVector& h);

// --- degree bounds -------------------------------------------------------------

struct DegreeBounds {
  std::size_t dim_rg = 0, d = 0;
  std::size_t lower = 0, upper = 0;
  std::optional<std::size_t> refined;
  std::optional<std::size_t> binomial_n;  // n with C(n+d, d) = dim_rg
};

DegreeBounds degree_bounds(std::size_t dim_rg, std::size_t d);

// --- commuting spectra -----------------------------------------------------------

struct SpectraMatch {
  std::complex<double> t, s, ts;
};

struct CommutingSpectraReport {
  bool found = false;
  std::vector<SpectraMatch> matching;
  double max_error = 0;
  // exact path only
  std::optional<UniPoly<Rational>> char_t, char_s, char_ts;
};

/// Eigenvalue products lambda_i(TS) = lambda_i(T) lambda_i(S) under a common
/// arrangement, found by backtracking (N <= 8). Throws NonCommuting.
CommutingSpectraReport commuting_spectra_check(const RationalMatrix& t, const RationalMatrix& s, double tol = 1e-8);
CommutingSpectraReport commuting_spectra_check(const std::vector<double>& t, const std::vector<double>& s,
                                               std::size_t n, double tol = 1e-8);

}  // namespace polyinv
