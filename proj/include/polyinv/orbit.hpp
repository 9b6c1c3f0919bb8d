#pragma once

#include "polyinv/groups.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyinv {

struct OrbitSample {
  GroupSpec spec;
  RationalVector z0;
  std::vector<RationalMatrix> elements;
  std::vector<RationalVector> points;  // points[i] = elements[i] z0
};

/// Lambda = G z0 - G z0. points[i] = elements[p] z0 - elements[q] z0 with
/// (p, q) = witnesses[i].
struct LambdaSample {
  GroupSpec spec;
  RationalVector z0;
  std::vector<RationalMatrix> elements;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
  std::vector<RationalVector> points;
};

OrbitSample orbit_sample(const GroupSpec& spec, const RationalVector& z0, std::size_t n, std::uint64_t seed);
LambdaSample lambda_sample(const GroupSpec& spec, const RationalVector& z0, std::size_t n, std::uint64_t seed);

/// Columns x1..xd followed by the witness indices.
std::string points_csv(const OrbitSample& s);
std::string points_csv(const LambdaSample& s);
std::string points_json(const OrbitSample& s);
std::string points_json(const LambdaSample& s);

/// A map F from a parameter box onto part of Lambda_{G,z0}; a point where
/// det JF != 0 certifies an interior point by the inverse function theorem.
struct Parametrization {
  std::string name;
  std::function<bool(const GroupSpec&, const RationalVector& z0)> applies;
  std::function<std::vector<double>(const std::vector<double>& t, const RationalVector& z0)> map;
  /// Exact Jacobian determinant at rational parameters (may be empty).
  std::function<std::optional<Rational>(const RationalVector& t, const RationalVector& z0)> jacobian_exact;
  /// Floating-point Jacobian determinant (closed form or finite differences).
  std::function<double(const std::vector<double>& t, const RationalVector& z0)> jacobian_float;
  std::vector<RationalVector> witness_points;
};

class ParametrizationRegistry {
 public:
  /// Registry preloaded with the O(1,1) alpha-difference and the SO(2)
  /// angle-sum parametrizations.
  static ParametrizationRegistry builtin();

  void add(Parametrization p) { entries_.push_back(std::move(p)); }
  const std::vector<Parametrization>& entries() const { return entries_; }
  std::vector<const Parametrization*> matching(const GroupSpec& spec, const RationalVector& z0) const;

 private:
  std::vector<Parametrization> entries_;
};

/// alpha(u) = ((u^2+1)/(2u), (u^2-1)/(2u)), the O(1,1) orbit of (1,0).
RationalVector o11_alpha(const Rational& u);
/// Closed form det JF(u,v) = (1/u^2 - 1/v^2)/2 for F(u,v) = alpha(u) - alpha(v).
Rational o11_jacobian_closed_form(const Rational& u, const Rational& v);

/// Central-difference Jacobian determinant of a map R^k -> R^k.
double finite_difference_jacobian(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                                  const std::vector<double>& t, double step = 1e-6);

enum class InteriorVerdict { Nonempty, Empty, Inconclusive };
const char* to_string(InteriorVerdict v);

struct InteriorConfig {
  double tol = 1e-9;
  double eps_fraction = 0.05;            // grid spacing as a fraction of the candidate radius
  std::optional<double> eps_absolute;    // overrides eps_fraction
  std::optional<std::vector<double>> ball_center;  // overrides the centroid
  std::optional<double> ball_radius;     // overrides half the sample diameter
  std::size_t min_coverage_points = 100;
  std::size_t max_grid_points = 2000000;
  bool exact_rank = true;                // false: SVD rank on doubles
};

struct JacobianWitness {
  std::string parametrization;
  RationalVector parameters;
  double determinant = 0;
  std::optional<Rational> determinant_exact;
};

struct Ball {
  std::vector<double> center;
  double radius = 0;  // sample-derived candidate radius R
  double eps = 0;     // grid spacing; the tested ball has radius R - eps
};

struct InteriorEvidence {
  InteriorVerdict verdict = InteriorVerdict::Inconclusive;
  std::string reason;
  std::size_t sample_count = 0;
  std::optional<std::size_t> affine_rank;
  std::optional<JacobianWitness> jacobian_witness;
  std::optional<double> coverage;
  std::optional<std::size_t> grid_points;
  std::optional<Ball> ball;
};

/// Three-valued interior test. Order: finite groups and rank-deficient
/// samples give Empty; a nonzero Jacobian witness or full grid coverage gives
/// Nonempty; otherwise Inconclusive. Coverage is reported whenever it could
/// be computed.
InteriorEvidence interior_evidence(const LambdaSample& sample, const InteriorConfig& config = {},
                                   const ParametrizationRegistry& registry = ParametrizationRegistry::builtin());

/// Coverage and rank tests on bare floating-point points.
InteriorEvidence interior_evidence_points(const std::vector<std::vector<double>>& points, const InteriorConfig& config);

/// Evaluates one parametrization at the given parameters.
InteriorEvidence interior_evidence_parametrization(const Parametrization& p, const RationalVector& parameters,
                                                   const RationalVector& z0, double tol = 1e-9);

struct StructuralItem {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;
  std::optional<std::string> counterexample;
};

struct StructuralReport {
  std::vector<StructuralItem> items;
  std::optional<RationalMatrix> transport;  // P with P z0 = z1, when z1 is given
  bool transport_in_group = false;
  bool all_passed() const;
};

/// Exact sampled checks of the Lambda identities: Lambda_{G,0} = {0};
/// Lambda = Gz0 + Gz0 when -I is in G; Lambda_{G,Rz0} = Lambda_{G,z0};
/// Lambda = G(G - I)z0; and, when z1 is given, Lambda_{G,Pz0} = P Lambda_{G,z0}
/// for a transport P (checked through P^{-1} A P in G and a rank comparison).
StructuralReport structural_checks(const GroupSpec& spec, const RationalVector& z0,
                                   const std::optional<RationalVector>& z1, std::uint64_t seed, std::size_t n = 64);

/// An element of the group with P z0 = z1, if one is found.
std::optional<RationalMatrix> find_group_transport(const GroupSpec& spec, const RationalVector& z0,
                                                   const RationalVector& z1, std::uint64_t seed);
/// An invertible P with P z0 = z1 (both nonzero).
RationalMatrix find_linear_transport(const RationalVector& z0, const RationalVector& z1);

}  // namespace polyinv
