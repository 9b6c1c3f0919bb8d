#include "polyinv/orbit.hpp"

#include "polyinv/errors.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace polyinv {

namespace {

RationalVector act(const RationalMatrix& m, const RationalVector& v) { return m * v; }

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

void require_start(const GroupSpec& spec, const RationalVector& z0) {
  if (z0.size() != spec.d)
    throw Error(ErrorCode::Dimension, "start point has " + std::to_string(z0.size()) + " coordinates but " +
                                          describe(spec) + " acts on dimension " + std::to_string(spec.d));
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Rank of the affine span of exact points, by incremental elimination.
std::size_t exact_affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) return 0;
  const std::size_t d = points.front().size();
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
  for (std::size_t k = 1; k < points.size() && rows.size() < d; ++k) {
    RationalVector v = subtract(points[k], points[0]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = v[pivots[r]];
      if (is_zero(c)) continue;
      Rational f = c / rows[r][pivots[r]];
      for (std::size_t j = 0; j < d; ++j) v[j] -= f * rows[r][j];
    }
    std::size_t p = 0;
    while (p < d && is_zero(v[p])) ++p;
    if (p == d) continue;
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }
  return rows.size();
}

std::size_t float_affine_rank(const std::vector<std::vector<double>>& points, double tol) {
  if (points.size() < 2) return 0;
  const std::size_t d = points.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size() - 1), static_cast<Eigen::Index>(d));
  for (std::size_t k = 1; k < points.size(); ++k)
    for (std::size_t j = 0; j < d; ++j)
      m(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(j)) = points[k][j] - points[0][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  double threshold = tol * std::max(1.0, s(0)) * std::sqrt(static_cast<double>(points.size()));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++rank;
  return rank;
}

double dense_determinant(std::vector<double> m, std::size_t n) {
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(m[i * n + c]) > std::abs(m[p * n + c])) p = i;
    if (m[p * n + c] == 0) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      double f = m[i * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[i * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

struct VectorHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 0x9E3779B97F4A7C15ull;
    for (long x : v) h ^= std::hash<long>{}(x) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct CoverageResult {
  Ball ball;
  double coverage = 0;
  std::size_t grid_points = 0;
};

// Fraction of the eps-grid points of the ball B(c, R - eps) that have a
// sample within distance eps.
std::optional<CoverageResult> grid_coverage(const std::vector<std::vector<double>>& points,
                                            const InteriorConfig& config, std::string& note) {
  const std::size_t d = points.front().size();
  CoverageResult out;
  Ball& ball = out.ball;
  if (config.ball_center) {
    if (config.ball_center->size() != d) throw Error(ErrorCode::Dimension, "ball center dimension mismatch");
    ball.center = *config.ball_center;
  } else {
    ball.center.assign(d, 0.0);
    for (const auto& p : points)
      for (std::size_t i = 0; i < d; ++i) ball.center[i] += p[i];
    for (auto& c : ball.center) c /= static_cast<double>(points.size());
  }
  if (config.ball_radius) {
    ball.radius = *config.ball_radius;
  } else {
    // Half the diameter, estimated on an evenly strided subset of at most
    // 2000 points to keep the pairwise scan quadratic in a small number.
    std::size_t stride = std::max<std::size_t>(1, points.size() / 2000);
    double diameter2 = 0;
    for (std::size_t a = 0; a < points.size(); a += stride)
      for (std::size_t b = a + stride; b < points.size(); b += stride) {
        double s = 0;
        for (std::size_t i = 0; i < d; ++i) s += (points[a][i] - points[b][i]) * (points[a][i] - points[b][i]);
        diameter2 = std::max(diameter2, s);
      }
    ball.radius = std::sqrt(diameter2) / 2;
  }
  ball.eps = config.eps_absolute ? *config.eps_absolute : config.eps_fraction * ball.radius;
  const double r_test = ball.radius - ball.eps;
  if (!(ball.eps > 0) || !(r_test > 0)) {
    note = "candidate ball is degenerate";
    return std::nullopt;
  }
  const long k_max = static_cast<long>(std::floor(r_test / ball.eps));
  double estimate = std::pow(2.0 * static_cast<double>(k_max) + 1.0, static_cast<double>(d));
  if (estimate > static_cast<double>(config.max_grid_points)) {
    note = "grid of " + format_double(estimate) + " points exceeds the budget";
    return std::nullopt;
  }

  std::unordered_map<std::vector<long>, std::vector<std::size_t>, VectorHash> cells;
  std::vector<long> key(d);
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) key[i] = static_cast<long>(std::floor((points[k][i] - ball.center[i]) / ball.eps + 0.5));
    cells[key].push_back(k);
  }

  const double eps2 = ball.eps * ball.eps * (1 + 1e-12);
  const double r2 = r_test * r_test * (1 + 1e-12);
  std::vector<long> idx(d, -k_max);
  std::size_t total = 0, covered = 0;
  std::vector<double> g(d);
  std::vector<long> probe(d);
  while (true) {
    double norm2 = 0;
    for (std::size_t i = 0; i < d; ++i) {
      double off = static_cast<double>(idx[i]) * ball.eps;
      g[i] = ball.center[i] + off;
      norm2 += off * off;
    }
    if (norm2 <= r2) {
      ++total;
      bool hit = false;
      // Scan the 3^d neighbouring cells.
      std::vector<int> delta(d, -1);
      while (!hit) {
        for (std::size_t i = 0; i < d; ++i) probe[i] = idx[i] + delta[i];
        auto it = cells.find(probe);
        if (it != cells.end())
          for (std::size_t k : it->second) {
            double s = 0;
            for (std::size_t i = 0; i < d; ++i) s += (points[k][i] - g[i]) * (points[k][i] - g[i]);
            if (s <= eps2) {
              hit = true;
              break;
            }
          }
        std::size_t pos = 0;
        while (pos < d && delta[pos] == 1) delta[pos++] = -1;
        if (pos == d) break;
        ++delta[pos];
      }
      if (hit) ++covered;
    }
    std::size_t pos = 0;
    while (pos < d && idx[pos] == k_max) idx[pos++] = -k_max;
    if (pos == d) break;
    ++idx[pos];
  }
  out.grid_points = total;
  out.coverage = total ? static_cast<double>(covered) / static_cast<double>(total) : 0.0;
  return out;
}

std::vector<std::vector<double>> to_double_points(const std::vector<RationalVector>& points) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    std::vector<double> v;
    v.reserve(p.size());
    for (const auto& x : p) v.push_back(x.get_d());
    out.push_back(std::move(v));
  }
  return out;
}

void apply_coverage(InteriorEvidence& ev, const std::vector<std::vector<double>>& points,
                    const InteriorConfig& config, std::string& note) {
  if (points.size() < config.min_coverage_points) {
    note = "fewer than " + std::to_string(config.min_coverage_points) + " points for the coverage test";
    return;
  }
  if (auto cov = grid_coverage(points, config, note)) {
    ev.coverage = cov->coverage;
    ev.grid_points = cov->grid_points;
    ev.ball = cov->ball;
  }
}

}  // namespace

// --- sampling ----------------------------------------------------------------

OrbitSample orbit_sample(const GroupSpec& spec, const RationalVector& z0, std::size_t n, std::uint64_t seed) {
  require_start(spec, z0);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  OrbitSample s{spec, z0, sample(spec, seed, n), {}};
  s.points.reserve(n);
  for (const auto& m : s.elements) s.points.push_back(act(m, z0));
  return s;
}

LambdaSample lambda_sample(const GroupSpec& spec, const RationalVector& z0, std::size_t n, std::uint64_t seed) {
  require_start(spec, z0);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  LambdaSample s{spec, z0, sample(spec, seed, 2 * n), {}, {}};
  s.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.witnesses.emplace_back(2 * i, 2 * i + 1);
    s.points.push_back(subtract(act(s.elements[2 * i], z0), act(s.elements[2 * i + 1], z0)));
  }
  return s;
}

std::string points_csv(const OrbitSample& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.z0.size(); ++i) out << "x" << i + 1 << ",";
  out << "element\n";
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    for (const auto& x : s.points[k]) out << format_double(x.get_d()) << ",";
    out << k << "\n";
  }
  return out.str();
}

std::string points_csv(const LambdaSample& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.z0.size(); ++i) out << "x" << i + 1 << ",";
  out << "p,q\n";
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    for (const auto& x : s.points[k]) out << format_double(x.get_d()) << ",";
    out << s.witnesses[k].first << "," << s.witnesses[k].second << "\n";
  }
  return out.str();
}

std::string points_json(const OrbitSample& s) {
  nlohmann::json j;
  j["group"] = describe(s.spec);
  j["z0"] = nlohmann::json::array();
  for (const auto& x : s.z0) j["z0"].push_back(to_string(x));
  j["points"] = nlohmann::json::array();
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    nlohmann::json p;
    p["x"] = nlohmann::json::array();
    for (const auto& x : s.points[k]) p["x"].push_back(to_string(x));
    p["element"] = k;
    j["points"].push_back(p);
  }
  return j.dump();
}

std::string points_json(const LambdaSample& s) {
  nlohmann::json j;
  j["group"] = describe(s.spec);
  j["z0"] = nlohmann::json::array();
  for (const auto& x : s.z0) j["z0"].push_back(to_string(x));
  j["points"] = nlohmann::json::array();
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    nlohmann::json p;
    p["x"] = nlohmann::json::array();
    for (const auto& x : s.points[k]) p["x"].push_back(to_string(x));
    p["p"] = s.witnesses[k].first;
    p["q"] = s.witnesses[k].second;
    j["points"].push_back(p);
  }
  return j.dump();
}

// --- parametrizations --------------------------------------------------------

RationalVector o11_alpha(const Rational& u) {
  if (sgn(u) == 0) throw Error(ErrorCode::InvalidArgument, "alpha(u) needs u != 0");
  return {Rational((u * u + 1) / (2 * u)), Rational((u * u - 1) / (2 * u))};
}

Rational o11_jacobian_closed_form(const Rational& u, const Rational& v) {
  if (sgn(u) == 0 || sgn(v) == 0) throw Error(ErrorCode::InvalidArgument, "Jacobian needs u, v != 0");
  return Rational((1 / (u * u) - 1 / (v * v)) / 2);
}

double finite_difference_jacobian(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                                  const std::vector<double>& t, double step) {
  const std::size_t k = t.size();
  std::vector<double> jac(k * k);
  for (std::size_t j = 0; j < k; ++j) {
    double h = step * std::max(1.0, std::abs(t[j]));
    std::vector<double> plus = t, minus = t;
    plus[j] += h;
    minus[j] -= h;
    std::vector<double> fp = f(plus), fm = f(minus);
    if (fp.size() != k || fm.size() != k) throw Error(ErrorCode::Dimension, "Jacobian needs a square map");
    for (std::size_t i = 0; i < k; ++i) jac[i * k + j] = (fp[i] - fm[i]) / (2 * h);
  }
  return dense_determinant(jac, k);
}

ParametrizationRegistry ParametrizationRegistry::builtin() {
  ParametrizationRegistry reg;

  // O(1,1): F(u, v) = B(u) z0 - B(v) z0 with the rational boosts B(u).
  Parametrization o11;
  o11.name = "o11-alpha-difference";
  o11.applies = [](const GroupSpec& s, const RationalVector& z0) {
    return s.kind == GroupKind::GeneralOrthogonal && s.p == 1 && s.q == 1 && !is_zero_vector(z0);
  };
  o11.map = [](const std::vector<double>& t, const RationalVector& z0) {
    auto boost = [&](double u) {
      double a = (u * u + 1) / (2 * u), c = (u * u - 1) / (2 * u);
      double x = z0[0].get_d(), y = z0[1].get_d();
      return std::pair{a * x + c * y, c * x + a * y};
    };
    auto [x1, y1] = boost(t[0]);
    auto [x2, y2] = boost(t[1]);
    return std::vector<double>{x1 - x2, y1 - y2};
  };
  o11.jacobian_exact = [](const RationalVector& t, const RationalVector& z0) -> std::optional<Rational> {
    if (sgn(t[0]) == 0 || sgn(t[1]) == 0) return std::nullopt;
    auto column = [&](const Rational& u) {
      Rational w = 1 / (u * u);
      Rational da = (1 - w) / 2, dc = (1 + w) / 2;
      return std::pair<Rational, Rational>{da * z0[0] + dc * z0[1], dc * z0[0] + da * z0[1]};
    };
    auto [a1, b1] = column(t[0]);
    auto [a2, b2] = column(t[1]);
    // columns (a1, b1) and -(a2, b2)
    return Rational(-a1 * b2 + b1 * a2);
  };
  o11.jacobian_float = [](const std::vector<double>& t, const RationalVector& z0) {
    auto column = [&](double u) {
      double w = 1 / (u * u), da = (1 - w) / 2, dc = (1 + w) / 2;
      double x = z0[0].get_d(), y = z0[1].get_d();
      return std::pair{da * x + dc * y, dc * x + da * y};
    };
    auto [a1, b1] = column(t[0]);
    auto [a2, b2] = column(t[1]);
    return -a1 * b2 + b1 * a2;
  };
  o11.witness_points = {{Rational(1), Rational(2)}, {Rational(2), Rational(3)}, {make_rational(1, 2), Rational(3)}};
  reg.add(std::move(o11));

  // SO(2): F(a, b) = R(a) z0 - R(b) z0, det JF = |z0|^2 sin(a - b).
  Parametrization so2;
  so2.name = "so2-angle-sum";
  so2.applies = [](const GroupSpec& s, const RationalVector& z0) {
    return s.d == 2 && (s.kind == GroupKind::SpecialOrthogonal || s.kind == GroupKind::Orthogonal) &&
           !is_zero_vector(z0);
  };
  so2.map = [](const std::vector<double>& t, const RationalVector& z0) {
    double x = z0[0].get_d(), y = z0[1].get_d();
    auto rot = [&](double a) { return std::pair{std::cos(a) * x - std::sin(a) * y, std::sin(a) * x + std::cos(a) * y}; };
    auto [x1, y1] = rot(t[0]);
    auto [x2, y2] = rot(t[1]);
    return std::vector<double>{x1 - x2, y1 - y2};
  };
  so2.jacobian_float = [](const std::vector<double>& t, const RationalVector& z0) {
    double r2 = Rational(z0[0] * z0[0] + z0[1] * z0[1]).get_d();
    return r2 * std::sin(t[0] - t[1]);
  };
  so2.witness_points = {{Rational(0), make_rational(3, 2)}, {Rational(0), Rational(1)}};
  reg.add(std::move(so2));
  return reg;
}

std::vector<const Parametrization*> ParametrizationRegistry::matching(const GroupSpec& spec,
                                                                      const RationalVector& z0) const {
  std::vector<const Parametrization*> out;
  for (const auto& p : entries_)
    if (p.applies && p.applies(spec, z0)) out.push_back(&p);
  return out;
}

const char* to_string(InteriorVerdict v) {
  switch (v) {
    case InteriorVerdict::Nonempty: return "evidence-nonempty";
    case InteriorVerdict::Empty: return "evidence-empty";
    case InteriorVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

InteriorEvidence interior_evidence_parametrization(const Parametrization& p, const RationalVector& parameters,
                                                   const RationalVector& z0, double tol) {
  InteriorEvidence ev;
  JacobianWitness w;
  w.parametrization = p.name;
  w.parameters = parameters;
  if (p.jacobian_exact) w.determinant_exact = p.jacobian_exact(parameters, z0);
  if (w.determinant_exact) {
    w.determinant = w.determinant_exact->get_d();
  } else if (p.jacobian_float) {
    std::vector<double> t;
    for (const auto& x : parameters) t.push_back(x.get_d());
    w.determinant = p.jacobian_float(t, z0);
  } else {
    std::vector<double> t;
    for (const auto& x : parameters) t.push_back(x.get_d());
    w.determinant = finite_difference_jacobian([&](const std::vector<double>& s) { return p.map(s, z0); }, t);
  }
  bool nonzero = w.determinant_exact ? sgn(*w.determinant_exact) != 0 && std::abs(w.determinant) > tol
                                     : std::abs(w.determinant) > tol;
  ev.jacobian_witness = w;
  ev.verdict = nonzero ? InteriorVerdict::Nonempty : InteriorVerdict::Inconclusive;
  ev.reason = nonzero ? "Jacobian of " + p.name + " is nonzero at the witness point"
                      : "Jacobian of " + p.name + " vanishes at the witness point";
  return ev;
}

InteriorEvidence interior_evidence_points(const std::vector<std::vector<double>>& points, const InteriorConfig& config) {
  InteriorEvidence ev;
  ev.sample_count = points.size();
  if (points.empty()) {
    ev.reason = "no points";
    return ev;
  }
  const std::size_t d = points.front().size();
  ev.affine_rank = float_affine_rank(points, config.tol);
  if (*ev.affine_rank < d) {
    ev.verdict = InteriorVerdict::Empty;
    ev.reason = "samples lie in an affine subspace of dimension " + std::to_string(*ev.affine_rank);
    return ev;
  }
  std::string note;
  apply_coverage(ev, points, config, note);
  if (ev.coverage && *ev.coverage == 1.0) {
    ev.verdict = InteriorVerdict::Nonempty;
    ev.reason = "every grid point of the candidate ball has a sample within eps";
  } else {
    ev.reason = ev.coverage ? "grid coverage " + format_double(*ev.coverage) + " below 1" : note;
  }
  return ev;
}

InteriorEvidence interior_evidence(const LambdaSample& sample, const InteriorConfig& config,
                                   const ParametrizationRegistry& registry) {
  InteriorEvidence ev;
  ev.sample_count = sample.points.size();
  const std::size_t d = sample.z0.size();
  if (sample.spec.is_finite()) {
    ev.verdict = InteriorVerdict::Empty;
    ev.reason = "finite group: Lambda is a finite set";
    ev.affine_rank = exact_affine_rank(sample.points);
    return ev;
  }
  if (is_zero_vector(sample.z0)) {
    ev.verdict = InteriorVerdict::Empty;
    ev.reason = "z0 = 0: Lambda = {0}";
    ev.affine_rank = 0;
    return ev;
  }
  std::vector<std::vector<double>> fpoints = to_double_points(sample.points);
  ev.affine_rank = config.exact_rank ? exact_affine_rank(sample.points) : float_affine_rank(fpoints, config.tol);
  if (*ev.affine_rank < d) {
    ev.verdict = InteriorVerdict::Empty;
    ev.reason = "samples lie in an affine subspace of dimension " + std::to_string(*ev.affine_rank);
    return ev;
  }
  for (const Parametrization* p : registry.matching(sample.spec, sample.z0)) {
    for (const auto& t : p->witness_points) {
      InteriorEvidence w = interior_evidence_parametrization(*p, t, sample.z0, config.tol);
      if (w.verdict == InteriorVerdict::Nonempty) {
        ev.jacobian_witness = w.jacobian_witness;
        break;
      }
    }
    if (ev.jacobian_witness) break;
  }
  std::string note;
  apply_coverage(ev, fpoints, config, note);
  bool covered = ev.coverage && *ev.coverage == 1.0;
  if (ev.jacobian_witness || covered) {
    ev.verdict = InteriorVerdict::Nonempty;
    if (ev.jacobian_witness && covered)
      ev.reason = "nonzero Jacobian witness and full grid coverage";
    else if (ev.jacobian_witness)
      ev.reason = "nonzero Jacobian witness (" + ev.jacobian_witness->parametrization + ")";
    else
      ev.reason = "every grid point of the candidate ball has a sample within eps";
  } else {
    ev.verdict = InteriorVerdict::Inconclusive;
    ev.reason = ev.coverage ? "no Jacobian witness and grid coverage " + format_double(*ev.coverage) + " below 1"
                            : "no Jacobian witness; " + note;
  }
  return ev;
}

// --- structural checks -------------------------------------------------------

bool StructuralReport::all_passed() const {
  for (const auto& i : items)
    if (i.status == "fail") return false;
  return true;
}

RationalMatrix find_linear_transport(const RationalVector& z0, const RationalVector& z1) {
  if (z0.size() != z1.size()) throw Error(ErrorCode::Dimension, "transport endpoints differ in dimension");
  if (is_zero_vector(z0) || is_zero_vector(z1)) throw Error(ErrorCode::InvalidArgument, "transport needs nonzero points");
  const std::size_t d = z0.size();
  auto completion = [&](const RationalVector& z) {
    std::size_t pivot = 0;
    while (is_zero(z[pivot])) ++pivot;
    RationalMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, 0) = z[i];
    std::size_t col = 1;
    for (std::size_t j = 0; j < d; ++j)
      if (j != pivot) m(j, col++) = 1;
    return m;
  };
  return completion(z1) * completion(z0).inverse();
}

std::optional<RationalMatrix> find_group_transport(const GroupSpec& spec, const RationalVector& z0,
                                                   const RationalVector& z1, std::uint64_t seed) {
  require_start(spec, z0);
  require_start(spec, z1);
  const std::size_t d = spec.d;
  std::optional<RationalMatrix> candidate;
  switch (spec.kind) {
    case GroupKind::SpecialOrthogonal:
    case GroupKind::Orthogonal:
      if (d == 2) {
        Rational n0 = z0[0] * z0[0] + z0[1] * z0[1];
        Rational n1 = z1[0] * z1[0] + z1[1] * z1[1];
        if (n0 != n1 || is_zero(n0)) return std::nullopt;
        Rational a = (z0[0] * z1[0] + z0[1] * z1[1]) / n0;
        Rational b = (z0[0] * z1[1] - z0[1] * z1[0]) / n0;
        candidate = RationalMatrix{{a, Rational(-b)}, {b, a}};
      }
      break;
    case GroupKind::GeneralLinear:
      if (is_zero_vector(z0) != is_zero_vector(z1)) return std::nullopt;
      if (is_zero_vector(z0)) return RationalMatrix::identity(d);
      candidate = find_linear_transport(z0, z1);
      break;
    case GroupKind::Dilations: {
      std::size_t i = 0;
      while (i < d && is_zero(z0[i])) ++i;
      if (i == d) return is_zero_vector(z1) ? std::optional(RationalMatrix::identity(d)) : std::nullopt;
      Rational c = z1[i] / z0[i];
      if (is_zero(c)) return std::nullopt;
      candidate = c * RationalMatrix::identity(d);
      break;
    }
    case GroupKind::Diagonal: {
      RationalMatrix m = RationalMatrix::identity(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(z0[i]) != is_zero(z1[i])) return std::nullopt;
        if (!is_zero(z0[i])) m(i, i) = z1[i] / z0[i];
      }
      candidate = m;
      break;
    }
    case GroupKind::Finite:
    case GroupKind::SignedPermutations: {
      for (const auto& e : finite_group(spec).elements)
        if (e * z0 == z1) return e;
      return std::nullopt;
    }
    default:
      break;
  }
  if (!candidate) {
    for (const auto& e : sample(spec, seed, 256))
      if (e * z0 == z1) return e;
    return std::nullopt;
  }
  if (*candidate * z0 != z1 || !membership_check(*candidate, spec).member) return std::nullopt;
  return candidate;
}

StructuralReport structural_checks(const GroupSpec& spec, const RationalVector& z0,
                                   const std::optional<RationalVector>& z1, std::uint64_t seed, std::size_t n) {
  require_start(spec, z0);
  if (z1) require_start(spec, *z1);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  const std::size_t d = spec.d;
  StructuralReport report;
  auto member = [&](const RationalMatrix& m) { return membership_check(m, spec).member; };

  {
    StructuralItem item{"zero-start", "pass", "Lambda_{G,0} = {0} on every sample", {}};
    LambdaSample s = lambda_sample(spec, RationalVector(d, Rational(0)), n, seed);
    for (const auto& p : s.points)
      if (!is_zero_vector(p)) {
        item.status = "fail";
        item.counterexample = to_string(p);
        break;
      }
    report.items.push_back(item);
  }

  if (is_zero_vector(z0)) {
    for (const char* name : {"minus-identity", "orbit-restart", "decomposition"})
      report.items.push_back({name, "pass", "z0 = 0: Lambda = {0}, nothing to check", {}});
    if (z1) report.items.push_back({"normality-transport", "skipped", "z0 = 0 cannot be transported", {}});
    return report;
  }

  const LambdaSample lam = lambda_sample(spec, z0, n, seed);
  auto witness_text = [&](std::size_t k) {
    return "point " + to_string(lam.points[k]) + " with P = " + to_string(lam.elements[lam.witnesses[k].first]) +
           ", Q = " + to_string(lam.elements[lam.witnesses[k].second]);
  };

  {
    StructuralItem item{"minus-identity", "pass", "", {}};
    RationalMatrix minus = Rational(-1) * RationalMatrix::identity(d);
    if (!member(minus)) {
      item.status = "skipped";
      item.detail = "-I is not in the group";
    } else {
      item.detail = "P z0 - Q z0 = P z0 + (-Q) z0 and P z0 + Q z0 = P z0 - (-Q) z0 on every sample";
      for (std::size_t k = 0; k < lam.points.size() && item.status == "pass"; ++k) {
        const RationalMatrix& p = lam.elements[lam.witnesses[k].first];
        RationalMatrix mq = minus * lam.elements[lam.witnesses[k].second];
        RationalVector sum = add(p * z0, mq * z0);
        if (!member(mq) || sum != lam.points[k]) {
          item.status = "fail";
          item.counterexample = witness_text(k);
        }
        // converse: P z0 + Q z0 is the Lambda point with witnesses (P, -Q)
        RationalVector plus = add(p * z0, lam.elements[lam.witnesses[k].second] * z0);
        if (subtract(p * z0, mq * z0) != plus) {
          item.status = "fail";
          item.counterexample = witness_text(k);
        }
      }
    }
    report.items.push_back(item);
  }

  {
    StructuralItem item{"orbit-restart", "pass", "", {}};
    std::optional<RationalMatrix> r;
    if (z1) r = find_group_transport(spec, z0, *z1, seed);
    if (!r) r = sample(spec, seed ^ 0xA5A5A5A5ull, 1).front();
    RationalVector start = *r * z0;
    RationalMatrix r_inv = r->inverse();
    item.detail = "Lambda_{G," + to_string(start) + "} = Lambda_{G,z0} via R = " + to_string(*r);
    LambdaSample other = lambda_sample(spec, start, n, seed + 1);
    for (std::size_t k = 0; k < other.points.size() && item.status == "pass"; ++k) {
      RationalMatrix pr = other.elements[other.witnesses[k].first] * *r;
      RationalMatrix qr = other.elements[other.witnesses[k].second] * *r;
      if (!member(pr) || !member(qr) || subtract(pr * z0, qr * z0) != other.points[k]) {
        item.status = "fail";
        item.counterexample = "point " + to_string(other.points[k]);
      }
    }
    for (std::size_t k = 0; k < lam.points.size() && item.status == "pass"; ++k) {
      RationalMatrix pr = lam.elements[lam.witnesses[k].first] * r_inv;
      RationalMatrix qr = lam.elements[lam.witnesses[k].second] * r_inv;
      if (!member(pr) || !member(qr) || subtract(pr * start, qr * start) != lam.points[k]) {
        item.status = "fail";
        item.counterexample = witness_text(k);
      }
    }
    report.items.push_back(item);
  }

  {
    StructuralItem item{"decomposition", "pass", "P z0 - Q z0 = Q (Q^{-1} P - I) z0 with Q^{-1} P in G", {}};
    for (std::size_t k = 0; k < lam.points.size() && item.status == "pass"; ++k) {
      const RationalMatrix& p = lam.elements[lam.witnesses[k].first];
      const RationalMatrix& q = lam.elements[lam.witnesses[k].second];
      RationalMatrix qp = q.inverse() * p;
      RationalVector inner = subtract(qp * z0, z0);
      if (!member(qp) || q * inner != lam.points[k]) {
        item.status = "fail";
        item.counterexample = witness_text(k);
      }
    }
    report.items.push_back(item);
  }

  if (z1) {
    StructuralItem item{"normality-transport", "pass", "", {}};
    if (is_zero_vector(*z1)) {
      item.status = "skipped";
      item.detail = "z1 = 0 cannot be reached from z0 by an invertible map";
    } else {
      std::optional<RationalMatrix> p = find_group_transport(spec, z0, *z1, seed);
      report.transport_in_group = p.has_value();
      if (!p) p = find_linear_transport(z0, *z1);
      report.transport = *p;
      RationalMatrix p_inv = p->inverse();
      item.detail = "Lambda_{G,P z0} = P Lambda_{G,z0} with P = " + to_string(*p) +
                    (report.transport_in_group ? " (P in G)" : " (P in GL only)");
      for (std::size_t k = 0; k < lam.elements.size() && item.status == "pass"; ++k) {
        RationalMatrix conj = p_inv * lam.elements[k] * *p;
        if (!member(conj)) {
          item.status = "fail";
          item.counterexample = "P^{-1} A P = " + to_string(conj) + " leaves the group for A = " +
                                to_string(lam.elements[k]);
        }
      }
      LambdaSample at_z1 = lambda_sample(spec, *z1, n, seed + 2);
      std::vector<RationalVector> with_zero0 = lam.points, with_zero1 = at_z1.points;
      with_zero0.insert(with_zero0.begin(), RationalVector(d, Rational(0)));
      with_zero1.insert(with_zero1.begin(), RationalVector(d, Rational(0)));
      std::size_t r0 = exact_affine_rank(with_zero0), r1 = exact_affine_rank(with_zero1);
      item.detail += "; sampled span ranks " + std::to_string(r0) + " at z0 and " + std::to_string(r1) + " at z1";
      if (r0 != r1) {
        item.status = "fail";
        if (!item.counterexample)
          item.counterexample = "span ranks differ: " + std::to_string(r0) + " vs " + std::to_string(r1);
      }
    }
    report.items.push_back(item);
  }
  return report;
}

}  // namespace polyinv
