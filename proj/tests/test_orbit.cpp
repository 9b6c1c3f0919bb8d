#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "polyinv/orbit.hpp"

#include <cmath>

using namespace polyinv;
using namespace testgen;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Rational qform(const RationalVector& v, std::size_t p) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += i < p ? Rational(v[i] * v[i]) : Rational(-v[i] * v[i]);
  return s;
}

const StructuralItem& item(const StructuralReport& r, const std::string& name) {
  for (const auto& i : r.items)
    if (i.name == name) return i;
  throw std::runtime_error("missing item " + name);
}

}  // namespace

TEST_CASE("orbit of the origin is the origin") {
  for (const auto& s : {GroupSpec::special_orthogonal(2), GroupSpec::general_linear(3), GroupSpec::symplectic(1)}) {
    RationalVector zero(s.d, Rational(0));
    for (const auto& p : orbit_sample(s, zero, 10, 1).points) CHECK(p == zero);
    for (const auto& p : lambda_sample(s, zero, 10, 1).points) CHECK(p == zero);
  }
}

TEST_CASE("O(1,1) orbit of (1,0) lies on the hyperbola") {
  OrbitSample s = orbit_sample(GroupSpec::general_orthogonal(1, 1), {q(1), q(0)}, 200, 3);
  for (const auto& p : s.points) CHECK(p[0] * p[0] - p[1] * p[1] == 1);
}

TEST_CASE("SO(2) orbit of (1,0) lies on the unit circle") {
  OrbitSample s = orbit_sample(GroupSpec::special_orthogonal(2), {q(1), q(0)}, 200, 3);
  for (const auto& p : s.points) CHECK(p[0] * p[0] + p[1] * p[1] == 1);
}

TEST_CASE("O(p,q) orbits preserve the quadratic form") {
  std::mt19937_64 rng(4);
  for (auto [p, qq] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    RationalVector z0 = nonzero_vector(rng, p + qq);
    for (const auto& pt : orbit_sample(GroupSpec::general_orthogonal(p, qq), z0, 50, p * 10 + qq).points)
      CHECK(qform(pt, p) == qform(z0, p));
  }
}

TEST_CASE("symplectic samples preserve the bilinear form") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1, 2}) {
    RationalMatrix omega = symplectic_form(n);
    for (const auto& m : sample(GroupSpec::symplectic(n), 9, 30)) {
      RationalVector x = rational_vector(rng, 2 * n), y = rational_vector(rng, 2 * n);
      auto b = [&](const RationalVector& u, const RationalVector& v) {
        RationalVector w = omega * u;
        Rational s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
        return s;
      };
      CHECK(b(m * x, m * y) == b(x, y));
    }
  }
}

TEST_CASE("Lambda points equal their witness differences") {
  std::mt19937_64 rng(6);
  for (const auto& s : {GroupSpec::special_orthogonal(2), GroupSpec::general_orthogonal(2, 1), GroupSpec::symplectic(1),
                        GroupSpec::dilations(3), GroupSpec::signed_permutations(3)}) {
    RationalVector z0 = nonzero_vector(rng, s.d);
    LambdaSample l = lambda_sample(s, z0, 40, 17);
    REQUIRE(l.points.size() == 40);
    for (std::size_t k = 0; k < l.points.size(); ++k) {
      RationalVector a = l.elements[l.witnesses[k].first] * z0, b = l.elements[l.witnesses[k].second] * z0;
      for (std::size_t i = 0; i < s.d; ++i) CHECK(l.points[k][i] == a[i] - b[i]);
      // decomposition Q (Q^{-1} P - I) z0
      const RationalMatrix& pm = l.elements[l.witnesses[k].first];
      const RationalMatrix& qm = l.elements[l.witnesses[k].second];
      RationalVector inner = qm.inverse() * pm * z0;
      for (std::size_t i = 0; i < s.d; ++i) inner[i] -= z0[i];
      CHECK(qm * inner == l.points[k]);
    }
  }
}

TEST_CASE("dilation Lambda lies on the line through z0") {
  LambdaSample l = lambda_sample(GroupSpec::dilations(2), {q(1), q(1)}, 100, 2);
  for (const auto& p : l.points) CHECK(p[0] == p[1]);
  InteriorEvidence ev = interior_evidence(l);
  CHECK(ev.verdict == InteriorVerdict::Empty);
  CHECK(ev.affine_rank == 1u);
}

TEST_CASE("diagonal group Lambda at (1,0) lies on the first axis") {
  LambdaSample l = lambda_sample(GroupSpec::diagonal(2), {q(1), q(0)}, 100, 2);
  for (const auto& p : l.points) CHECK(p[1] == 0);
  CHECK(interior_evidence(l).verdict == InteriorVerdict::Empty);
}

TEST_CASE("finite groups give empty interior") {
  LambdaSample l = lambda_sample(GroupSpec::signed_permutations(2), {q(1), q(2)}, 200, 2);
  CHECK(interior_evidence(l).verdict == InteriorVerdict::Empty);
}

TEST_CASE("O(1,1) Jacobian witness") {
  CHECK(o11_jacobian_closed_form(q(1), q(2)) == q(3, 8));
  CHECK(o11_alpha(q(2)) == RationalVector{q(5, 4), q(3, 4)});
  auto reg = ParametrizationRegistry::builtin();
  auto matches = reg.matching(GroupSpec::general_orthogonal(1, 1), {q(1), q(0)});
  REQUIRE(matches.size() == 1);
  InteriorEvidence ev = interior_evidence_parametrization(*matches[0], {q(1), q(2)}, {q(1), q(0)});
  CHECK(ev.verdict == InteriorVerdict::Nonempty);
  REQUIRE(ev.jacobian_witness);
  CHECK(ev.jacobian_witness->determinant_exact == q(3, 8));
  // at u = v the map folds
  CHECK(interior_evidence_parametrization(*matches[0], {q(2), q(2)}, {q(1), q(0)}).verdict ==
        InteriorVerdict::Inconclusive);
}

TEST_CASE("registered Jacobians agree with finite differences") {
  auto reg = ParametrizationRegistry::builtin();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  RationalVector z0{q(2, 3), q(-1, 2)};
  for (const auto& p : reg.entries())
    for (int k = 0; k < 20; ++k) {
      std::vector<double> t{u(rng), u(rng)};
      double fd = finite_difference_jacobian([&](const std::vector<double>& s) { return p.map(s, z0); }, t);
      CHECK(p.jacobian_float(t, z0) == doctest::Approx(fd).epsilon(1e-5));
      // closed form in the exact O(1,1) case
      if (p.jacobian_exact) {
        RationalVector tq{q(static_cast<long>(t[0] * 64) + 1, 64), q(static_cast<long>(t[1] * 64) + 1, 64)};
        auto exact = p.jacobian_exact(tq, z0);
        REQUIRE(exact);
        CHECK(exact->get_d() == doctest::Approx(p.jacobian_float({tq[0].get_d(), tq[1].get_d()}, z0)));
      }
    }
}

TEST_CASE("O(1,1) sampled Lambda has nonempty interior") {
  LambdaSample l = lambda_sample(GroupSpec::general_orthogonal(1, 1), {q(1), q(0)}, 200, 2);
  InteriorEvidence ev = interior_evidence(l);
  CHECK(ev.verdict == InteriorVerdict::Nonempty);
  CHECK(ev.jacobian_witness);
}

TEST_CASE("dense SO(2) Lambda covers the ball of radius 2") {
  LambdaSample l = lambda_sample(GroupSpec::special_orthogonal(2), {q(1), q(0)}, 40000, 1);
  InteriorConfig cfg;
  cfg.eps_absolute = 0.05;
  cfg.ball_center = std::vector<double>{0.0, 0.0};
  cfg.ball_radius = 2.0;
  InteriorEvidence ev = interior_evidence(l, cfg, ParametrizationRegistry{});
  CHECK(ev.verdict == InteriorVerdict::Nonempty);
  REQUIRE(ev.coverage);
  CHECK(*ev.coverage == 1.0);
  CHECK_FALSE(ev.jacobian_witness);
  for (const auto& p : l.points) CHECK(p[0] * p[0] + p[1] * p[1] <= 4);
}

TEST_CASE("coverage on bare points") {
  std::vector<std::vector<double>> line, disc;
  for (int i = 0; i < 400; ++i) line.push_back({i / 400.0, 2 * i / 400.0});
  CHECK(interior_evidence_points(line, {}).verdict == InteriorVerdict::Empty);
  for (int i = -100; i <= 100; ++i)
    for (int j = -100; j <= 100; ++j)
      if (i * i + j * j <= 10000) disc.push_back({i / 100.0, j / 100.0});
  CHECK(interior_evidence_points(disc, {}).verdict == InteriorVerdict::Nonempty);
  // a ring leaves its centre uncovered
  std::vector<std::vector<double>> ring;
  for (int i = 0; i < 2000; ++i) ring.push_back({std::cos(i * 0.00314159), std::sin(i * 0.00314159)});
  for (int i = 0; i < 2000; ++i) ring.push_back({std::cos(i * 0.00314159 + 3.14159), std::sin(i * 0.00314159 + 3.14159)});
  InteriorEvidence ev = interior_evidence_points(ring, {});
  CHECK(ev.verdict == InteriorVerdict::Inconclusive);
  REQUIRE(ev.coverage);
  CHECK(*ev.coverage < 1.0);
}

TEST_CASE("structural checks with z0 = 0 pass trivially") {
  for (const auto& s : {GroupSpec::special_orthogonal(2), GroupSpec::diagonal(2), GroupSpec::general_linear(2)}) {
    StructuralReport r = structural_checks(s, {q(0), q(0)}, std::nullopt, 1, 16);
    CHECK(r.all_passed());
  }
}

TEST_CASE("structural checks for SO(2)") {
  StructuralReport r = structural_checks(GroupSpec::special_orthogonal(2), {q(1), q(0)}, RationalVector{q(0), q(1)}, 4, 32);
  CHECK(item(r, "zero-start").status == "pass");
  CHECK(item(r, "minus-identity").status == "pass");
  CHECK(item(r, "orbit-restart").status == "pass");
  CHECK(item(r, "decomposition").status == "pass");
  CHECK(item(r, "normality-transport").status == "pass");
  CHECK(r.transport_in_group);
  CHECK(r.all_passed());
}

TEST_CASE("normality transport fails for the diagonal group") {
  StructuralReport r = structural_checks(GroupSpec::diagonal(2), {q(1), q(1)}, RationalVector{q(1), q(0)}, 4, 32);
  const StructuralItem& n = item(r, "normality-transport");
  CHECK(n.status == "fail");
  CHECK(n.counterexample);
  CHECK_FALSE(r.transport_in_group);
  REQUIRE(r.transport);
  CHECK(*r.transport * RationalVector{q(1), q(1)} == RationalVector{q(1), q(0)});
  CHECK(item(r, "decomposition").status == "pass");
}

TEST_CASE("normality transport holds for GL") {
  StructuralReport r = structural_checks(GroupSpec::general_linear(2), {q(1), q(1)}, RationalVector{q(1), q(0)}, 4, 32);
  CHECK(item(r, "normality-transport").status == "pass");
}

TEST_CASE("transports") {
  auto t = find_group_transport(GroupSpec::special_orthogonal(2), {q(1), q(0)}, {q(3, 5), q(4, 5)}, 1);
  REQUIRE(t);
  CHECK(*t * RationalVector{q(1), q(0)} == RationalVector{q(3, 5), q(4, 5)});
  CHECK_FALSE(find_group_transport(GroupSpec::special_orthogonal(2), {q(1), q(0)}, {q(2), q(0)}, 1));
  CHECK_FALSE(find_group_transport(GroupSpec::diagonal(2), {q(1), q(1)}, {q(1), q(0)}, 1));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    RationalVector a = nonzero_vector(rng, 3), b = nonzero_vector(rng, 3);
    RationalMatrix p = find_linear_transport(a, b);
    CHECK(p * a == b);
    CHECK(p.determinant() != 0);
  }
}

TEST_CASE("point dumps") {
  LambdaSample l = lambda_sample(GroupSpec::special_orthogonal(2), {q(1), q(0)}, 3, 1);
  std::string csv = points_csv(l);
  CHECK(csv.rfind("x1,x2,p,q\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(points_json(l).find("\"points\"") != std::string::npos);
  CHECK(points_csv(orbit_sample(GroupSpec::special_orthogonal(2), {q(1), q(0)}, 2, 1)).rfind("x1,x2,element\n", 0) == 0);
}
