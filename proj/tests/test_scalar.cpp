#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyinv/linalg.hpp"

#include <random>

using namespace polyinv;
using RPoly = UniPoly<Rational>;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

RPoly poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return RPoly(c);
}

RPoly from_roots(const std::vector<Rational>& roots) {
  RPoly p = RPoly::constant(Rational(1));
  for (const auto& r : roots) p = p * RPoly::linear_root(r);
  return p;
}

// Laplace expansion of det over polynomial entries: independent of the
// Faddeev-LeVerrier recursion used by char_poly.
RPoly cofactor_det(const std::vector<std::vector<RPoly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return RPoly::constant(Rational(1));
  if (n == 1) return a[0][0];
  RPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<RPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    RPoly term = a[0][j] * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RPoly char_poly_by_cofactors(const RationalMatrix& m) {
  std::vector<std::vector<RPoly>> a(m.rows(), std::vector<RPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      RPoly e = RPoly::constant(Rational(-m(i, j)));
      if (i == j) e = e + RPoly::monomial(Rational(1), 1);
      a[i][j] = e;
    }
  return cofactor_det(a);
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(dist(rng), 1 + (dist(rng) + 3) % 3);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-0.25") == q(-1, 4));
  CHECK(parse_rational(" 7 ") == q(7));
  CHECK(to_string(q(-4, 6)) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(parse_rational_vector("1, -3/5") == RationalVector{q(1), q(-3, 5)});
}

TEST_CASE("formal exponentials form a commutative ring") {
  FormalExp a = FormalExp::exp(q(1, 2));
  FormalExp b = FormalExp::exp(q(3, 2), q(2));
  CHECK(a * b == FormalExp::exp(q(2), q(2)));
  CHECK(FormalExp::exp(q(0)) == FormalExp(1));
  CHECK((a + b) - b == a);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  auto rnd = [&] {
    std::vector<FormalExp::Term> t;
    for (int k = 0; k < 3; ++k) t.push_back({q(small(rng), 2), q(small(rng))});
    return FormalExp::from_terms(t);
  };
  for (int trial = 0; trial < 50; ++trial) {
    FormalExp x = rnd(), y = rnd(), z = rnd();
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("formal exponential gcd and exact division") {
  // (E(1) - 1)(E(1) + 2) and (E(1) - 1)(E(2) + 1) share E(1) - 1.
  FormalExp u = FormalExp::exp(q(1)) - FormalExp(1);
  FormalExp a = u * (FormalExp::exp(q(1)) + FormalExp(2));
  FormalExp b = u * FormalExp::exp(q(-3)) * (FormalExp::exp(q(2)) + FormalExp(1));
  CHECK(gcd(a, b) == u);
  CHECK(exact_divide(a, u).value() == FormalExp::exp(q(1)) + FormalExp(2));
  CHECK_FALSE(exact_divide(FormalExp::exp(q(1)) + FormalExp(2), u).has_value());
  // Fractional exponents share a common Laurent variable.
  FormalExp v = FormalExp::exp(q(1, 2)) - FormalExp(1);
  CHECK(gcd(u, v) == v);  // E(1) - 1 = (E(1/2) - 1)(E(1/2) + 1)
}

TEST_CASE("fraction field scalars are canonical") {
  FormalExp u = FormalExp::exp(q(1)) - FormalExp(1);
  Scalar x = Scalar::fraction(FormalExp::exp(q(2)) - FormalExp(1), u);  // = E(1) + 1
  CHECK(x.is_ring_element());
  CHECK(x == Scalar(FormalExp::exp(q(1)) + FormalExp(1)));
  Scalar y = Scalar(1) / Scalar(u);
  CHECK_FALSE(y.is_ring_element());
  CHECK(y * Scalar(u) == Scalar(1));
  CHECK(y + y == Scalar(2) * y);
  CHECK((y - y).is_zero());
  CHECK(Scalar(q(2, 3)) * Scalar(q(3, 2)) == Scalar(1));
  // Units cancel into the numerator.
  CHECK((Scalar(1) / Scalar(FormalExp::exp(q(2)))).is_ring_element());
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(RationalMatrix::identity(2)) == poly({1, -2, 1}));
  CHECK(char_poly(RationalMatrix::diagonal({q(2), q(3)})) == poly({6, -5, 1}));
  // companion matrix of z^3 - 2z + 1
  RationalMatrix c{{q(0), q(0), q(-1)}, {q(1), q(0), q(2)}, {q(0), q(1), q(0)}};
  CHECK(char_poly_by_cofactors(c) == poly({1, -2, 0, 1}));
  CHECK(char_poly(c) == poly({1, -2, 0, 1}));
  CHECK_THROWS_AS(char_poly(RationalMatrix(2, 3)), Error);
}

TEST_CASE("char_poly matches cofactor expansion and Cayley-Hamilton holds") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    RationalMatrix m = random_matrix(rng, n);
    RPoly p = char_poly(m);
    CHECK(p == char_poly_by_cofactors(m));
    CHECK(apply_poly_to_matrix(p, m).is_zero());
  }
}

TEST_CASE("Cayley-Hamilton over the fraction field") {
  FormalExp e1 = FormalExp::exp(q(1));
  ScalarMatrix m{{Scalar(e1), Scalar(1)}, {Scalar(0), Scalar(1) / Scalar(e1 - FormalExp(2))}};
  auto p = char_poly(m);
  CHECK(p.degree() == 2);
  CHECK(apply_poly_to_matrix(p, m).is_zero());
}

TEST_CASE("apply_poly_to_matrix examples") {
  RationalMatrix m = RationalMatrix::diagonal({q(2), q(3)});
  CHECK(apply_poly_to_matrix(poly({0, 1}), m) == m);
  CHECK(apply_poly_to_matrix(poly({6, -5, 1}), m).is_zero());
}

TEST_CASE("resultant examples") {
  CHECK(resultant(poly({-1, 1}), poly({-1, 1})) == 0);
  // Sylvester matrix [[1,-2],[1,-3]] has determinant -3 + 2 = -1.
  CHECK(resultant(poly({-2, 1}), poly({-3, 1})) == -1);
  // Res(z^2-1, z^2-4) = prod over roots a of p of q(a) = q(1) q(-1) = 9.
  CHECK(resultant(poly({-1, 0, 1}), poly({-4, 0, 1})) == 9);
  CHECK_THROWS_AS(resultant(RPoly(), RPoly()), Error);
}

TEST_CASE("resultant vanishes exactly when gcd is nonconstant") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> root(-4, 4), deg(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> ra, rb;
    int da = deg(rng), db = deg(rng);
    for (int i = 0; i < da; ++i) ra.emplace_back(root(rng));
    for (int i = 0; i < db; ++i) rb.emplace_back(root(rng));
    RPoly a = from_roots(ra), b = from_roots(rb);
    bool shared = gcd(a, b).degree() > 0;
    CHECK((resultant(a, b) == 0) == shared);
  }
}

TEST_CASE("ratio_roots_poly examples") {
  CHECK(ratio_roots_poly(poly({-2, 1}), 1) == poly({-1, 1}));
  CHECK(ratio_roots_poly(poly({1, -2, 1}), 1) == poly({-1, 1}).pow(4));
  RPoly r = ratio_roots_poly(from_roots({q(1), q(2)}), 1);
  CHECK(r == from_roots({q(1), q(1), q(2), q(1, 2)}));
  CHECK_THROWS_AS(ratio_roots_poly(poly({0, 1}), 1), Error);
}

TEST_CASE("ratio_roots_poly contains every root ratio and has nonzero constant term") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> root(-6, 6), deg(1, 4), pw(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> roots;
    int d = deg(rng);
    while (static_cast<int>(roots.size()) < d) {
      Rational r(root(rng));
      if (r != 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    unsigned k = static_cast<unsigned>(pw(rng));
    RPoly qp = ratio_roots_poly(from_roots(roots), k);
    CHECK(qp.degree() == static_cast<long>(k) * d * d);
    CHECK(qp.coefficient(0) != 0);
    for (const auto& a : roots)
      for (const auto& b : roots) CHECK(qp(Rational(a / b)) == 0);
  }
}

TEST_CASE("ratio_roots_poly over the fraction field") {
  // p = (z - E(1))(z - E(-1)): ratios {1, 1, E(2), E(-2)}.
  using SPoly = UniPoly<Scalar>;
  Scalar a(FormalExp::exp(q(1))), b(FormalExp::exp(q(-1)));
  SPoly p = SPoly::linear_root(a) * SPoly::linear_root(b);
  SPoly r = ratio_roots_poly(p, 1);
  CHECK(r.degree() == 4);
  CHECK(r(Scalar(1)).is_zero());
  CHECK(r(a / b).is_zero());
  CHECK(r(b / a).is_zero());
}

TEST_CASE("eigenvalues_float") {
  auto id = eigenvalues_float(RationalMatrix::identity(3));
  for (auto z : id) CHECK(std::abs(z - 1.0) < 1e-12);
  auto rot = eigenvalues_float(RationalMatrix{{q(0), q(-1)}, {q(1), q(0)}});
  REQUIRE(rot.size() == 2);
  CHECK(std::abs(std::abs(rot[0].imag()) - 1.0) < 1e-12);
  CHECK(std::abs(rot[0] + rot[1]) < 1e-12);
  auto dg = eigenvalues_float(RationalMatrix::diagonal({q(2), q(3)}));
  std::vector<double> re{dg[0].real(), dg[1].real()};
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(2.0));
  CHECK(re[1] == doctest::Approx(3.0));
}

TEST_CASE("matrix CSV parsing") {
  RationalMatrix m = parse_rational_matrix_csv("1,2\n3/4, -1\n");
  CHECK(m == RationalMatrix{{q(1), q(2)}, {q(3, 4), q(-1)}});
  CHECK_THROWS_AS(parse_rational_matrix_csv("1,2\n3\n"), Error);
  CHECK(RationalMatrix{{q(2), q(1)}, {q(1), q(1)}}.inverse() == RationalMatrix{{q(1), q(-1)}, {q(-1), q(2)}});
}
