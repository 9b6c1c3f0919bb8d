#pragma once

#include "polyinv/formal_exp.hpp"
#include "polyinv/matrix.hpp"
#include "polyinv/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// Exponent vector (a_1, ..., a_d) of the monomial x^a.
using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& a);

/// Ascending graded-lex order: lower total degree first, ties broken by
/// lexicographic comparison of the exponent vectors. Printing walks it
/// backwards, so x1^2 comes before x1*x2 before x2^2.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Frequency vector lambda of e^{<lambda, x>}; compared lexicographically.
using Frequency = RationalVector;

/// Ordinary polynomial with coefficients in Q[Q]. No zero coefficients.
class MonomialPoly {
 public:
  using Terms = std::map<MultiIndex, FormalExp, GradedLexLess>;

  MonomialPoly() = default;
  explicit MonomialPoly(std::size_t dim) : dim_(dim) {}
  static MonomialPoly constant(std::size_t dim, const FormalExp& c);
  /// x_i (0-based) as a polynomial in `dim` variables.
  static MonomialPoly variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  long total_degree() const;
  FormalExp coefficient(const MultiIndex& a) const;

  void add_term(const MultiIndex& a, const FormalExp& c);

  MonomialPoly operator-() const;
  friend MonomialPoly operator+(const MonomialPoly& a, const MonomialPoly& b);
  friend MonomialPoly operator-(const MonomialPoly& a, const MonomialPoly& b);
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
  friend MonomialPoly operator*(const FormalExp& c, const MonomialPoly& a);
  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

  MonomialPoly pow(unsigned k) const;
  /// Partial derivative with respect to x_i.
  MonomialPoly derivative(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

/// Exponential polynomial  sum_k p_k(x) e^{<lambda_k, x>}  in normal form:
/// frequencies distinct and sorted, no zero polynomial parts.
class ExpPoly {
 public:
  using Terms = std::map<Frequency, MonomialPoly>;

  ExpPoly() = default;
  explicit ExpPoly(std::size_t dim) : dim_(dim) {}
  static ExpPoly constant(std::size_t dim, const FormalExp& c);
  static ExpPoly monomial(const FormalExp& c, const MultiIndex& a, const Frequency& lambda);
  static ExpPoly exponential(const Frequency& lambda, const FormalExp& c = FormalExp(1));
  static ExpPoly from_poly(const MonomialPoly& p, const Frequency& lambda);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const;

  void add_term(const Frequency& lambda, const MultiIndex& a, const FormalExp& c);
  void add(const Frequency& lambda, const MonomialPoly& p);

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const FormalExp& c, const ExpPoly& f);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

bool is_zero_frequency(const Frequency& lambda);

/// f(A y + b) as an exponential polynomial in y, where A is d x d'. Each term
/// p(x) e^{<l,x>} becomes exp(<l,b>) p(Ay+b) e^{<A^T l, y>}.
ExpPoly substitute_affine(const ExpPoly& f, const RationalMatrix& a, const RationalVector& b);

/// tau_h f (x) = f(x + h).
ExpPoly translate(const ExpPoly& f, const RationalVector& h);

/// g(x, y) = f(x + y) in 2d variables (x first). Ordinary polynomials only.
ExpPoly translate_symbolic(const ExpPoly& f);

/// Delta_h f = tau_h f - f.
ExpPoly finite_difference(const ExpPoly& f, const RationalVector& h);

/// Delta_{h_1} ... Delta_{h_n} f.
ExpPoly mixed_difference(const ExpPoly& f, const std::vector<RationalVector>& steps);

/// Order-n mixed difference with formal steps: a function of
/// (x, h_1, ..., h_n) in d(n+1) variables,
///   sum over S subset of {1..n} of (-1)^{n-|S|} f(x + sum_{i in S} h_i).
ExpPoly mixed_difference_symbolic(const ExpPoly& f, unsigned n);

/// O_P f (x) = f(P x). Throws NotInvertible for singular P.
ExpPoly compose_linear(const ExpPoly& f, const RationalMatrix& p);

/// Substitutes x_i = value for i in fixed_axes (0-based); the result lives in
/// the remaining variables, in their original order.
ExpPoly slice(const ExpPoly& f, const std::vector<std::size_t>& fixed_axes, const RationalVector& values);

/// Term-wise partial derivative d/dx_i including the exponential factor.
ExpPoly partial_derivative(const ExpPoly& f, std::size_t i);

struct Classification {
  bool is_ordinary_polynomial = false;
  std::optional<long> total_degree;
  /// nullopt encodes an infinite functional degree.
  std::optional<long> fdeg;
};

/// The zero function counts as an ordinary polynomial of degree 0.
Classification classify(const ExpPoly& f);

}  // namespace polyinv
