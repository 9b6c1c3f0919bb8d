#pragma once

#include "polyinv/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyinv {

/// Element of the group ring Q[Q]: a finite sum  sum_e c_e * exp(e)  with
/// rational exponents e. Multiplication adds exponents, so exp(a)*exp(b) =
/// exp(a+b). Terms are kept sorted by exponent with no zero coefficients,
/// which makes equality a term-wise comparison.
class FormalExp {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FormalExp() = default;
  FormalExp(const Rational& c);  // NOLINT(google-explicit-constructor): c * exp(0)
  FormalExp(long c) : FormalExp(Rational(c)) {}  // NOLINT

  static FormalExp exp(const Rational& exponent, const Rational& coefficient = 1);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static FormalExp from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when only the exponent-0 term is present (or the value is zero).
  bool is_rational() const;
  /// Single term: invertible in the ring.
  bool is_unit() const { return terms_.size() == 1; }
  Rational rational_value() const;
  Rational coefficient_of(const Rational& exponent) const;
  std::optional<FormalExp> unit_inverse() const;

  double to_double() const;

  FormalExp operator-() const;
  friend FormalExp operator+(const FormalExp& a, const FormalExp& b);
  friend FormalExp operator-(const FormalExp& a, const FormalExp& b);
  friend FormalExp operator*(const FormalExp& a, const FormalExp& b);
  friend FormalExp operator*(const Rational& c, const FormalExp& a);
  FormalExp& operator+=(const FormalExp& o) { return *this = *this + o; }
  FormalExp& operator-=(const FormalExp& o) { return *this = *this - o; }
  FormalExp& operator*=(const FormalExp& o) { return *this = *this * o; }

  friend bool operator==(const FormalExp&, const FormalExp&) = default;

  /// Total order used only for canonical sorting.
  friend bool operator<(const FormalExp& a, const FormalExp& b);

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const FormalExp& x) { return x.is_zero(); }

/// Sum rendering such as "2*E(1) + -1"; E(q) denotes exp(q).
std::string to_string(const FormalExp& x);

/// Greatest common divisor in Q[Q], normalized so that the smallest exponent
/// is 0 and the coefficient of the largest exponent is 1. gcd(0,0) = 0.
FormalExp gcd(const FormalExp& a, const FormalExp& b);

/// a / b when b divides a in Q[Q]; nullopt otherwise. Throws on b == 0.
std::optional<FormalExp> exact_divide(const FormalExp& a, const FormalExp& b);

/// Multiplies by a unit so that the smallest exponent becomes 0 and the top
/// coefficient 1. Returns the normalized value and the unit used.
std::pair<FormalExp, FormalExp> normalize_associate(const FormalExp& x);

}  // namespace polyinv
