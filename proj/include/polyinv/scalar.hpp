#pragma once

#include "polyinv/formal_exp.hpp"
#include "polyinv/rational.hpp"

#include <memory>
#include <string>

namespace polyinv {

/// Exact element of K = Frac(Q[Q]), the field of fractions of the formal
/// exponential ring. This is the scalar field of function spaces and operator
/// matrices: translating e^{<l,x>} by h multiplies it by exp(<l,h>), and the
/// real span of exponential polynomials with such coefficients has the same
/// dimension as their K-span (K embeds in R because e is transcendental).
///
/// Plain rationals take a fast path with no heap allocation. Non-rational
/// values are stored as a reduced fraction num/den whose denominator is either
/// 1 or a normalized non-unit (smallest exponent 0, top coefficient 1), so the
/// representation is canonical and equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& r) : rat_(r) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : rat_(v) {}             // NOLINT(google-explicit-constructor)
  Scalar(const FormalExp& x);             // NOLINT(google-explicit-constructor)
  static Scalar fraction(const FormalExp& num, const FormalExp& den);

  bool is_zero() const;
  bool is_rational() const { return !general_; }
  /// Denominator equal to 1, i.e. the value lies in Q[Q].
  bool is_ring_element() const { return !general_ || general_->den == FormalExp(1); }
  Rational to_rational() const;
  FormalExp numerator() const;
  FormalExp denominator() const;
  double to_double() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  struct General {
    FormalExp num;
    FormalExp den;
  };

  static Scalar make(FormalExp num, FormalExp den);

  Rational rat_;
  std::shared_ptr<const General> general_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Rationals print as "p/q", ring elements as formal sums, fractions as
/// "(num)/(den)".
std::string to_string(const Scalar& s);

}  // namespace polyinv
