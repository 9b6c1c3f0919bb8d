#pragma once

#include "polyinv/errors.hpp"
#include "polyinv/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace polyinv {

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
/// The leading stored coefficient is nonzero unless the polynomial is zero.
///
/// T must be a commutative ring constructible from Rational and provide a
/// free `is_zero(const T&)`. Division-based members additionally need a field.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const T& c) { return UniPoly(std::vector<T>{c}); }
  static UniPoly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(Rational(0)));
    v[degree] = c;
    return UniPoly(std::move(v));
  }
  /// z - root
  static UniPoly linear_root(const T& root) {
    return UniPoly(std::vector<T>{T(Rational(0)) - root, T(Rational(1))});
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(Rational(0)); }
  T leading() const { return coeffs_.empty() ? T(Rational(0)) : coeffs_.back(); }

  T operator()(const T& z) const {
    T acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(Rational(0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = out[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<T> out;
    out.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) out.push_back(T(Rational(0)) - c);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(Rational(0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const T& c, const UniPoly& a) {
    std::vector<T> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(c * x);
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(unsigned k) const {
    UniPoly result = constant(T(Rational(1)));
    UniPoly base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out.push_back(T(Rational(static_cast<long>(i))) * coeffs_[i]);
    return UniPoly(std::move(out));
  }

  /// p(c*z)
  UniPoly scale_argument(const T& c) const {
    std::vector<T> out = coeffs_;
    T power(Rational(1));
    for (auto& x : out) {
      x = x * power;
      power = power * c;
    }
    return UniPoly(std::move(out));
  }

  // --- field-only operations -------------------------------------------

  UniPoly monic() const {
    if (is_zero()) return {};
    T inv = T(Rational(1)) / leading();
    return inv * *this;
  }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<T> rem = coeffs_;
    long dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<T> quot(static_cast<std::size_t>(degree() - dd + 1), T(Rational(0)));
    T lead_inv = T(Rational(1)) / divisor.leading();
    for (long k = degree() - dd; k >= 0; --k) {
      T c = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
      quot[static_cast<std::size_t>(k)] = c;
      if (detail::coeff_is_zero(c)) continue;
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(k + j)] =
            rem[static_cast<std::size_t>(k + j)] - c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Human-readable rendering in the variable `var`, highest degree first.
template <class T>
std::string to_string(const UniPoly<T>& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const T& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c);
    bool unit = cs == "1";
    if (k == 0 || !unit) {
      bool compound = cs.find_first_of("+ ") != std::string::npos;
      out += compound && k > 0 ? "(" + cs + ")" : cs;
      if (k > 0) out += "*";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace polyinv
