#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polyinv {

/// Exact rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

namespace detail {
// Calls the free is_zero from contexts where a member is_zero() hides it.
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and finite decimals such as "-0.25" (converted exactly).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

/// Comma separated rationals, e.g. "1,0" or "3/5, -4/5".
RationalVector parse_rational_vector(std::string_view text);
std::string to_string(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace polyinv
