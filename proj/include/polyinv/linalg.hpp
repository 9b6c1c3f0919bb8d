#pragma once

#include "polyinv/errors.hpp"
#include "polyinv/matrix.hpp"
#include "polyinv/unipoly.hpp"

#include <complex>
#include <vector>

namespace polyinv {

/// det(zI - M), monic of degree M.rows(), by the Faddeev-LeVerrier recursion
///   M_1 = M, c_{n-k} = -tr(M_k)/k, M_{k+1} = M (M_k + c_{n-k} I).
/// Exact over any commutative Q-algebra.
template <class T>
UniPoly<T> char_poly(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::Dimension, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<T> c(n + 1, T(Rational(0)));
  c[n] = T(Rational(1));
  Matrix<T> mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    T ck = T(Rational(0)) - mk.trace() * T(make_rational(1, static_cast<long>(k)));
    c[n - k] = ck;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + ck;
    mk = m * mk;
  }
  return UniPoly<T>(std::move(c));
}

/// Sylvester matrix of p and q taken with formal degrees dp >= deg p and
/// dq >= deg q (missing leading coefficients are zeros).
template <class T>
Matrix<T> sylvester_matrix(const UniPoly<T>& p, const UniPoly<T>& q, std::size_t dp, std::size_t dq) {
  const std::size_t n = dp + dq;
  Matrix<T> s(n, n);
  for (std::size_t row = 0; row < dq; ++row)
    for (std::size_t k = 0; k <= dp; ++k) s(row, row + dp - k) = p.coefficient(k);
  for (std::size_t row = 0; row < dp; ++row)
    for (std::size_t k = 0; k <= dq; ++k) s(dq + row, row + dq - k) = q.coefficient(k);
  return s;
}

template <class T>
T resultant_formal(const UniPoly<T>& p, const UniPoly<T>& q, std::size_t dp, std::size_t dq) {
  if (dp + dq == 0) return T(Rational(1));
  return sylvester_matrix(p, q, dp, dq).determinant();
}

/// Res(p, q) as the Sylvester determinant; zero iff p and q share a root
/// over the algebraic closure (or both leading coefficients vanish).
template <class T>
T resultant(const UniPoly<T>& p, const UniPoly<T>& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::UndefinedResultant, "resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) {
    // Res(0, q) = 0 unless q is a nonzero constant.
    const UniPoly<T>& other = p.is_zero() ? q : p;
    return other.degree() == 0 ? T(Rational(1)) : T(Rational(0));
  }
  return resultant_formal(p, q, static_cast<std::size_t>(p.degree()), static_cast<std::size_t>(q.degree()));
}

/// Monic polynomial whose roots are all ratios mu/lambda of roots of p,
/// i.e. Res_w(p(w), p(z w)) normalized, of degree N^2. Built by evaluating the
/// resultant at N^2+1 integer points and Newton interpolation.
template <class T>
UniPoly<T> ratio_roots_base(const UniPoly<T>& p) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "ratio polynomial needs degree >= 1");
  if (detail::coeff_is_zero(p.coefficient(0)))
    throw Error(ErrorCode::ZeroEigenvalue, "polynomial has a zero root; operator matrix is singular");
  const UniPoly<T> pm = p.monic();
  const std::size_t n = static_cast<std::size_t>(pm.degree());
  const std::size_t deg = n * n;
  std::vector<T> xs, ys;
  xs.reserve(deg + 1);
  ys.reserve(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    T z(Rational(static_cast<long>(i)));
    xs.push_back(z);
    ys.push_back(resultant_formal(pm, pm.scale_argument(z), n, n));
  }
  // Newton divided differences.
  std::vector<T> dd = ys;
  for (std::size_t level = 1; level <= deg; ++level)
    for (std::size_t i = deg; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UniPoly<T> result = UniPoly<T>::constant(dd[deg]);
  for (std::size_t k = deg; k-- > 0;)
    result = result * UniPoly<T>::linear_root(xs[k]) + UniPoly<T>::constant(dd[k]);
  return result.monic();
}

/// ratio_roots_base(p)^power: a multiple of the characteristic polynomial of
/// every operator whose eigenvalues are ratios of roots of p, with nonzero
/// constant term.
template <class T>
UniPoly<T> ratio_roots_poly(const UniPoly<T>& p, unsigned power) {
  if (power == 0) throw Error(ErrorCode::InvalidArgument, "multiplicity power must be positive");
  return ratio_roots_base(p).pow(power);
}

/// q(M) by Horner evaluation.
template <class T>
Matrix<T> apply_poly_to_matrix(const UniPoly<T>& q, const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::Dimension, "polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> acc(n, n);
  const auto& c = q.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + c[k];
  }
  return acc;
}

inline double to_double_value(const Rational& r) { return r.get_d(); }
inline double to_double_value(const Scalar& s) { return s.to_double(); }

/// Complex eigenvalues of a real matrix with multiplicity. Each returned value
/// satisfies |det(M - lambda I)| <= tol * max(1, ||M||_F)^N; otherwise (or if
/// the QR iteration does not converge) a NumericalError carries the residual.
std::vector<std::complex<double>> eigenvalues_float(const std::vector<double>& row_major, std::size_t n,
                                                    double tol = 1e-9);

template <class T>
std::vector<std::complex<double>> eigenvalues_float(const Matrix<T>& m, double tol = 1e-9) {
  if (!m.is_square()) throw Error(ErrorCode::Dimension, "eigenvalues of a non-square matrix");
  std::vector<double> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(to_double_value(x));
  return eigenvalues_float(d, m.rows(), tol);
}

}  // namespace polyinv
