#pragma once

#include "polyinv/exppoly.hpp"
#include "polyinv/matrix.hpp"
#include "polyinv/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// Coordinate axis of the canonical coordinateization: a (frequency,
/// monomial) pair. Coefficients along an axis live in K = Frac(Q[Q]).
struct Axis {
  Frequency lambda;
  MultiIndex mono;
};

struct AxisLess {
  bool operator()(const Axis& a, const Axis& b) const;
};

using SparseVector = std::map<Axis, Scalar, AxisLess>;

SparseVector expand(const ExpPoly& f);
std::string to_string(const SparseVector& v);

/// Finite-dimensional span of exponential polynomials. The basis is the
/// reduced row echelon form of the generators over K (axes ascending, so
/// span{x, 1} has basis [1, x]); each row is scaled to clear denominators so
/// basis elements keep Q[Q] coefficients.
class FunctionSpace {
 public:
  explicit FunctionSpace(std::size_t ambient_dim = 1) : ambient_dim_(ambient_dim) {}

  /// reduce_basis: all generators must share the ambient dimension.
  static FunctionSpace span(const std::vector<ExpPoly>& generators, std::optional<std::size_t> ambient_dim = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<ExpPoly>& basis() const { return basis_; }

  /// Exact coordinates with sum c_i basis_i = f, or nullopt if f is outside.
  std::optional<std::vector<Scalar>> coordinates(const ExpPoly& f) const;
  bool contains(const ExpPoly& f) const { return coordinates(f).has_value(); }
  /// f minus its pivot-wise projection; zero exactly when f is a member.
  SparseVector residual(const ExpPoly& f) const;

  bool contains_space(const FunctionSpace& other) const;
  FunctionSpace extended(const std::vector<ExpPoly>& more) const;

  friend bool operator==(const FunctionSpace& a, const FunctionSpace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  std::vector<ExpPoly> basis_;
  std::vector<Axis> pivots_;
  std::vector<SparseVector> rows_;
};

using LinearOperator = std::function<ExpPoly(const ExpPoly&)>;

/// Column j holds the coordinates of op(basis_j). Throws NotInvariantError
/// naming the offending basis element and its residual.
ScalarMatrix operator_matrix(const FunctionSpace& v, const std::string& name, const LinearOperator& op);
ScalarMatrix translation_matrix(const FunctionSpace& v, const RationalVector& h);
ScalarMatrix composition_matrix(const FunctionSpace& v, const RationalMatrix& p);

/// Smallest translation-invariant space containing f: the span of
/// (d^a p_k)(x) e^{<l_k, x>} over all multi-indices a and terms k.
FunctionSpace translation_closure(const ExpPoly& f);
FunctionSpace translation_closure(const FunctionSpace& v);

/// Every basis element's translation closure lies in v.
bool is_translation_invariant(const FunctionSpace& v);

std::string space_to_json(const FunctionSpace& v);
FunctionSpace space_from_json(const std::string& text);

}  // namespace polyinv
