#pragma once

#include "polyinv/matrix.hpp"
#include "polyinv/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

enum class GroupKind {
  Orthogonal,          // O(d)
  SpecialOrthogonal,   // SO(d)
  GeneralOrthogonal,   // O(p,q)
  Symplectic,          // Sp(2n), d = 2n
  GeneralLinear,       // GL(d)
  Dilations,           // {k I}
  SignedPermutations,  // hyperoctahedral group
  Diagonal,            // invertible diagonal matrices
  Finite,              // explicit element list
};

struct GroupSpec {
  GroupKind kind = GroupKind::GeneralLinear;
  std::size_t d = 1;  // ambient dimension (2n for Symplectic, p+q for O(p,q))
  std::size_t p = 0, q = 0;
  std::vector<long> ks{2, 3, 4, 5, 7, 9};  // dilation factors used by the sampler
  std::vector<RationalMatrix> elements;     // Finite only

  static GroupSpec orthogonal(std::size_t d);
  static GroupSpec special_orthogonal(std::size_t d);
  static GroupSpec general_orthogonal(std::size_t p, std::size_t q);
  static GroupSpec symplectic(std::size_t n);
  static GroupSpec general_linear(std::size_t d);
  static GroupSpec dilations(std::size_t d, std::vector<long> ks = {2, 3, 4, 5, 7, 9});
  static GroupSpec signed_permutations(std::size_t d);
  static GroupSpec diagonal(std::size_t d);
  /// Verifies closure and inverses (see finite_group).
  static GroupSpec finite(std::vector<RationalMatrix> elements);

  bool is_finite() const { return kind == GroupKind::Finite || kind == GroupKind::SignedPermutations; }
  /// Normal subgroups of GL(d) in this catalog (GL itself and the scalars).
  bool is_normal_in_gl() const { return kind == GroupKind::GeneralLinear || kind == GroupKind::Dilations; }
};

std::string describe(const GroupSpec& spec);

/// Parses "SO(2)", "SO2", "O(3)", "O(1,1)", "Sp(4)", "GL(2)", "Dil(2)",
/// "Diag(2)", "Hyp(2)", or a JSON object {"variant": ..., "params": {...}}.
GroupSpec parse_group_spec(const std::string& text);
std::string group_spec_to_json(const GroupSpec& spec);

RationalMatrix signature_matrix(std::size_t p, std::size_t q);  // I_{p,q}
RationalMatrix symplectic_form(std::size_t n);                  // Omega_n, 2n x 2n

struct MembershipResult {
  bool member = false;
  /// Largest absolute entry of the defining-identity defect (0 for members).
  double residual = 0;
  std::string detail;
};

MembershipResult membership_check(const RationalMatrix& m, const GroupSpec& spec);
/// Float backend: member iff the defect is at most tol entrywise.
MembershipResult membership_check_float(const std::vector<double>& row_major, std::size_t n, const GroupSpec& spec,
                                        double tol);

/// Deterministic samples; element i depends only on (seed, i).
std::vector<RationalMatrix> sample(const GroupSpec& spec, std::uint64_t seed, std::size_t count);

/// O(1,1) boost [[a, c], [c, a]] with a = (u^2+1)/(2u), c = (u^2-1)/(2u).
RationalMatrix hyperbolic_boost(const Rational& u);
/// Rotation with cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
RationalMatrix rational_rotation(const Rational& t);

struct FiniteGroupTable {
  std::vector<RationalMatrix> elements;  // elements[0] is the identity
  std::vector<std::vector<std::size_t>> eta;  // P_i P_j = P_{eta[i][j]}
  std::vector<std::size_t> inverse;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const RationalMatrix& m) const;
};

/// Throws NotClosed naming the first product or inverse missing from the set.
FiniteGroupTable finite_group(const std::vector<RationalMatrix>& elements);
FiniteGroupTable finite_group(const GroupSpec& spec);

/// The 2^d d! signed permutation matrices.
std::vector<RationalMatrix> hyperoctahedral(std::size_t d);

enum class BlockPlacement { UpperLeft, LowerRight, SymplecticPair };

/// UpperLeft: diag(A, I_extra); LowerRight: diag(I_extra, A);
/// SymplecticPair: diag(A, (A^T)^{-1}) (extra ignored).
RationalMatrix embed_block(const RationalMatrix& a, BlockPlacement placement, std::size_t extra = 0);

}  // namespace polyinv
