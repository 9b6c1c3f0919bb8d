#pragma once

#include "polyinv/function_space.hpp"
#include "polyinv/groups.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyinv {

/// Where group elements come from: finite specs are enumerated exhaustively,
/// everything else is sampled in rounds of `round_size` elements.
struct GroupSource {
  GroupSpec spec;
  std::uint64_t seed = 0;
  std::size_t round_size = 16;
};

struct ClosureResult {
  bool cap_exceeded = false;
  FunctionSpace space;             // the closure, or the last space before the cap was hit
  std::vector<std::size_t> trace;  // dimension after each round
  bool exhaustive = false;         // every group element was used (finite groups)
  bool group_invariant = false;    // verified for every element used
  bool translation_invariant = false;
  std::size_t elements_used = 0;
  /// "invariant under all elements", "stable under sampled elements" or "cap exceeded".
  std::string status;
};

/// Span of O_P(v) over the group. Finite groups: W = span{O_{P_j}(g_k)} and
/// invariance under every element is verified. Samplers: images are added
/// until a full round leaves the dimension unchanged or the cap is passed.
ClosureResult group_closure(const FunctionSpace& v, const GroupSource& source, std::size_t cap);

/// Smallest space containing f and invariant under translations and the
/// group, alternating translation and group closure until a fixed point.
ClosureResult r_g_closure(const ExpPoly& f, const GroupSource& source, std::size_t cap);

}  // namespace polyinv
