#include "polyinv/closure.hpp"

#include "polyinv/errors.hpp"

namespace polyinv {

namespace {

void require_dimension(const GroupSpec& spec, std::size_t d) {
  if (spec.d != d)
    throw Error(ErrorCode::Dimension, describe(spec) + " acts on dimension " + std::to_string(spec.d) +
                                          " but the space lives in dimension " + std::to_string(d));
}

std::uint64_t round_seed(std::uint64_t seed, std::size_t round) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ull * (round + 1)));
  return mix.next();
}

}  // namespace

ClosureResult group_closure(const FunctionSpace& v, const GroupSource& source, std::size_t cap) {
  require_dimension(source.spec, v.ambient_dim());
  if (cap < v.dimension()) throw Error(ErrorCode::InvalidArgument, "closure cap is below the starting dimension");
  ClosureResult r;
  r.trace.push_back(v.dimension());

  if (source.spec.is_finite()) {
    FiniteGroupTable table = finite_group(source.spec);
    std::vector<ExpPoly> images;
    for (const auto& p : table.elements)
      for (const auto& b : v.basis()) images.push_back(compose_linear(b, p));
    r.space = FunctionSpace::span(images, v.ambient_dim());
    r.trace.push_back(r.space.dimension());
    r.exhaustive = true;
    r.elements_used = table.size();
    if (r.space.dimension() > cap) {
      r.cap_exceeded = true;
      r.status = "cap exceeded";
      return r;
    }
    r.group_invariant = true;
    for (const auto& p : table.elements)
      for (const auto& b : r.space.basis())
        if (!r.space.contains(compose_linear(b, p))) r.group_invariant = false;
    r.translation_invariant = is_translation_invariant(r.space);
    r.status = r.group_invariant ? "invariant under all elements" : "not invariant";
    return r;
  }

  if (source.round_size == 0) throw Error(ErrorCode::InvalidArgument, "sampling round size must be positive");
  r.space = v;
  for (std::size_t round = 0;; ++round) {
    auto elements = sample(source.spec, round_seed(source.seed, round), source.round_size);
    r.elements_used += elements.size();
    std::vector<ExpPoly> fresh;
    FunctionSpace grown = r.space;
    for (const auto& p : elements)
      for (const auto& b : r.space.basis()) {
        ExpPoly image = compose_linear(b, p);
        if (grown.contains(image)) continue;
        grown = grown.extended({image});
        if (grown.dimension() > cap) break;
      }
    if (grown.dimension() == r.space.dimension()) break;
    r.space = std::move(grown);
    r.trace.push_back(r.space.dimension());
    if (r.space.dimension() > cap) {
      r.cap_exceeded = true;
      r.status = "cap exceeded";
      return r;
    }
  }
  r.group_invariant = true;
  r.translation_invariant = is_translation_invariant(r.space);
  r.status = "stable under sampled elements";
  return r;
}

ClosureResult r_g_closure(const ExpPoly& f, const GroupSource& source, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "closure cap must be positive");
  require_dimension(source.spec, f.dim());
  FunctionSpace w = translation_closure(f);
  std::vector<std::size_t> trace{w.dimension()};
  std::size_t used = 0;
  while (true) {
    if (w.dimension() > cap) {
      ClosureResult r;
      r.cap_exceeded = true;
      r.space = w;
      r.trace = trace;
      r.elements_used = used;
      r.status = "cap exceeded";
      return r;
    }
    ClosureResult g = group_closure(w, source, cap);
    used += g.elements_used;
    trace.insert(trace.end(), g.trace.begin() + 1, g.trace.end());
    if (g.cap_exceeded) {
      g.trace = trace;
      g.elements_used = used;
      return g;
    }
    FunctionSpace t = translation_closure(g.space);
    if (t.dimension() == g.space.dimension() && t.dimension() == w.dimension()) {
      g.trace = trace;
      g.elements_used = used;
      g.translation_invariant = true;
      return g;
    }
    w = std::move(t);
    trace.push_back(w.dimension());
  }
}

}  // namespace polyinv
