#include "polyinv/function_space.hpp"

#include "polyinv/errors.hpp"
#include "polyinv/text.hpp"

#include <json.hpp>

#include <set>

namespace polyinv {

bool AxisLess::operator()(const Axis& a, const Axis& b) const {
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return GradedLexLess{}(a.mono, b.mono);
}

SparseVector expand(const ExpPoly& f) {
  SparseVector out;
  for (const auto& [lambda, p] : f.terms())
    for (const auto& [m, c] : p.terms()) out.emplace(Axis{lambda, m}, Scalar(c));
  return out;
}

std::string to_string(const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [axis, c] : v) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < axis.mono.size(); ++i) {
      if (!axis.mono[i]) continue;
      mono += "*x" + std::to_string(i + 1);
      if (axis.mono[i] > 1) mono += "^" + std::to_string(axis.mono[i]);
    }
    std::string cs = to_string(c);
    out += cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
    out += mono;
    if (!is_zero_frequency(axis.lambda)) out += "*exp(<" + to_string(axis.lambda) + ">.x)";
  }
  return out;
}

namespace {

FormalExp lcm(const FormalExp& a, const FormalExp& b) {
  FormalExp g = gcd(a, b);
  return *exact_divide(a * b, g);
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  for (const auto& [axis, v] : x) {
    auto [it, inserted] = y.try_emplace(axis, Scalar());
    it->second = it->second + a * v;
    if (it->second.is_zero()) y.erase(it);
  }
}

}  // namespace

FunctionSpace FunctionSpace::span(const std::vector<ExpPoly>& generators, std::optional<std::size_t> ambient_dim) {
  std::size_t d = ambient_dim ? *ambient_dim : (generators.empty() ? 1 : generators.front().dim());
  for (const auto& g : generators)
    if (g.dim() != d) throw Error(ErrorCode::Dimension, "generators have mixed ambient dimensions");
  FunctionSpace space(d);
  if (generators.empty()) return space;

  std::vector<SparseVector> sparse;
  std::set<Axis, AxisLess> axis_set;
  for (const auto& g : generators) {
    sparse.push_back(expand(g));
    for (const auto& [axis, c] : sparse.back()) axis_set.insert(axis);
  }
  std::vector<Axis> axes(axis_set.begin(), axis_set.end());
  std::map<Axis, std::size_t, AxisLess> column;
  for (std::size_t j = 0; j < axes.size(); ++j) column.emplace(axes[j], j);

  ScalarMatrix m(sparse.size(), axes.size());
  for (std::size_t i = 0; i < sparse.size(); ++i)
    for (const auto& [axis, c] : sparse[i]) m(i, column.at(axis)) = c;
  std::vector<std::size_t> pivots = m.rref_in_place();

  for (std::size_t r = 0; r < pivots.size(); ++r) {
    FormalExp scale(1);
    for (std::size_t j = 0; j < axes.size(); ++j)
      if (!m(r, j).is_zero() && !m(r, j).is_ring_element()) scale = lcm(scale, m(r, j).denominator());
    SparseVector row;
    ExpPoly b(d);
    for (std::size_t j = 0; j < axes.size(); ++j) {
      if (m(r, j).is_zero()) continue;
      Scalar v = Scalar(scale) * m(r, j);
      row.emplace(axes[j], v);
      b.add_term(axes[j].lambda, axes[j].mono, v.numerator());
    }
    space.pivots_.push_back(axes[pivots[r]]);
    space.rows_.push_back(std::move(row));
    space.basis_.push_back(std::move(b));
  }
  return space;
}

SparseVector FunctionSpace::residual(const ExpPoly& f) const {
  if (f.dim() != ambient_dim_) throw Error(ErrorCode::Dimension, "membership test across dimensions");
  SparseVector r = expand(f);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto it = r.find(pivots_[i]);
    if (it == r.end()) continue;
    Scalar c = it->second / rows_[i].at(pivots_[i]);
    axpy(r, -c, rows_[i]);
  }
  return r;
}

std::optional<std::vector<Scalar>> FunctionSpace::coordinates(const ExpPoly& f) const {
  if (f.dim() != ambient_dim_) throw Error(ErrorCode::Dimension, "membership test across dimensions");
  SparseVector r = expand(f);
  std::vector<Scalar> coords(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto it = r.find(pivots_[i]);
    if (it == r.end()) continue;
    coords[i] = it->second / rows_[i].at(pivots_[i]);
    axpy(r, -coords[i], rows_[i]);
  }
  if (!r.empty()) return std::nullopt;
  return coords;
}

bool FunctionSpace::contains_space(const FunctionSpace& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

FunctionSpace FunctionSpace::extended(const std::vector<ExpPoly>& more) const {
  std::vector<ExpPoly> gens = basis_;
  gens.insert(gens.end(), more.begin(), more.end());
  return span(gens, ambient_dim_);
}

ScalarMatrix operator_matrix(const FunctionSpace& v, const std::string& name, const LinearOperator& op) {
  const std::size_t n = v.dimension();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "operator matrix of the zero space");
  ScalarMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ExpPoly image = op(v.basis()[j]);
    auto coords = v.coordinates(image);
    if (!coords) throw NotInvariantError(name, j, to_string(v.basis()[j]), to_string(v.residual(image)));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = (*coords)[i];
  }
  return m;
}

ScalarMatrix translation_matrix(const FunctionSpace& v, const RationalVector& h) {
  return operator_matrix(v, "translation by (" + to_string(h) + ")",
                         [&](const ExpPoly& f) { return translate(f, h); });
}

ScalarMatrix composition_matrix(const FunctionSpace& v, const RationalMatrix& p) {
  return operator_matrix(v, "composition with " + to_string(p),
                         [&](const ExpPoly& f) { return compose_linear(f, p); });
}

FunctionSpace translation_closure(const ExpPoly& f) {
  const std::size_t d = f.dim();
  std::vector<ExpPoly> gens;
  for (const auto& [lambda, p] : f.terms()) {
    // Every partial derivative d^a p with a below the per-variable degrees.
    MultiIndex max_deg(d, 0);
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i < d; ++i) max_deg[i] = std::max(max_deg[i], m[i]);
    std::vector<MonomialPoly> frontier{p};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<MonomialPoly> next;
      for (const auto& q : frontier) {
        MonomialPoly cur = q;
        for (unsigned k = 0; k <= max_deg[i] && !cur.is_zero(); ++k) {
          next.push_back(cur);
          cur = cur.derivative(i);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& q : frontier) gens.push_back(ExpPoly::from_poly(q, lambda));
  }
  return FunctionSpace::span(gens, d);
}

FunctionSpace translation_closure(const FunctionSpace& v) {
  std::vector<ExpPoly> gens;
  for (const auto& b : v.basis()) {
    FunctionSpace c = translation_closure(b);
    gens.insert(gens.end(), c.basis().begin(), c.basis().end());
  }
  return FunctionSpace::span(gens, v.ambient_dim());
}

bool is_translation_invariant(const FunctionSpace& v) {
  for (const auto& b : v.basis())
    if (!v.contains_space(translation_closure(b))) return false;
  return true;
}

std::string space_to_json(const FunctionSpace& v) {
  nlohmann::json j;
  j["dim"] = v.ambient_dim();
  j["basis"] = nlohmann::json::array();
  for (const auto& b : v.basis()) j["basis"].push_back(to_string(b));
  return j.dump();
}

FunctionSpace space_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid space JSON: ") + e.what(), e.byte, "a JSON object");
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis") || !j["dim"].is_number_unsigned() ||
      !j["basis"].is_array())
    throw Error(ErrorCode::Parse, "space JSON must look like {\"dim\": d, \"basis\": [\"...\", ...]}");
  std::size_t d = j["dim"].get<std::size_t>();
  std::vector<ExpPoly> gens;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw Error(ErrorCode::Parse, "space basis entries must be strings");
    gens.push_back(parse_exppoly(b.get<std::string>(), d));
  }
  return FunctionSpace::span(gens, d);
}

}  // namespace polyinv
