#include "polyinv/exppoly.hpp"

#include "polyinv/errors.hpp"

#include <numeric>

namespace polyinv {

unsigned total_degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); }

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

// --- MonomialPoly ----------------------------------------------------------

MonomialPoly MonomialPoly::constant(std::size_t dim, const FormalExp& c) {
  MonomialPoly p(dim);
  p.add_term(MultiIndex(dim, 0), c);
  return p;
}

MonomialPoly MonomialPoly::variable(std::size_t dim, std::size_t i) {
  if (i >= dim) throw Error(ErrorCode::Dimension, "variable index out of range");
  MultiIndex a(dim, 0);
  a[i] = 1;
  MonomialPoly p(dim);
  p.add_term(a, FormalExp(1));
  return p;
}

long MonomialPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(polyinv::total_degree(terms_.rbegin()->first));
}

FormalExp MonomialPoly::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? FormalExp() : it->second;
}

void MonomialPoly::add_term(const MultiIndex& a, const FormalExp& c) {
  if (a.size() != dim_) throw Error(ErrorCode::Dimension, "multi-index length does not match dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonomialPoly MonomialPoly::operator-() const {
  MonomialPoly out = *this;
  for (auto& [a, c] : out.terms_) c = -c;
  return out;
}

MonomialPoly operator+(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::Dimension, "polynomial dimension mismatch");
  MonomialPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MonomialPoly operator-(const MonomialPoly& a, const MonomialPoly& b) { return a + (-b); }

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::Dimension, "polynomial dimension mismatch");
  MonomialPoly out(a.dim_);
  MultiIndex m(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

MonomialPoly operator*(const FormalExp& c, const MonomialPoly& a) {
  MonomialPoly out(a.dim_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : a.terms_) out.add_term(m, c * x);
  return out;
}

MonomialPoly MonomialPoly::pow(unsigned k) const {
  MonomialPoly result = constant(dim_, FormalExp(1));
  MonomialPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MonomialPoly MonomialPoly::derivative(std::size_t i) const {
  if (i >= dim_) throw Error(ErrorCode::Dimension, "variable index out of range");
  MonomialPoly out(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    MultiIndex dm = m;
    --dm[i];
    out.add_term(dm, Rational(m[i]) * c);
  }
  return out;
}

// --- ExpPoly ---------------------------------------------------------------

bool is_zero_frequency(const Frequency& lambda) {
  for (const auto& x : lambda)
    if (!is_zero(x)) return false;
  return true;
}

ExpPoly ExpPoly::constant(std::size_t dim, const FormalExp& c) {
  ExpPoly f(dim);
  f.add_term(Frequency(dim, Rational(0)), MultiIndex(dim, 0), c);
  return f;
}

ExpPoly ExpPoly::monomial(const FormalExp& c, const MultiIndex& a, const Frequency& lambda) {
  if (a.size() != lambda.size()) throw Error(ErrorCode::Dimension, "monomial and frequency dimensions differ");
  ExpPoly f(a.size());
  f.add_term(lambda, a, c);
  return f;
}

ExpPoly ExpPoly::exponential(const Frequency& lambda, const FormalExp& c) {
  return monomial(c, MultiIndex(lambda.size(), 0), lambda);
}

ExpPoly ExpPoly::from_poly(const MonomialPoly& p, const Frequency& lambda) {
  ExpPoly f(p.dim());
  f.add(lambda, p);
  return f;
}

std::size_t ExpPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& [l, p] : terms_) n += p.terms().size();
  return n;
}

void ExpPoly::add_term(const Frequency& lambda, const MultiIndex& a, const FormalExp& c) {
  MonomialPoly p(dim_);
  p.add_term(a, c);
  add(lambda, p);
}

void ExpPoly::add(const Frequency& lambda, const MonomialPoly& p) {
  if (lambda.size() != dim_ || p.dim() != dim_)
    throw Error(ErrorCode::Dimension, "term dimension does not match exponential polynomial");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, p);
  if (!inserted) {
    it->second = it->second + p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& [l, p] : out.terms_) p = -p;
  return out;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::Dimension, "exponential polynomial dimension mismatch");
  ExpPoly out = a;
  for (const auto& [l, p] : b.terms_) out.add(l, p);
  return out;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const FormalExp& c, const ExpPoly& f) {
  ExpPoly out(f.dim_);
  if (c.is_zero()) return out;
  for (const auto& [l, p] : f.terms_) out.add(l, c * p);
  return out;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::Dimension, "exponential polynomial dimension mismatch");
  ExpPoly out(a.dim_);
  Frequency sum(a.dim_);
  for (const auto& [la, pa] : a.terms_)
    for (const auto& [lb, pb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = la[i] + lb[i];
      out.add(sum, pa * pb);
    }
  return out;
}

// --- operators -------------------------------------------------------------

ExpPoly substitute_affine(const ExpPoly& f, const RationalMatrix& a, const RationalVector& b) {
  const std::size_t d = f.dim();
  if (a.rows() != d || b.size() != d) throw Error(ErrorCode::Dimension, "affine substitution shape mismatch");
  const std::size_t dn = a.cols();

  std::vector<MonomialPoly> linear(d, MonomialPoly(dn));
  for (std::size_t i = 0; i < d; ++i) {
    linear[i] = MonomialPoly::constant(dn, FormalExp(b[i]));
    for (std::size_t j = 0; j < dn; ++j)
      if (!is_zero(a(i, j))) linear[i] = linear[i] + FormalExp(a(i, j)) * MonomialPoly::variable(dn, j);
  }
  // powers[i][k] = linear[i]^k, filled lazily.
  std::vector<std::vector<MonomialPoly>> powers(d);
  auto power = [&](std::size_t i, unsigned k) -> const MonomialPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MonomialPoly::constant(dn, FormalExp(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * linear[i]);
    return cache[k];
  };

  ExpPoly out(dn);
  Frequency mapped(dn);
  for (const auto& [lambda, p] : f.terms()) {
    for (std::size_t j = 0; j < dn; ++j) {
      Rational s(0);
      for (std::size_t i = 0; i < d; ++i) s += a(i, j) * lambda[i];
      mapped[j] = s;
    }
    MonomialPoly image(dn);
    for (const auto& [m, c] : p.terms()) {
      MonomialPoly prod = MonomialPoly::constant(dn, c);
      for (std::size_t i = 0; i < d; ++i)
        if (m[i]) prod = prod * power(i, m[i]);
      image = image + prod;
    }
    out.add(mapped, FormalExp::exp(dot(lambda, b)) * image);
  }
  return out;
}

ExpPoly translate(const ExpPoly& f, const RationalVector& h) {
  if (h.size() != f.dim()) throw Error(ErrorCode::Dimension, "step dimension does not match");
  return substitute_affine(f, RationalMatrix::identity(f.dim()), h);
}

ExpPoly translate_symbolic(const ExpPoly& f) {
  for (const auto& [lambda, p] : f.terms())
    if (!is_zero_frequency(lambda))
      throw Error(ErrorCode::UnsupportedSymbolic,
                  "symbolic translation needs an ordinary polynomial; frequency " + to_string(lambda) +
                      " is present");
  const std::size_t d = f.dim();
  RationalMatrix a(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = 1;
    a(i, d + i) = 1;
  }
  return substitute_affine(f, a, RationalVector(d, Rational(0)));
}

ExpPoly finite_difference(const ExpPoly& f, const RationalVector& h) { return translate(f, h) - f; }

ExpPoly mixed_difference(const ExpPoly& f, const std::vector<RationalVector>& steps) {
  for (const auto& h : steps)
    if (h.size() != f.dim()) throw Error(ErrorCode::Dimension, "step dimension does not match");
  ExpPoly g = f;
  for (const auto& h : steps) g = finite_difference(g, h);
  return g;
}

ExpPoly mixed_difference_symbolic(const ExpPoly& f, unsigned n) {
  const std::size_t d = f.dim();
  const std::size_t width = d * (n + 1);
  if (n >= 20) throw Error(ErrorCode::InvalidArgument, "symbolic difference order too large");
  ExpPoly out(width);
  const RationalVector zero(d, Rational(0));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RationalMatrix a(d, width);
    for (std::size_t i = 0; i < d; ++i) a(i, i) = 1;
    unsigned size = 0;
    for (unsigned k = 0; k < n; ++k)
      if (mask & (1u << k)) {
        ++size;
        for (std::size_t i = 0; i < d; ++i) a(i, d * (k + 1) + i) = 1;
      }
    ExpPoly term = substitute_affine(f, a, zero);
    out = ((n - size) % 2 == 0) ? out + term : out - term;
  }
  return out;
}

ExpPoly compose_linear(const ExpPoly& f, const RationalMatrix& p) {
  if (p.rows() != f.dim() || p.cols() != f.dim())
    throw Error(ErrorCode::Dimension, "composition matrix must be d x d");
  if (is_zero(p.determinant())) throw Error(ErrorCode::NotInvertible, "composition matrix is singular");
  return substitute_affine(f, p, RationalVector(f.dim(), Rational(0)));
}

ExpPoly slice(const ExpPoly& f, const std::vector<std::size_t>& fixed_axes, const RationalVector& values) {
  const std::size_t d = f.dim();
  if (fixed_axes.size() != values.size()) throw Error(ErrorCode::Dimension, "slice values do not match axes");
  std::vector<bool> fixed(d, false);
  RationalVector b(d, Rational(0));
  for (std::size_t k = 0; k < fixed_axes.size(); ++k) {
    std::size_t i = fixed_axes[k];
    if (i >= d) throw Error(ErrorCode::Dimension, "slice axis " + std::to_string(i + 1) + " out of range");
    if (fixed[i]) throw Error(ErrorCode::InvalidArgument, "slice axis repeated");
    fixed[i] = true;
    b[i] = values[k];
  }
  const std::size_t rest = d - fixed_axes.size();
  if (rest == 0) throw Error(ErrorCode::InvalidArgument, "slice must leave at least one free variable");
  RationalMatrix a(d, rest);
  std::size_t j = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (!fixed[i]) a(i, j++) = 1;
  return substitute_affine(f, a, b);
}

ExpPoly partial_derivative(const ExpPoly& f, std::size_t i) {
  if (i >= f.dim()) throw Error(ErrorCode::Dimension, "variable index out of range");
  ExpPoly out(f.dim());
  for (const auto& [lambda, p] : f.terms()) {
    out.add(lambda, p.derivative(i));
    if (!is_zero(lambda[i])) out.add(lambda, FormalExp(lambda[i]) * p);
  }
  return out;
}

Classification classify(const ExpPoly& f) {
  Classification c;
  if (f.is_zero()) {
    c.is_ordinary_polynomial = true;
    c.total_degree = 0;
    c.fdeg = 0;
    return c;
  }
  if (f.terms().size() == 1 && is_zero_frequency(f.terms().begin()->first)) {
    c.is_ordinary_polynomial = true;
    c.total_degree = f.terms().begin()->second.total_degree();
    c.fdeg = c.total_degree;
  }
  return c;
}

}  // namespace polyinv
