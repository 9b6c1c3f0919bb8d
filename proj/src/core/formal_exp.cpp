#include "polyinv/formal_exp.hpp"

#include "polyinv/errors.hpp"
#include "polyinv/unipoly.hpp"

#include <algorithm>
#include <cmath>

namespace polyinv {

namespace {

// Dense conversions refuse to materialize polynomials above this degree.
constexpr unsigned long kMaxLaurentDegree = 200000;

// View of a family of FormalExp values as Laurent polynomials in
// u = exp(1/D), D the lcm of every exponent denominator.
struct LaurentFrame {
  mpz_class denominator = 1;

  explicit LaurentFrame(std::initializer_list<const FormalExp*> values) {
    for (const FormalExp* v : values)
      for (const auto& t : v->terms()) {
        mpz_class d = t.exponent.get_den();
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), d.get_mpz_t());
      }
  }

  // Returns (lowest exponent, polynomial in u with nonzero constant term).
  std::pair<Rational, UniPoly<Rational>> to_poly(const FormalExp& x) const {
    if (x.is_zero()) return {Rational(0), UniPoly<Rational>()};
    Rational low = x.terms().front().exponent;
    Rational span_q = (x.terms().back().exponent - low) * Rational(denominator);
    mpz_class span = span_q.get_num();
    if (span > kMaxLaurentDegree)
      throw Error(ErrorCode::Unsupported, "formal exponential spread too large for exact division");
    std::vector<Rational> coeffs(span.get_ui() + 1, Rational(0));
    for (const auto& t : x.terms()) {
      Rational k = (t.exponent - low) * Rational(denominator);
      coeffs[mpz_class(k.get_num()).get_ui()] = t.coefficient;
    }
    return {low, UniPoly<Rational>(std::move(coeffs))};
  }

  FormalExp from_poly(const UniPoly<Rational>& p, const Rational& shift) const {
    std::vector<FormalExp::Term> terms;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (is_zero(c[k])) continue;
      Rational e(mpz_class(static_cast<unsigned long>(k)), denominator);
      e.canonicalize();
      terms.push_back({e + shift, c[k]});
    }
    return FormalExp::from_terms(std::move(terms));
  }
};

}  // namespace

FormalExp::FormalExp(const Rational& c) {
  if (!polyinv::is_zero(c)) terms_.push_back({Rational(0), c});
}

FormalExp FormalExp::exp(const Rational& exponent, const Rational& coefficient) {
  FormalExp out;
  if (!polyinv::is_zero(coefficient)) out.terms_.push_back({exponent, coefficient});
  return out;
}

FormalExp FormalExp::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  FormalExp out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coefficient += t.coefficient;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return polyinv::is_zero(t.coefficient); });
  return out;
}

bool FormalExp::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && polyinv::is_zero(terms_[0].exponent));
}

Rational FormalExp::rational_value() const {
  if (!is_rational())
    throw Error(ErrorCode::InvalidArgument, "formal exponential " + to_string(*this) + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

Rational FormalExp::coefficient_of(const Rational& exponent) const {
  for (const auto& t : terms_)
    if (t.exponent == exponent) return t.coefficient;
  return 0;
}

std::optional<FormalExp> FormalExp::unit_inverse() const {
  if (!is_unit()) return std::nullopt;
  Rational inv = 1 / terms_[0].coefficient;
  return exp(-terms_[0].exponent, inv);
}

double FormalExp::to_double() const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.coefficient.get_d() * std::exp(t.exponent.get_d());
  return acc;
}

FormalExp FormalExp::operator-() const {
  FormalExp out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

FormalExp operator+(const FormalExp& a, const FormalExp& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FormalExp out;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exponent < i->exponent) {
      out.terms_.push_back(*j++);
    } else {
      Rational c = i->coefficient + j->coefficient;
      if (!is_zero(c)) out.terms_.push_back({i->exponent, c});
      ++i;
      ++j;
    }
  }
  return out;
}

FormalExp operator-(const FormalExp& a, const FormalExp& b) { return a + (-b); }

FormalExp operator*(const FormalExp& a, const FormalExp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    FormalExp out;
    out.terms_.push_back(
        {a.terms_[0].exponent + b.terms_[0].exponent, a.terms_[0].coefficient * b.terms_[0].coefficient});
    return out;
  }
  std::vector<FormalExp::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.exponent + t.exponent, s.coefficient * t.coefficient});
  return FormalExp::from_terms(std::move(terms));
}

FormalExp operator*(const Rational& c, const FormalExp& a) {
  if (is_zero(c)) return {};
  FormalExp out = a;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

bool operator<(const FormalExp& a, const FormalExp& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const FormalExp::Term& x, const FormalExp::Term& y) {
        if (x.exponent != y.exponent) return x.exponent < y.exponent;
        return x.coefficient < y.coefficient;
      });
}

std::string to_string(const FormalExp& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& t : x.terms()) {
    if (!out.empty()) out += " + ";
    if (is_zero(t.exponent)) {
      out += to_string(t.coefficient);
    } else {
      if (t.coefficient != 1) out += to_string(t.coefficient) + "*";
      out += "E(" + to_string(t.exponent) + ")";
    }
  }
  return out;
}

std::pair<FormalExp, FormalExp> normalize_associate(const FormalExp& x) {
  if (x.is_zero()) return {x, FormalExp(1)};
  FormalExp unit = FormalExp::exp(-x.terms().front().exponent, 1 / x.terms().back().coefficient);
  return {x * unit, unit};
}

FormalExp gcd(const FormalExp& a, const FormalExp& b) {
  if (a.is_zero()) return normalize_associate(b).first;
  if (b.is_zero()) return normalize_associate(a).first;
  if (a.is_unit() || b.is_unit()) return FormalExp(1);
  LaurentFrame frame{&a, &b};
  auto pa = frame.to_poly(a);
  auto pb = frame.to_poly(b);
  UniPoly<Rational> g = gcd(pa.second, pb.second);
  return normalize_associate(frame.from_poly(g, Rational(0))).first;
}

std::optional<FormalExp> exact_divide(const FormalExp& a, const FormalExp& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero formal exponential");
  if (a.is_zero()) return FormalExp();
  if (auto inv = b.unit_inverse()) return a * *inv;
  LaurentFrame frame{&a, &b};
  auto pa = frame.to_poly(a);
  auto pb = frame.to_poly(b);
  auto [quot, rem] = pa.second.divmod(pb.second);
  if (!rem.is_zero()) return std::nullopt;
  return frame.from_poly(quot, pa.first - pb.first);
}

}  // namespace polyinv
