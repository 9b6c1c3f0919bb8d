#include "polyinv/scalar.hpp"

#include "polyinv/errors.hpp"

namespace polyinv {

Scalar::Scalar(const FormalExp& x) {
  if (x.is_rational()) {
    rat_ = x.rational_value();
  } else {
    general_ = std::make_shared<const General>(General{x, FormalExp(1)});
  }
}

Scalar Scalar::fraction(const FormalExp& num, const FormalExp& den) { return make(num, den); }

Scalar Scalar::make(FormalExp num, FormalExp den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (num.is_zero()) return Scalar();
  if (auto inv = den.unit_inverse()) return Scalar(num * *inv);
  FormalExp g = gcd(num, den);
  if (g != FormalExp(1)) {
    num = *exact_divide(num, g);
    den = *exact_divide(den, g);
    if (auto inv2 = den.unit_inverse()) return Scalar(num * *inv2);
  }
  auto [den_n, unit] = normalize_associate(den);
  Scalar out;
  out.general_ = std::make_shared<const General>(General{num * unit, den_n});
  return out;
}

bool Scalar::is_zero() const { return general_ ? general_->num.is_zero() : polyinv::is_zero(rat_); }

Rational Scalar::to_rational() const {
  if (!general_) return rat_;
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "scalar " + to_string(*this) + " is not rational");
  return general_->num.rational_value();
}

FormalExp Scalar::numerator() const { return general_ ? general_->num : FormalExp(rat_); }

FormalExp Scalar::denominator() const { return general_ ? general_->den : FormalExp(1); }

double Scalar::to_double() const {
  if (!general_) return rat_.get_d();
  return general_->num.to_double() / general_->den.to_double();
}

Scalar Scalar::operator-() const {
  if (!general_) return Scalar(Rational(-rat_));
  Scalar out;
  out.general_ = std::make_shared<const General>(General{-general_->num, general_->den});
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.general_ && !b.general_) return Scalar(Rational(a.rat_ + b.rat_));
  FormalExp an = a.numerator(), ad = a.denominator();
  FormalExp bn = b.numerator(), bd = b.denominator();
  if (ad == bd) {
    if (ad == FormalExp(1)) return Scalar(an + bn);
    return Scalar::make(an + bn, ad);
  }
  return Scalar::make(an * bd + bn * ad, ad * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.general_ && !b.general_) return Scalar(Rational(a.rat_ * b.rat_));
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (!a.general_ && b.general_->den == FormalExp(1))
    return Scalar(a.rat_ * b.general_->num);
  if (!b.general_ && a.general_ && a.general_->den == FormalExp(1)) return Scalar(b.rat_ * a.general_->num);
  FormalExp ad = a.denominator(), bd = b.denominator();
  if (ad == FormalExp(1) && bd == FormalExp(1)) return Scalar(a.numerator() * b.numerator());
  return Scalar::make(a.numerator() * b.numerator(), ad * bd);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (!a.general_ && !b.general_) return Scalar(Rational(a.rat_ / b.rat_));
  return Scalar::make(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.general_ && !b.general_) return a.rat_ == b.rat_;
  return a.numerator() == b.numerator() && a.denominator() == b.denominator();
}

std::string to_string(const Scalar& s) {
  FormalExp den = s.denominator();
  if (den == FormalExp(1)) return to_string(s.numerator());
  return "(" + to_string(s.numerator()) + ")/(" + to_string(den) + ")";
}

}  // namespace polyinv
