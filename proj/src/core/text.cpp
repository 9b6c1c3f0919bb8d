#include "polyinv/text.hpp"

#include "polyinv/errors.hpp"

#include <cctype>

namespace polyinv {

namespace {

std::string monomial_text(const MultiIndex& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (a[i] > 1) out += "^" + std::to_string(a[i]);
  }
  return out;
}

std::string frequency_text(const Frequency& lambda) {
  std::string out = "exp(<";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += to_string(lambda[i]);
  }
  return out + ">.x)";
}

struct RawTerm {
  FormalExp coefficient = FormalExp(1);
  std::vector<unsigned> powers;  // indexed by variable, grows on demand
  std::optional<Frequency> frequency;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    if (at_end()) fail("empty expression", "a term");
    bool negative = read_signs();
    terms.push_back(term(negative));
    while (true) {
      skip();
      if (at_end()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("unexpected character '" + std::string(1, c) + "'", "'+', '-' or '*'");
      negative = read_signs();
      terms.push_back(term(negative));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    throw ParseError(what, pos_, expected);
  }
  bool accept(char c) {
    skip();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(at_end() ? "unexpected end of input" : "unexpected character '" + std::string(1, s_[pos_]) + "'",
                         "'" + std::string(1, c) + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  // Consumes a run of '+'/'-' signs; returns true for an odd number of '-'.
  bool read_signs() {
    bool negative = false;
    while (true) {
      skip();
      if (at_end()) break;
      if (s_[pos_] == '-') negative = !negative;
      else if (s_[pos_] != '+') break;
      ++pos_;
    }
    return negative;
  }

  unsigned integer() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("missing integer", "digits");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) {
      pos_ = start;
      fail("integer too large", "a small integer");
    }
    return static_cast<unsigned>(std::stoul(digits));
  }

  bool starts_number() {
    skip();
    return !at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.');
  }

  // Unsigned rational: digits[.digits][/digits[.digits]]
  Rational unsigned_rational() {
    skip();
    std::size_t start = pos_;
    auto run = [&] {
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    };
    run();
    if (start == pos_) fail("missing number", "a rational number");
    if (!at_end() && s_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      run();
      if (den_start == pos_) fail("missing denominator", "digits");
    }
    std::string_view tok = s_.substr(start, pos_ - start);
    try {
      if (tok.find('/') != std::string_view::npos && tok.find('.') != std::string_view::npos) {
        auto slash = tok.find('/');
        Rational den = parse_rational(tok.substr(slash + 1));
        if (is_zero(den)) throw Error(ErrorCode::Parse, "zero denominator");
        return Rational(parse_rational(tok.substr(0, slash)) / den);
      }
      return parse_rational(tok);
    } catch (const Error&) {
      pos_ = start;
      fail("malformed number '" + std::string(tok) + "'", "a rational number such as 3 or -1/2");
    }
  }

  Rational signed_rational() {
    bool negative = read_signs();
    Rational r = unsigned_rational();
    return negative ? Rational(-r) : r;
  }

  RawTerm term(bool negative) {
    RawTerm t;
    if (negative) t.coefficient = -t.coefficient;
    factor(t);
    while (accept('*')) factor(t);
    return t;
  }

  void factor(RawTerm& t) {
    skip();
    if (at_end()) fail("unexpected end of input", "a number, variable, E(...) or exp(...)");
    if (starts_number()) {
      t.coefficient = unsigned_rational() * t.coefficient;
      return;
    }
    if (accept_word("exp")) {
      expect('(');
      expect('<');
      Frequency lambda;
      lambda.push_back(signed_rational());
      while (accept(',')) lambda.push_back(signed_rational());
      expect('>');
      expect('.');
      expect('x');
      expect(')');
      if (t.frequency) {
        if (t.frequency->size() != lambda.size()) fail("frequency lengths differ within a term", "matching lengths");
        for (std::size_t i = 0; i < lambda.size(); ++i) (*t.frequency)[i] += lambda[i];
      } else {
        t.frequency = lambda;
      }
      return;
    }
    if (accept_word("E")) {
      expect('(');
      Rational e = signed_rational();
      expect(')');
      t.coefficient = t.coefficient * FormalExp::exp(e);
      return;
    }
    if (accept_word("x")) {
      std::size_t index = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t at = pos_;
        index = integer();
        if (index == 0) {
          pos_ = at;
          fail("variable index must start at 1", "x1, x2, ...");
        }
      }
      unsigned power = 1;
      if (accept('^')) power = integer();
      if (t.powers.size() < index) t.powers.resize(index, 0);
      t.powers[index - 1] += power;
      return;
    }
    fail("unexpected character '" + std::string(1, s_[pos_]) + "'", "a number, variable, E(...) or exp(...)");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const ExpPoly& f) {
  std::string out;
  for (const auto& [lambda, p] : f.terms()) {
    const bool has_exp = !is_zero_frequency(lambda);
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const std::string mono = monomial_text(it->first);
      for (const auto& t : it->second.terms()) {
        std::vector<std::string> factors;
        Rational magnitude = abs(t.coefficient);
        bool negative = sgn(t.coefficient) < 0;
        if (!is_zero(t.exponent)) factors.push_back("E(" + to_string(t.exponent) + ")");
        if (!mono.empty()) factors.push_back(mono);
        if (has_exp) factors.push_back(frequency_text(lambda));
        if (magnitude != 1 || factors.empty()) factors.insert(factors.begin(), to_string(magnitude));
        std::string body;
        for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
        if (out.empty()) out = negative ? "-" + body : body;
        else out += (negative ? " - " : " + ") + body;
      }
    }
  }
  return out.empty() ? "0" : out;
}

ExpPoly parse_exppoly(std::string_view text, std::optional<std::size_t> dim) {
  std::vector<RawTerm> raw = Parser(text).parse();
  std::size_t inferred = 0;
  std::optional<std::size_t> freq_len;
  for (const auto& t : raw) {
    inferred = std::max(inferred, t.powers.size());
    if (t.frequency) {
      if (freq_len && *freq_len != t.frequency->size())
        throw ParseError("frequency vectors of different lengths", 0, "a consistent dimension");
      freq_len = t.frequency->size();
    }
  }
  std::size_t d;
  if (dim) {
    d = *dim;
    if (d == 0) throw Error(ErrorCode::Dimension, "dimension must be positive");
    if (inferred > d)
      throw Error(ErrorCode::Dimension, "variable x" + std::to_string(inferred) + " exceeds dimension " + std::to_string(d));
    if (freq_len && *freq_len != d)
      throw Error(ErrorCode::Dimension, "frequency length " + std::to_string(*freq_len) + " differs from dimension " +
                                            std::to_string(d));
  } else if (freq_len) {
    if (inferred > *freq_len)
      throw Error(ErrorCode::Dimension, "variable x" + std::to_string(inferred) + " exceeds frequency length " +
                                            std::to_string(*freq_len));
    d = *freq_len;
  } else {
    d = std::max<std::size_t>(inferred, 1);
  }
  ExpPoly f(d);
  for (auto& t : raw) {
    MultiIndex a(d, 0);
    std::copy(t.powers.begin(), t.powers.end(), a.begin());
    f.add_term(t.frequency.value_or(Frequency(d, Rational(0))), a, t.coefficient);
  }
  return f;
}

}  // namespace polyinv
