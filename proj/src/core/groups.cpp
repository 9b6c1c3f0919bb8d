#include "polyinv/groups.hpp"

#include "polyinv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <regex>

namespace polyinv {

namespace {

constexpr std::size_t kMaxSignatureDim = 8;

void require_positive(std::size_t d, const char* what) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " dimension must be positive");
}

RationalMatrix embed_plane(std::size_t d, std::size_t i, std::size_t j, const RationalMatrix& block) {
  RationalMatrix m = RationalMatrix::identity(d);
  m(i, i) = block(0, 0);
  m(i, j) = block(0, 1);
  m(j, i) = block(1, 0);
  m(j, j) = block(1, 1);
  return m;
}

Rational tan_half_angle_parameter(SplitMix64& rng) {
  // t = tan(theta/2) for theta uniform in [-pi/2, pi/2], rounded to 1/4096.
  const double pi = std::acos(-1.0);
  double theta = (rng.uniform01() - 0.5) * pi;
  long t = std::lround(std::tan(theta / 2) * 4096.0);
  return make_rational(t, 4096);
}

Rational boost_parameter(SplitMix64& rng) {
  double s = (rng.uniform01() * 2.0 - 1.0) * 3.0;
  long u = std::max(1L, std::lround(std::exp(s) * 1024.0));
  return make_rational(u, 1024);
}

RationalMatrix random_signs(SplitMix64& rng, std::size_t d) {
  RationalMatrix m = RationalMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    if (rng.next() & 1u) m(i, i) = -1;
  return m;
}

RationalMatrix random_signed_permutation(SplitMix64& rng, std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = d; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(i) - 1))]);
  RationalMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, perm[i]) = (rng.next() & 1u) ? -1 : 1;
  return m;
}

RationalMatrix random_integer_invertible(SplitMix64& rng, std::size_t d, long bound) {
  RationalMatrix m(d, d);
  do {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  } while (is_zero(m.determinant()));
  return m;
}

RationalMatrix random_rotation(SplitMix64& rng, std::size_t d) {
  if (d == 1) return RationalMatrix::identity(1);
  RationalMatrix m = RationalMatrix::identity(d);
  if (d == 2) {
    m = rational_rotation(tan_half_angle_parameter(rng));
    if (rng.next() & 1u) m = Rational(-1) * m;
    return m;
  }
  std::size_t rounds = d * (d - 1) / 2 + 1;
  for (std::size_t r = 0; r < rounds; ++r) {
    std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(d) - 2));
    std::size_t j = static_cast<std::size_t>(rng.uniform_int(static_cast<long>(i) + 1, static_cast<long>(d) - 1));
    RationalMatrix rot = rational_rotation(tan_half_angle_parameter(rng));
    if (rng.next() & 1u) rot = Rational(-1) * rot;
    m = embed_plane(d, i, j, rot) * m;
  }
  return m;
}

RationalMatrix sample_one(const GroupSpec& spec, SplitMix64& rng) {
  const std::size_t d = spec.d;
  switch (spec.kind) {
    case GroupKind::SpecialOrthogonal:
      return random_rotation(rng, d);
    case GroupKind::Orthogonal: {
      RationalMatrix r = random_rotation(rng, d);
      return random_signs(rng, d) * r;
    }
    case GroupKind::GeneralOrthogonal: {
      const std::size_t p = spec.p, q = spec.q;
      RationalMatrix m = RationalMatrix::identity(d);
      if (p > 0 && q > 0) {
        std::size_t boosts = p * q;
        for (std::size_t k = 0; k < boosts; ++k) {
          std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(p) - 1));
          std::size_t j = p + static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(q) - 1));
          m = embed_plane(d, i, j, hyperbolic_boost(boost_parameter(rng))) * m;
        }
      }
      if (p > 1) m = embed_block(random_rotation(rng, p), BlockPlacement::UpperLeft, q) * m;
      if (q > 1) m = embed_block(random_rotation(rng, q), BlockPlacement::LowerRight, p) * m;
      return random_signs(rng, d) * m;
    }
    case GroupKind::Symplectic: {
      const std::size_t n = d / 2;
      RationalMatrix m = RationalMatrix::identity(d);
      for (int k = 0; k < 3; ++k) {
        RationalMatrix g;
        switch (rng.uniform_int(0, 3)) {
          case 0:
            g = embed_block(random_integer_invertible(rng, n, 2), BlockPlacement::SymplecticPair);
            break;
          case 1:
            g = symplectic_form(n);
            break;
          default: {
            bool upper = rng.next() & 1u;
            g = RationalMatrix::identity(d);
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = i; j < n; ++j) {
                Rational s(rng.uniform_int(-2, 2));
                std::size_t r = upper ? i : n + i, c = upper ? n + j : j;
                std::size_t r2 = upper ? j : n + j, c2 = upper ? n + i : i;
                g(r, c) = s;
                g(r2, c2) = s;
              }
          }
        }
        m = g * m;
      }
      return m;
    }
    case GroupKind::GeneralLinear:
      return random_integer_invertible(rng, d, 3);
    case GroupKind::Dilations: {
      long k = spec.ks[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(spec.ks.size()) - 1))];
      return Rational(k) * RationalMatrix::identity(d);
    }
    case GroupKind::SignedPermutations:
      return random_signed_permutation(rng, d);
    case GroupKind::Diagonal: {
      RationalMatrix m(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        long num = rng.uniform_int(1, 4) * ((rng.next() & 1u) ? -1 : 1);
        m(i, i) = make_rational(num, rng.uniform_int(1, 3));
      }
      return m;
    }
    case GroupKind::Finite:
      return spec.elements[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(spec.elements.size()) - 1))];
  }
  throw Error(ErrorCode::Internal, "unknown group kind");
}

double max_abs(const RationalMatrix& m) {
  double r = 0;
  for (const auto& x : m.data()) r = std::max(r, std::abs(x.get_d()));
  return r;
}

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Orthogonal: return "Orth";
    case GroupKind::SpecialOrthogonal: return "SpecialOrth";
    case GroupKind::GeneralOrthogonal: return "GeneralOrth";
    case GroupKind::Symplectic: return "Symplectic";
    case GroupKind::GeneralLinear: return "GeneralLinear";
    case GroupKind::Dilations: return "Dilations";
    case GroupKind::SignedPermutations: return "SignedPermutations";
    case GroupKind::Diagonal: return "Diagonal";
    case GroupKind::Finite: return "Finite";
  }
  return "?";
}

}  // namespace

// --- constructors ----------------------------------------------------------

GroupSpec GroupSpec::orthogonal(std::size_t d) {
  require_positive(d, "O(d)");
  GroupSpec s;
  s.kind = GroupKind::Orthogonal;
  s.d = d;
  return s;
}

GroupSpec GroupSpec::special_orthogonal(std::size_t d) {
  require_positive(d, "SO(d)");
  GroupSpec s;
  s.kind = GroupKind::SpecialOrthogonal;
  s.d = d;
  return s;
}

GroupSpec GroupSpec::general_orthogonal(std::size_t p, std::size_t q) {
  if (p + q == 0) throw Error(ErrorCode::InvalidArgument, "O(p,q) needs p + q > 0");
  if (p + q > kMaxSignatureDim)
    throw Error(ErrorCode::InvalidArgument, "O(p,q) with p + q > " + std::to_string(kMaxSignatureDim) + " is not supported");
  GroupSpec s;
  s.kind = GroupKind::GeneralOrthogonal;
  s.p = p;
  s.q = q;
  s.d = p + q;
  return s;
}

GroupSpec GroupSpec::symplectic(std::size_t n) {
  require_positive(n, "Sp(2n)");
  GroupSpec s;
  s.kind = GroupKind::Symplectic;
  s.d = 2 * n;
  return s;
}

GroupSpec GroupSpec::general_linear(std::size_t d) {
  require_positive(d, "GL(d)");
  GroupSpec s;
  s.kind = GroupKind::GeneralLinear;
  s.d = d;
  return s;
}

GroupSpec GroupSpec::dilations(std::size_t d, std::vector<long> ks) {
  require_positive(d, "dilation");
  if (ks.empty()) throw Error(ErrorCode::InvalidArgument, "dilation factor list is empty");
  for (long k : ks)
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "dilation factor 0 is not invertible");
  GroupSpec s;
  s.kind = GroupKind::Dilations;
  s.d = d;
  s.ks = std::move(ks);
  return s;
}

GroupSpec GroupSpec::signed_permutations(std::size_t d) {
  require_positive(d, "signed permutation");
  if (d > 6) throw Error(ErrorCode::InvalidArgument, "signed permutation groups are tabulated only for d <= 6");
  GroupSpec s;
  s.kind = GroupKind::SignedPermutations;
  s.d = d;
  return s;
}

GroupSpec GroupSpec::diagonal(std::size_t d) {
  require_positive(d, "diagonal group");
  GroupSpec s;
  s.kind = GroupKind::Diagonal;
  s.d = d;
  return s;
}

GroupSpec GroupSpec::finite(std::vector<RationalMatrix> elements) {
  FiniteGroupTable table = finite_group(elements);
  GroupSpec s;
  s.kind = GroupKind::Finite;
  s.d = table.elements.front().rows();
  s.elements = std::move(table.elements);
  return s;
}

std::string describe(const GroupSpec& spec) {
  const std::string d = std::to_string(spec.d);
  switch (spec.kind) {
    case GroupKind::Orthogonal: return "O(" + d + ")";
    case GroupKind::SpecialOrthogonal: return "SO(" + d + ")";
    case GroupKind::GeneralOrthogonal: return "O(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")";
    case GroupKind::Symplectic: return "Sp(" + d + ")";
    case GroupKind::GeneralLinear: return "GL(" + d + ")";
    case GroupKind::Dilations: return "Dil(" + d + ")";
    case GroupKind::SignedPermutations: return "Hyp(" + d + ")";
    case GroupKind::Diagonal: return "Diag(" + d + ")";
    case GroupKind::Finite: return "Finite(" + d + ", " + std::to_string(spec.elements.size()) + " elements)";
  }
  return "?";
}

// --- parsing ---------------------------------------------------------------

namespace {

GroupSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string())
    throw Error(ErrorCode::Parse, "group spec JSON needs a string \"variant\"");
  const std::string v = j["variant"].get<std::string>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  auto get = [&](const char* key) -> std::size_t {
    if (!params.contains(key) || !params[key].is_number_unsigned())
      throw Error(ErrorCode::Parse, "group spec " + v + " needs a nonnegative integer param \"" + key + "\"");
    return params[key].get<std::size_t>();
  };
  if (v == "Orth") return GroupSpec::orthogonal(get("d"));
  if (v == "SpecialOrth") return GroupSpec::special_orthogonal(get("d"));
  if (v == "GeneralOrth") return GroupSpec::general_orthogonal(get("p"), get("q"));
  if (v == "Symplectic") return GroupSpec::symplectic(get("d"));
  if (v == "GeneralLinear") return GroupSpec::general_linear(get("d"));
  if (v == "SignedPermutations") return GroupSpec::signed_permutations(get("d"));
  if (v == "Diagonal") return GroupSpec::diagonal(get("d"));
  if (v == "Dilations") {
    if (params.contains("ks")) return GroupSpec::dilations(get("d"), params["ks"].get<std::vector<long>>());
    return GroupSpec::dilations(get("d"));
  }
  if (v == "Finite") {
    std::size_t d = get("d");
    if (!params.contains("elements") || !params["elements"].is_array())
      throw Error(ErrorCode::Parse, "Finite group spec needs \"elements\": list of row-major entry lists");
    std::vector<RationalMatrix> elements;
    for (const auto& e : params["elements"]) {
      if (!e.is_array() || e.size() != d * d)
        throw Error(ErrorCode::Parse, "each Finite element must list d*d = " + std::to_string(d * d) + " entries");
      std::vector<Rational> data;
      for (const auto& x : e) data.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
      elements.emplace_back(d, d, std::move(data));
    }
    if (elements.empty()) throw Error(ErrorCode::Parse, "Finite group spec has no elements");
    return GroupSpec::finite(std::move(elements));
  }
  throw Error(ErrorCode::Parse, "unknown group variant '" + v + "'");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid group spec JSON: ") + e.what(), e.byte, "a JSON object");
    }
    return spec_from_json(j);
  }
  static const std::regex pattern(R"(^([A-Za-z]+)\(?(\d+)(?:,(\d+))?\)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, pattern))
    throw ParseError("unrecognized group spec '" + text + "'", 0,
                     "SO(d), O(d), O(p,q), Sp(2n), GL(d), Dil(d), Diag(d), Hyp(d) or a JSON object");
  std::string name = m[1].str();
  std::size_t a = std::stoul(m[2].str());
  bool two = m[3].matched;
  std::size_t b = two ? std::stoul(m[3].str()) : 0;
  if (name == "O" && two) return GroupSpec::general_orthogonal(a, b);
  if (two) throw ParseError("group '" + name + "' takes one parameter", 0, name + "(d)");
  if (name == "SO") return GroupSpec::special_orthogonal(a);
  if (name == "O") return GroupSpec::orthogonal(a);
  if (name == "Sp") {
    if (a % 2 != 0 || a == 0) throw ParseError("symplectic dimension must be even", 0, "Sp(2n)");
    return GroupSpec::symplectic(a / 2);
  }
  if (name == "GL") return GroupSpec::general_linear(a);
  if (name == "Dil") return GroupSpec::dilations(a);
  if (name == "Diag") return GroupSpec::diagonal(a);
  if (name == "Hyp" || name == "SignedPerm") return GroupSpec::signed_permutations(a);
  throw ParseError("unknown group '" + name + "'", 0, "SO, O, Sp, GL, Dil, Diag or Hyp");
}

std::string group_spec_to_json(const GroupSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  switch (spec.kind) {
    case GroupKind::GeneralOrthogonal:
      params["p"] = spec.p;
      params["q"] = spec.q;
      break;
    case GroupKind::Symplectic:
      params["d"] = spec.d / 2;
      break;
    case GroupKind::Dilations:
      params["d"] = spec.d;
      params["ks"] = spec.ks;
      break;
    case GroupKind::Finite: {
      params["d"] = spec.d;
      nlohmann::json elements = nlohmann::json::array();
      for (const auto& e : spec.elements) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : e.data()) row.push_back(to_string(x));
        elements.push_back(row);
      }
      params["elements"] = elements;
      break;
    }
    default:
      params["d"] = spec.d;
  }
  nlohmann::json j;
  j["variant"] = kind_name(spec.kind);
  j["params"] = params;
  return j.dump();
}

// --- special matrices ------------------------------------------------------

RationalMatrix signature_matrix(std::size_t p, std::size_t q) {
  RationalMatrix m = RationalMatrix::identity(p + q);
  for (std::size_t i = p; i < p + q; ++i) m(i, i) = -1;
  return m;
}

RationalMatrix symplectic_form(std::size_t n) {
  RationalMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = -1;
  }
  return m;
}

RationalMatrix hyperbolic_boost(const Rational& u) {
  if (sgn(u) == 0) throw Error(ErrorCode::InvalidArgument, "boost parameter must be nonzero");
  Rational a = (u * u + 1) / (2 * u);
  Rational c = (u * u - 1) / (2 * u);
  return RationalMatrix{{a, c}, {c, a}};
}

RationalMatrix rational_rotation(const Rational& t) {
  Rational den = 1 + t * t;
  Rational c = (1 - t * t) / den;
  Rational s = 2 * t / den;
  return RationalMatrix{{c, Rational(-s)}, {s, c}};
}

// --- membership --------------------------------------------------------------

MembershipResult membership_check(const RationalMatrix& m, const GroupSpec& spec) {
  if (m.rows() != spec.d || m.cols() != spec.d)
    throw Error(ErrorCode::Dimension, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                          " but " + describe(spec) + " acts on dimension " + std::to_string(spec.d));
  MembershipResult r;
  const std::size_t d = spec.d;
  auto defect = [&](const RationalMatrix& form) {
    RationalMatrix e = m.transpose() * form * m - form;
    r.residual = max_abs(e);
    r.member = e.is_zero();
  };
  switch (spec.kind) {
    case GroupKind::Orthogonal:
      defect(RationalMatrix::identity(d));
      r.detail = "A^T A = I";
      break;
    case GroupKind::SpecialOrthogonal: {
      defect(RationalMatrix::identity(d));
      Rational det = m.determinant();
      if (det != 1) {
        r.member = false;
        r.residual = std::max(r.residual, std::abs(Rational(det - 1).get_d()));
      }
      r.detail = "A^T A = I, det A = 1";
      break;
    }
    case GroupKind::GeneralOrthogonal:
      defect(signature_matrix(spec.p, spec.q));
      r.detail = "A^T I_pq A = I_pq";
      break;
    case GroupKind::Symplectic:
      defect(symplectic_form(d / 2));
      r.detail = "M^T Omega M = Omega";
      break;
    case GroupKind::GeneralLinear:
      r.member = !is_zero(m.determinant());
      r.residual = r.member ? 0.0 : 1.0;
      r.detail = "det A != 0";
      break;
    case GroupKind::Dilations: {
      RationalMatrix e = m - m(0, 0) * RationalMatrix::identity(d);
      r.residual = max_abs(e);
      r.member = e.is_zero() && !is_zero(m(0, 0));
      r.detail = "A = c I, c != 0";
      break;
    }
    case GroupKind::Diagonal: {
      r.member = true;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (i != j && !is_zero(m(i, j))) {
            r.member = false;
            r.residual = std::max(r.residual, std::abs(m(i, j).get_d()));
          }
          if (i == j && is_zero(m(i, j))) r.member = false;
        }
      r.detail = "diagonal with nonzero entries";
      break;
    }
    case GroupKind::SignedPermutations: {
      r.member = true;
      std::vector<int> col_count(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        int row_count = 0;
        for (std::size_t j = 0; j < d; ++j) {
          const Rational& x = m(i, j);
          if (is_zero(x)) continue;
          if (abs(x) != 1) r.member = false;
          ++row_count;
          ++col_count[j];
        }
        if (row_count != 1) r.member = false;
      }
      for (int c : col_count)
        if (c != 1) r.member = false;
      r.residual = r.member ? 0.0 : 1.0;
      r.detail = "signed permutation matrix";
      break;
    }
    case GroupKind::Finite:
      r.member = std::find(spec.elements.begin(), spec.elements.end(), m) != spec.elements.end();
      r.residual = r.member ? 0.0 : 1.0;
      r.detail = "listed element";
      break;
  }
  return r;
}

MembershipResult membership_check_float(const std::vector<double>& a, std::size_t n, const GroupSpec& spec,
                                        double tol) {
  if (n != spec.d || a.size() != n * n) throw Error(ErrorCode::Dimension, "matrix dimension does not match group");
  if (tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  auto at = [&](std::size_t i, std::size_t j) { return a[i * n + j]; };
  auto form_defect = [&](const RationalMatrix& form) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) s += at(k, i) * form(k, l).get_d() * at(l, j);
        worst = std::max(worst, std::abs(s - form(i, j).get_d()));
      }
    return worst;
  };
  auto det = [&] {
    std::vector<double> m = a;
    double det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      for (std::size_t i = c + 1; i < n; ++i)
        if (std::abs(m[i * n + c]) > std::abs(m[p * n + c])) p = i;
      if (m[p * n + c] == 0) return 0.0;
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
        det = -det;
      }
      det *= m[c * n + c];
      for (std::size_t i = c + 1; i < n; ++i) {
        double f = m[i * n + c] / m[c * n + c];
        for (std::size_t j = c; j < n; ++j) m[i * n + j] -= f * m[c * n + j];
      }
    }
    return det;
  };
  MembershipResult r;
  switch (spec.kind) {
    case GroupKind::Orthogonal:
      r.residual = form_defect(RationalMatrix::identity(n));
      break;
    case GroupKind::SpecialOrthogonal:
      r.residual = std::max(form_defect(RationalMatrix::identity(n)), std::abs(det() - 1));
      break;
    case GroupKind::GeneralOrthogonal:
      r.residual = form_defect(signature_matrix(spec.p, spec.q));
      break;
    case GroupKind::Symplectic:
      r.residual = form_defect(symplectic_form(n / 2));
      break;
    case GroupKind::GeneralLinear:
      r.member = std::abs(det()) > tol;
      r.detail = "|det A| > tol";
      return r;
    case GroupKind::Dilations:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          r.residual = std::max(r.residual, std::abs(at(i, j) - (i == j ? at(0, 0) : 0.0)));
      r.member = r.residual <= tol && std::abs(at(0, 0)) > tol;
      return r;
    case GroupKind::Diagonal: {
      bool diag_ok = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) r.residual = std::max(r.residual, std::abs(at(i, j)));
          else if (std::abs(at(i, i)) <= tol) diag_ok = false;
        }
      r.member = diag_ok && r.residual <= tol;
      return r;
    }
    case GroupKind::SignedPermutations:
    case GroupKind::Finite: {
      std::vector<RationalMatrix> list = spec.kind == GroupKind::Finite ? spec.elements : hyperoctahedral(n);
      r.residual = INFINITY;
      for (const auto& e : list) {
        double worst = 0;
        for (std::size_t k = 0; k < n * n; ++k) worst = std::max(worst, std::abs(a[k] - e.data()[k].get_d()));
        r.residual = std::min(r.residual, worst);
      }
      break;
    }
  }
  r.member = r.residual <= tol;
  return r;
}

// --- sampling ----------------------------------------------------------------

std::vector<RationalMatrix> sample(const GroupSpec& spec, std::uint64_t seed, std::size_t count) {
  if (spec.kind == GroupKind::Finite && spec.elements.empty())
    throw Error(ErrorCode::InvalidArgument, "cannot sample an empty finite group");
  SplitMix64 root(seed);
  std::vector<RationalMatrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 child = root.split();
    out.push_back(sample_one(spec, child));
  }
  return out;
}

// --- finite groups -------------------------------------------------------------

std::optional<std::size_t> FiniteGroupTable::index_of(const RationalMatrix& m) const {
  auto it = std::find(elements.begin(), elements.end(), m);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

FiniteGroupTable finite_group(const std::vector<RationalMatrix>& input) {
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "finite group needs at least one element");
  const std::size_t d = input.front().rows();
  std::map<std::vector<Rational>, std::size_t> index;
  FiniteGroupTable t;
  const RationalMatrix id = RationalMatrix::identity(d);
  t.elements.push_back(id);
  bool has_identity = false;
  for (const auto& m : input) {
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::Dimension, "finite group elements differ in shape");
    if (m == id) {
      if (has_identity) throw Error(ErrorCode::InvalidArgument, "identity listed twice");
      has_identity = true;
      continue;
    }
    t.elements.push_back(m);
  }
  if (!has_identity) throw Error(ErrorCode::InvalidArgument, "finite group element list must include the identity");
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    if (!index.emplace(t.elements[i].data(), i).second)
      throw Error(ErrorCode::InvalidArgument, "element " + to_string(t.elements[i]) + " listed twice");

  const std::size_t s = t.elements.size();
  t.eta.assign(s, std::vector<std::size_t>(s, 0));
  t.inverse.assign(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      RationalMatrix prod = t.elements[i] * t.elements[j];
      auto it = index.find(prod.data());
      if (it == index.end())
        throw Error(ErrorCode::NotClosed, "product " + to_string(t.elements[i]) + " * " + to_string(t.elements[j]) +
                                              " = " + to_string(prod) + " is not in the set");
      t.eta[i][j] = it->second;
      if (it->second == 0) t.inverse[i] = j;
    }
  for (std::size_t i = 0; i < s; ++i)
    if (t.inverse[i] == s)
      throw Error(ErrorCode::NotClosed, "inverse of " + to_string(t.elements[i]) + " is not in the set");
  return t;
}

FiniteGroupTable finite_group(const GroupSpec& spec) {
  if (spec.kind == GroupKind::Finite) return finite_group(spec.elements);
  if (spec.kind == GroupKind::SignedPermutations) return finite_group(hyperoctahedral(spec.d));
  throw Error(ErrorCode::InvalidArgument, describe(spec) + " is not a finite group");
}

std::vector<RationalMatrix> hyperoctahedral(std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RationalMatrix> out;
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << d); ++signs) {
      RationalMatrix m(d, d);
      for (std::size_t i = 0; i < d; ++i) m(i, perm[i]) = (signs >> i) & 1u ? -1 : 1;
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

RationalMatrix embed_block(const RationalMatrix& a, BlockPlacement placement, std::size_t extra) {
  if (!a.is_square()) throw Error(ErrorCode::Dimension, "block must be square");
  const std::size_t k = a.rows();
  if (placement == BlockPlacement::SymplecticPair) {
    RationalMatrix inv_t = a.inverse().transpose();
    RationalMatrix m(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        m(i, j) = a(i, j);
        m(k + i, k + j) = inv_t(i, j);
      }
    return m;
  }
  RationalMatrix m = RationalMatrix::identity(k + extra);
  std::size_t off = placement == BlockPlacement::UpperLeft ? 0 : extra;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(off + i, off + j) = a(i, j);
  return m;
}

}  // namespace polyinv
