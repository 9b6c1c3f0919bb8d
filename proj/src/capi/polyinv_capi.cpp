#include "polyinv/polyinv.h"

#include "polyinv/closure.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/pipelines.hpp"
#include "polyinv/reports.hpp"
#include "polyinv/text.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace polyinv;

struct pinv_config {
  std::uint64_t seed = 0;
  pinv_backend backend = PINV_BACKEND_EXACT;
  double tol = 1e-9;
  std::size_t samples = 2000;
  std::size_t cap = 64;
  double eps = 0;
};

struct pinv_exppoly {
  ExpPoly f;
};

struct pinv_space {
  FunctionSpace v;
};

struct pinv_group {
  GroupSpec spec;
};

static_assert(static_cast<int>(ErrorCode::Internal) + 1 == PINV_ERR_INTERNAL);

namespace {

thread_local std::string last_error;
thread_local bool has_error = false;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
pinv_status guard(F&& body) {
  has_error = false;
  try {
    body();
    return PINV_OK;
  } catch (const Error& e) {
    last_error = error_json(e).dump();
    has_error = true;
    return static_cast<pinv_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::exception& e) {
    last_error = error_json(e).dump();
    has_error = true;
    return PINV_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

const pinv_config& config_or_default(const pinv_config* cfg) {
  static const pinv_config defaults;
  return cfg ? *cfg : defaults;
}

Json header(const std::string& command, const std::string& theorem, const pinv_config& c) {
  Json j = report_header(command, theorem);
  j["seed"] = c.seed;
  j["backend"] = c.backend == PINV_BACKEND_FLOAT ? "float" : "exact";
  return j;
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

void emit(const Json& j, char** report, int* concluded, bool ok) {
  *report = dup(j.dump(2) + "\n");
  if (concluded) *concluded = ok ? 1 : 0;
}

std::vector<std::string> split_list(const char* text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ';' || *p == '\n') {
      if (cur.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cur);
      cur.clear();
    } else {
      cur += *p;
    }
  }
  if (cur.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cur);
  return out;
}

std::vector<RationalVector> parse_steps(const char* text, std::size_t dim) {
  need(text, "steps");
  std::vector<RationalVector> steps;
  for (const auto& item : split_list(text)) {
    steps.push_back(parse_rational_vector(item));
    if (steps.back().size() != dim)
      throw Error(ErrorCode::Dimension, "step " + item + " has " + std::to_string(steps.back().size()) +
                                            " coordinates, expected " + std::to_string(dim));
  }
  if (steps.empty()) throw Error(ErrorCode::InvalidArgument, "no steps given");
  return steps;
}

RationalVector parse_point(const char* text, std::size_t dim, const char* what) {
  need(text, what);
  RationalVector z = parse_rational_vector(text);
  if (z.size() != dim)
    throw Error(ErrorCode::Dimension, std::string(what) + " has " + std::to_string(z.size()) +
                                          " coordinates, the group acts on dimension " + std::to_string(dim));
  return z;
}

std::vector<long> parse_longs(const char* text, const char* what) {
  need(text, what);
  std::vector<long> out;
  for (const auto& x : parse_rational_vector(text)) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be machine integers");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

InteriorConfig interior_config(const pinv_config& c) {
  InteriorConfig ic;
  ic.tol = c.tol;
  if (c.eps > 0) ic.eps_absolute = c.eps;
  ic.exact_rank = c.backend == PINV_BACKEND_EXACT;
  return ic;
}

std::vector<double> to_doubles(const RationalMatrix& m) {
  std::vector<double> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_d());
  return out;
}

PowerElement parse_element(const std::string& item) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = item.find(':', start);
    parts.push_back(parse_rational(item.substr(start, colon == std::string::npos ? std::string::npos : colon - start)));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() > 3) throw ParseError("too many fields in element " + item, item.size(), "c[:e[:theta]]");
  parts.resize(3, Rational(0));
  return PowerElement::make(parts[0], parts[1], parts[2]);
}

}  // namespace

extern "C" {

const char* pinv_version(void) { return "0.1.0"; }

const char* pinv_status_name(pinv_status status) {
  if (status == PINV_OK) return "ok";
  if (status < PINV_OK || status > PINV_ERR_INTERNAL) return "unknown";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* pinv_last_error(void) { return has_error ? last_error.c_str() : nullptr; }

void pinv_string_free(char* s) { std::free(s); }

pinv_config* pinv_config_new(void) { return new (std::nothrow) pinv_config(); }
void pinv_config_free(pinv_config* cfg) { delete cfg; }

pinv_status pinv_config_set_seed(pinv_config* cfg, uint64_t seed) {
  return guard([&] {
    need(cfg, "config");
    cfg->seed = seed;
  });
}

pinv_status pinv_config_set_backend(pinv_config* cfg, pinv_backend backend) {
  return guard([&] {
    need(cfg, "config");
    if (backend != PINV_BACKEND_EXACT && backend != PINV_BACKEND_FLOAT)
      throw Error(ErrorCode::InvalidArgument, "unknown backend");
    cfg->backend = backend;
  });
}

pinv_status pinv_config_set_tol(pinv_config* cfg, double tol) {
  return guard([&] {
    need(cfg, "config");
    if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
    cfg->tol = tol;
  });
}

pinv_status pinv_config_set_samples(pinv_config* cfg, size_t samples) {
  return guard([&] {
    need(cfg, "config");
    if (samples < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
    cfg->samples = samples;
  });
}

pinv_status pinv_config_set_cap(pinv_config* cfg, size_t cap) {
  return guard([&] {
    need(cfg, "config");
    if (cap < 1) throw Error(ErrorCode::InvalidArgument, "closure cap must be at least 1");
    cfg->cap = cap;
  });
}

pinv_status pinv_config_set_eps(pinv_config* cfg, double eps) {
  return guard([&] {
    need(cfg, "config");
    cfg->eps = eps > 0 ? eps : 0;
  });
}

// --- handles -------------------------------------------------------------------

pinv_status pinv_exppoly_parse(const char* text, size_t dim, pinv_exppoly** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    ExpPoly f = parse_exppoly(text, dim ? std::optional<std::size_t>(dim) : std::nullopt);
    *out = new pinv_exppoly{std::move(f)};
  });
}

pinv_status pinv_exppoly_print(const pinv_exppoly* f, char** out) {
  return guard([&] {
    need(f, "exppoly");
    need(out, "out");
    *out = dup(to_string(f->f));
  });
}

size_t pinv_exppoly_dim(const pinv_exppoly* f) { return f ? f->f.dim() : 0; }

int pinv_exppoly_equal(const pinv_exppoly* a, const pinv_exppoly* b) { return a && b && a->f == b->f; }

void pinv_exppoly_free(pinv_exppoly* f) { delete f; }

pinv_status pinv_space_from_json(const char* json, pinv_space** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    *out = new pinv_space{space_from_json(json)};
  });
}

pinv_status pinv_space_span(const pinv_exppoly* const* generators, size_t count, pinv_space** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    if (count == 0) throw Error(ErrorCode::InvalidArgument, "span of no generators");
    need(generators, "generators");
    std::vector<ExpPoly> gens;
    for (size_t i = 0; i < count; ++i) {
      need(generators[i], "generator");
      gens.push_back(generators[i]->f);
    }
    *out = new pinv_space{FunctionSpace::span(gens)};
  });
}

pinv_status pinv_space_to_json(const pinv_space* v, char** out) {
  return guard([&] {
    need(v, "space");
    need(out, "out");
    *out = dup(space_to_json(v->v));
  });
}

size_t pinv_space_dim(const pinv_space* v) { return v ? v->v.dimension() : 0; }

void pinv_space_free(pinv_space* v) { delete v; }

pinv_status pinv_group_parse(const char* spec, pinv_group** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = nullptr;
    *out = new pinv_group{parse_group_spec(spec)};
  });
}

pinv_status pinv_group_describe(const pinv_group* g, char** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = dup(describe(g->spec));
  });
}

size_t pinv_group_dim(const pinv_group* g) { return g ? g->spec.d : 0; }

void pinv_group_free(pinv_group* g) { delete g; }

// --- reports -------------------------------------------------------------------

pinv_status pinv_classify(const pinv_exppoly* f, const pinv_config* cfg, char** report, int* concluded) {
  return guard([&] {
    need(f, "exppoly");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    Json j = header("classify", "functional-degree-of-polynomials", c);
    j["input"] = to_string(f->f);
    merge(j, to_json(classify(f->f)));
    emit(j, report, concluded, true);
  });
}

pinv_status pinv_diff(const pinv_exppoly* f, const char* steps, const pinv_config* cfg, char** report,
                      int* concluded) {
  return guard([&] {
    need(f, "exppoly");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    auto hs = parse_steps(steps, f->f.dim());
    ExpPoly r = mixed_difference(f->f, hs);
    Json j = header("diff", "frechet-mixed-differences", c);
    j["input"] = to_string(f->f);
    j["order"] = hs.size();
    j["steps"] = Json::array();
    for (const auto& h : hs) j["steps"].push_back(to_json(h));
    j["result"] = to_string(r);
    j["vanishes"] = r.is_zero();
    j["result_classification"] = to_json(classify(r));
    emit(j, report, concluded, true);
  });
}

pinv_status pinv_closure(const pinv_exppoly* f, const pinv_group* group, const pinv_config* cfg, char** report,
                         int* concluded) {
  return guard([&] {
    need(f, "exppoly");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    Json j = header("closure", group ? "invariant-closure-finite-dimensional" : "translation-closure", c);
    j["input"] = to_string(f->f);
    bool ok = true;
    if (!group) {
      FunctionSpace v = translation_closure(f->f);
      j["group"] = nullptr;
      j["dimension"] = v.dimension();
      j["space"] = to_json(v);
      j["status"] = "translation invariant";
    } else {
      if (group->spec.d != f->f.dim())
        throw Error(ErrorCode::Dimension, "group acts on dimension " + std::to_string(group->spec.d) +
                                              " but the function has " + std::to_string(f->f.dim()) + " variables");
      ClosureResult r = r_g_closure(f->f, GroupSource{group->spec, c.seed}, c.cap);
      j["group"] = describe(group->spec);
      j["cap"] = c.cap;
      merge(j, to_json(r));
      ok = !r.cap_exceeded;
    }
    emit(j, report, concluded, ok);
  });
}

pinv_status pinv_orbit(const pinv_group* group, const char* z0, int lambda, int csv, const pinv_config* cfg,
                       char** report) {
  return guard([&] {
    need(group, "group");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    RationalVector z = parse_point(z0, group->spec.d, "z0");
    if (lambda) {
      LambdaSample s = lambda_sample(group->spec, z, c.samples, c.seed);
      if (csv) {
        *report = dup(points_csv(s));
        return;
      }
      Json j = header("orbit", "orbit-difference-set", c);
      j["set"] = "lambda";
      merge(j, Json::parse(points_json(s)));
      emit(j, report, nullptr, true);
    } else {
      OrbitSample s = orbit_sample(group->spec, z, c.samples, c.seed);
      if (csv) {
        *report = dup(points_csv(s));
        return;
      }
      Json j = header("orbit", "orbit-difference-set", c);
      j["set"] = "orbit";
      merge(j, Json::parse(points_json(s)));
      emit(j, report, nullptr, true);
    }
  });
}

pinv_status pinv_interior(const pinv_group* group, const char* z0, const pinv_config* cfg, char** report,
                          int* concluded) {
  return guard([&] {
    need(group, "group");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    RationalVector z = parse_point(z0, group->spec.d, "z0");
    LambdaSample s = lambda_sample(group->spec, z, c.samples, c.seed);
    InteriorEvidence e = interior_evidence(s, interior_config(c));
    Json j = header("interior", "orbit-difference-interior", c);
    j["group"] = describe(group->spec);
    j["z0"] = to_json(z);
    merge(j, to_json(e));
    emit(j, report, concluded, e.verdict != InteriorVerdict::Inconclusive);
  });
}

pinv_status pinv_structure(const pinv_group* group, const char* z0, const char* z1, const pinv_config* cfg,
                           char** report, int* concluded) {
  return guard([&] {
    need(group, "group");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    RationalVector a = parse_point(z0, group->spec.d, "z0");
    std::optional<RationalVector> b;
    if (z1) b = parse_point(z1, group->spec.d, "z1");
    std::size_t n = std::min<std::size_t>(c.samples, 64);
    StructuralReport r = structural_checks(group->spec, a, b, c.seed, n);
    Json j = header("structure", "orbit-difference-identities", c);
    j["group"] = describe(group->spec);
    j["z0"] = to_json(a);
    j["z1"] = b ? to_json(*b) : Json(nullptr);
    j["elements"] = n;
    merge(j, to_json(r));
    emit(j, report, concluded, r.all_passed());
  });
}

pinv_status pinv_annihilate(const pinv_space* v, const pinv_group* group, const char* z0, const pinv_config* cfg,
                            char** report, int* concluded) {
  return guard([&] {
    need(v, "space");
    need(group, "group");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    if (group->spec.d != v->v.ambient_dim())
      throw Error(ErrorCode::Dimension, "group acts on dimension " + std::to_string(group->spec.d) +
                                            " but the space lives in dimension " + std::to_string(v->v.ambient_dim()));
    RationalVector z = parse_point(z0, group->spec.d, "z0");
    AnnihilatorConfig ac;
    ac.interior_samples = c.samples;
    ac.interior = interior_config(c);
    AnnihilatorReport r = annihilator_from_space(v->v, group->spec, z, c.seed, ac);
    Json j = header("annihilate", "annihilator-forces-polynomials", c);
    j["group"] = describe(group->spec);
    j["z0"] = to_json(z);
    merge(j, to_json(r));
    emit(j, report, concluded, r.concluded);
  });
}

pinv_status pinv_dilate(const pinv_space* v, const char* ks, const char* h, const pinv_config* cfg, char** report,
                        int* concluded) {
  return guard([&] {
    need(v, "space");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    std::vector<long> k = parse_longs(ks, "ks");
    RationalVector step(v->v.ambient_dim(), Rational(0));
    if (h) step = parse_point(h, v->v.ambient_dim(), "h");
    else step[0] = 1;
    DilationReport r = dilation_pipeline(v->v, k, step);
    Json j = header("dilate", "dilation-invariance-forces-polynomials", c);
    j["h"] = to_json(step);
    merge(j, to_json(r));
    emit(j, report, concluded, r.concluded);
  });
}

pinv_status pinv_montel(const pinv_exppoly* f, const char* steps, unsigned order, const pinv_config* cfg,
                        char** report, int* concluded) {
  return guard([&] {
    need(f, "exppoly");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    if (order == 0) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
    auto hs = parse_steps(steps, f->f.dim());
    MontelReport r = montel_check(f->f, hs, order);
    Json j = header("montel", "montel-difference-criterion", c);
    j["input"] = to_string(f->f);
    j["order"] = order;
    j["steps"] = Json::array();
    for (const auto& s : hs) j["steps"].push_back(to_json(s));
    merge(j, to_json(r));
    emit(j, report, concluded, r.conclusion);
  });
}

pinv_status pinv_bounds(size_t dim, size_t d, const pinv_config* cfg, char** report, int* concluded) {
  return guard([&] {
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    Json j = header("bounds", "degree-bounds-from-dimension", c);
    merge(j, to_json(degree_bounds(dim, d)));
    emit(j, report, concluded, true);
  });
}

pinv_status pinv_group_check(const pinv_group* group, const char* matrix_csv, const pinv_config* cfg,
                             char** report, int* concluded) {
  return guard([&] {
    need(group, "group");
    need(matrix_csv, "matrix");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    RationalMatrix m = parse_rational_matrix_csv(matrix_csv);
    MembershipResult r = c.backend == PINV_BACKEND_FLOAT
                             ? membership_check_float(to_doubles(m), m.rows(), group->spec, c.tol)
                             : membership_check(m, group->spec);
    Json j = header("group-check", "group-membership", c);
    j["group"] = describe(group->spec);
    j["matrix"] = to_json(m);
    merge(j, to_json(r));
    emit(j, report, concluded, r.member);
  });
}

pinv_status pinv_power_closure(const char* elements, int as_polynomial, const char* exponents,
                               const pinv_config* cfg, char** report, int* concluded) {
  return guard([&] {
    need(elements, "elements");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    std::vector<long> ks = parse_longs(exponents, "exponents");
    PowerClosureReport r;
    Json j = header("power", "power-closed-spectrum", c);
    if (as_polynomial) {
      UniPoly<Rational> p(parse_rational_vector(elements));
      j["polynomial"] = to_string(p);
      r = power_closed_analysis(p, ks);
    } else {
      std::vector<PowerElement> a;
      std::string text(elements);
      std::size_t start = 0;
      while (true) {
        std::size_t comma = text.find(',', start);
        a.push_back(parse_element(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      r = power_closed_analysis(a, ks);
    }
    j["exponents"] = ks;
    merge(j, to_json(r));
    emit(j, report, concluded, r.outcome != PowerClosureOutcome::CounterexampleStructure);
  });
}

pinv_status pinv_spectra(const char* t_csv, const char* s_csv, const pinv_config* cfg, char** report,
                         int* concluded) {
  return guard([&] {
    need(t_csv, "T");
    need(s_csv, "S");
    need(report, "report");
    *report = nullptr;
    const auto& c = config_or_default(cfg);
    RationalMatrix t = parse_rational_matrix_csv(t_csv), s = parse_rational_matrix_csv(s_csv);
    double tol = c.tol;
    CommutingSpectraReport r = c.backend == PINV_BACKEND_FLOAT
                                   ? commuting_spectra_check(to_doubles(t), to_doubles(s), t.rows(), tol)
                                   : commuting_spectra_check(t, s, tol);
    Json j = header("spectra", "commuting-operators-spectral-product", c);
    merge(j, to_json(r));
    emit(j, report, concluded, r.found);
  });
}

pinv_status pinv_kronecker(size_t d, unsigned n, const pinv_config* cfg, char** report) {
  return guard([&] {
    need(report, "report");
    *report = nullptr;
    if (d == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "d and n must be positive");
    const auto& c = config_or_default(cfg);
    Json j = header("kronecker", "dense-subgroup-generators", c);
    j["d"] = d;
    j["n"] = n;
    j["generators"] = kronecker_generators(d, n);
    emit(j, report, nullptr, true);
  });
}

}  // extern "C"
