// polyinv command-line front end. Every subcommand emits one report; exit
// status is 0 when the report concludes, 2 when it refuses or is
// inconclusive, 1 on errors.

#include "polyinv/polyinv.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  pinv_status status;
};

void check(pinv_status s) {
  if (s != PINV_OK) throw Failure{s};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Config = std::unique_ptr<pinv_config, Deleter<pinv_config, pinv_config_free>>;
using Poly = std::unique_ptr<pinv_exppoly, Deleter<pinv_exppoly, pinv_exppoly_free>>;
using Space = std::unique_ptr<pinv_space, Deleter<pinv_space, pinv_space_free>>;
using Group = std::unique_ptr<pinv_group, Deleter<pinv_group, pinv_group_free>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poly parse_poly(const std::string& text, std::size_t dim) {
  pinv_exppoly* f = nullptr;
  check(pinv_exppoly_parse(text.c_str(), dim, &f));
  return Poly(f);
}

Group parse_group(const std::string& spec) {
  pinv_group* g = nullptr;
  check(pinv_group_parse(spec.c_str(), &g));
  return Group(g);
}

Space load_space(const std::string& path) {
  pinv_space* v = nullptr;
  check(pinv_space_from_json(read_file(path).c_str(), &v));
  return Space(v);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + ";";
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_diagnostic(const char* err_json) {
  auto j = nlohmann::json::parse(err_json, nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "error: " << err_json << "\n";
    return;
  }
  std::cerr << "error (" << j.value("error", "unknown") << "): " << j.value("message", "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for translation- and group-invariant spaces of exponential polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string backend = "exact";
  double tol = 1e-9;
  std::size_t samples = 2000;
  std::size_t cap = 64;
  double eps = 0;
  std::size_t dim = 0;
  std::string output;
  app.add_option("--seed", seed, "PRNG seed");
  app.add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", tol, "float tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", samples, "sample count")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
  app.add_option("--cap", cap, "closure dimension cap")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  app.add_option("--eps", eps, "absolute grid spacing for interior tests");
  app.add_option("--dim", dim, "number of variables (default: inferred)");
  app.add_option("--json", output, "write the report to this path instead of stdout");

  std::string f_text, group_text, z0, z1, space_path, set_path, ks = "2,3", h, matrix_path, t_path, s_path;
  std::string elements, poly_coeffs, exponents;
  std::vector<std::string> steps;
  unsigned order = 1, kron_n = 1;
  std::size_t bound_dim = 0, bound_d = 0, kron_d = 1;
  bool lambda = false, csv = false;

  auto* classify = app.add_subcommand("classify", "ordinary-polynomial test and functional degree");
  classify->add_option("f", f_text)->required();

  auto* diff = app.add_subcommand("diff", "mixed finite difference");
  diff->add_option("f", f_text)->required();
  diff->add_option("--steps", steps, "step vectors, repeated or ';' separated")->required();

  auto* closure = app.add_subcommand("closure", "translation closure, optionally with a group");
  closure->add_option("f", f_text)->required();
  closure->add_option("--group", group_text);

  auto* orbit = app.add_subcommand("orbit", "point dump of G z0 or of G z0 - G z0");
  orbit->add_option("spec", group_text)->required();
  orbit->add_option("--z0", z0)->required();
  orbit->add_flag("--lambda", lambda, "dump the difference set");
  orbit->add_flag("--csv", csv, "CSV instead of JSON");

  auto* interior = app.add_subcommand("interior", "interior evidence for G z0 - G z0");
  interior->add_option("spec", group_text)->required();
  interior->add_option("--z0", z0)->required();

  auto* structure = app.add_subcommand("structure", "sampled identities of the difference set");
  structure->add_option("spec", group_text)->required();
  structure->add_option("--z0", z0)->required();
  structure->add_option("--z1", z1, "second start point for the transport check");

  auto* annihilate = app.add_subcommand("annihilate", "annihilator pipeline for an invariant space");
  annihilate->add_option("--space", space_path)->required()->check(CLI::ExistingFile);
  annihilate->add_option("--group", group_text)->required();
  annihilate->add_option("--z0", z0)->required();

  auto* dilate = app.add_subcommand("dilate", "dilation-invariance pipeline");
  dilate->add_option("--space", space_path)->required()->check(CLI::ExistingFile);
  dilate->add_option("--ks", ks, "dilation factors");
  dilate->add_option("--step", h, "translation step (default e_1)");

  auto* montel = app.add_subcommand("montel", "vanishing mixed differences over a step set");
  montel->add_option("f", f_text)->required();
  montel->add_option("--set", set_path, "file with one step per line")->required()->check(CLI::ExistingFile);
  montel->add_option("--order", order)->required()->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "degree bounds from the closure dimension");
  bounds->add_option("--dim", bound_dim)->required();
  bounds->add_option("--d", bound_d)->required();

  auto* group_check = app.add_subcommand("group-check", "membership of a matrix in a group");
  group_check->add_option("spec", group_text)->required();
  group_check->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);

  auto* power = app.add_subcommand("power", "sets closed under z -> z^k");
  auto* set_opt = power->add_option("--set", elements, "elements c or c:e:theta, comma separated");
  power->add_option("--poly", poly_coeffs, "polynomial coefficients, constant term first")->excludes(set_opt);
  power->add_option("--exponents", exponents)->required();

  auto* spectra = app.add_subcommand("spectra", "eigenvalue products of commuting matrices");
  spectra->add_option("--t", t_path)->required()->check(CLI::ExistingFile);
  spectra->add_option("--s", s_path)->required()->check(CLI::ExistingFile);

  auto* kronecker = app.add_subcommand("kronecker", "generators of a dense subgroup of R^d");
  kronecker->add_option("--d", kron_d)->required();
  kronecker->add_option("--n", kron_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Config cfg(pinv_config_new());
    if (!cfg) throw std::bad_alloc();
    check(pinv_config_set_seed(cfg.get(), seed));
    check(pinv_config_set_backend(cfg.get(), backend == "float" ? PINV_BACKEND_FLOAT : PINV_BACKEND_EXACT));
    check(pinv_config_set_tol(cfg.get(), tol));
    check(pinv_config_set_samples(cfg.get(), samples));
    check(pinv_config_set_cap(cfg.get(), cap));
    check(pinv_config_set_eps(cfg.get(), eps));

    char* report = nullptr;
    int concluded = 1;
    if (*classify) {
      check(pinv_classify(parse_poly(f_text, dim).get(), cfg.get(), &report, &concluded));
    } else if (*diff) {
      check(pinv_diff(parse_poly(f_text, dim).get(), join(steps).c_str(), cfg.get(), &report, &concluded));
    } else if (*closure) {
      Group g = group_text.empty() ? Group() : parse_group(group_text);
      std::size_t n = dim ? dim : (g ? pinv_group_dim(g.get()) : 0);
      check(pinv_closure(parse_poly(f_text, n).get(), g.get(), cfg.get(), &report, &concluded));
    } else if (*orbit) {
      check(pinv_orbit(parse_group(group_text).get(), z0.c_str(), lambda, csv, cfg.get(), &report));
    } else if (*interior) {
      check(pinv_interior(parse_group(group_text).get(), z0.c_str(), cfg.get(), &report, &concluded));
    } else if (*structure) {
      check(pinv_structure(parse_group(group_text).get(), z0.c_str(), z1.empty() ? nullptr : z1.c_str(), cfg.get(),
                           &report, &concluded));
    } else if (*annihilate) {
      check(pinv_annihilate(load_space(space_path).get(), parse_group(group_text).get(), z0.c_str(), cfg.get(),
                            &report, &concluded));
    } else if (*dilate) {
      check(pinv_dilate(load_space(space_path).get(), ks.c_str(), h.empty() ? nullptr : h.c_str(), cfg.get(), &report,
                        &concluded));
    } else if (*montel) {
      Poly f = parse_poly(f_text, dim);
      check(pinv_montel(f.get(), read_file(set_path).c_str(), order, cfg.get(), &report, &concluded));
    } else if (*bounds) {
      check(pinv_bounds(bound_dim, bound_d, cfg.get(), &report, &concluded));
    } else if (*group_check) {
      check(pinv_group_check(parse_group(group_text).get(), read_file(matrix_path).c_str(), cfg.get(), &report,
                             &concluded));
    } else if (*power) {
      if (elements.empty() == poly_coeffs.empty()) throw std::runtime_error("power needs exactly one of --set, --poly");
      bool as_poly = !poly_coeffs.empty();
      check(pinv_power_closure(as_poly ? poly_coeffs.c_str() : elements.c_str(), as_poly, exponents.c_str(),
                               cfg.get(), &report, &concluded));
    } else if (*spectra) {
      check(pinv_spectra(read_file(t_path).c_str(), read_file(s_path).c_str(), cfg.get(), &report, &concluded));
    } else if (*kronecker) {
      check(pinv_kronecker(kron_d, kron_n, cfg.get(), &report));
    }

    std::string text(report);
    pinv_string_free(report);
    write_output(text, output);
    return concluded ? 0 : 2;
  } catch (const Failure&) {
    const char* err = pinv_last_error();
    std::string body = err ? err : "{\"error\":\"internal\"}";
    print_diagnostic(body.c_str());
    try {
      write_output(nlohmann::json::parse(body).dump(2) + "\n", output);
    } catch (const std::exception&) {
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
