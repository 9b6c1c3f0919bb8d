#include "polyinv/reports.hpp"

#include "polyinv/errors.hpp"
#include "polyinv/text.hpp"

namespace polyinv {

namespace {

Json complex_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json step_json(const AnnihilationStep& s, bool with_witnesses) {
  Json j{{"z", to_json(s.z)}, {"annihilates", s.annihilates}};
  if (with_witnesses) j["witnesses"] = Json::array({s.p, s.q});
  return j;
}

Json elements_json(const std::vector<PowerElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

}  // namespace

Json report_header(const std::string& command, const std::string& theorem) {
  return Json{{"schema", "1"}, {"command", command}, {"theorem", theorem}};
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Classification& c) {
  return Json{{"is_ordinary_polynomial", c.is_ordinary_polynomial},
              {"total_degree", optional_json(c.total_degree)},
              {"fdeg", c.fdeg ? Json(*c.fdeg) : Json("infinite")}};
}

Json to_json(const FunctionSpace& v) { return Json::parse(space_to_json(v)); }

Json to_json(const ClosureResult& r) {
  return Json{{"status", r.status},
              {"cap_exceeded", r.cap_exceeded},
              {"dimension", r.space.dimension()},
              {"trace", r.trace},
              {"exhaustive", r.exhaustive},
              {"group_invariant", r.group_invariant},
              {"translation_invariant", r.translation_invariant},
              {"elements_used", r.elements_used},
              {"space", to_json(r.space)}};
}

Json to_json(const MembershipResult& r) {
  return Json{{"member", r.member}, {"residual", r.residual}, {"identity", r.detail}};
}

Json to_json(const InteriorEvidence& e) {
  Json j{{"verdict", to_string(e.verdict)},
         {"reason", e.reason},
         {"sample_count", e.sample_count},
         {"affine_rank", optional_json(e.affine_rank)},
         {"coverage", optional_json(e.coverage)},
         {"grid_points", optional_json(e.grid_points)},
         {"jacobian_witness", nullptr},
         {"ball", nullptr}};
  if (e.jacobian_witness) {
    const auto& w = *e.jacobian_witness;
    j["jacobian_witness"] = Json{{"parametrization", w.parametrization},
                                 {"parameters", to_json(w.parameters)},
                                 {"determinant", w.determinant},
                                 {"determinant_exact", w.determinant_exact ? Json(to_string(*w.determinant_exact))
                                                                           : Json(nullptr)}};
  }
  if (e.ball)
    j["ball"] = Json{{"center", e.ball->center},
                     {"radius", e.ball->radius},
                     {"eps", e.ball->eps},
                     {"tested_radius", e.ball->radius - e.ball->eps}};
  return j;
}

Json to_json(const StructuralReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items)
    items.push_back(Json{{"name", i.name},
                         {"status", i.status},
                         {"detail", i.detail},
                         {"counterexample", optional_json(i.counterexample)}});
  return Json{{"items", items},
              {"all_passed", r.all_passed()},
              {"transport", r.transport ? to_json(*r.transport) : Json(nullptr)},
              {"transport_in_group", r.transport_in_group}};
}

Json to_json(const AnnihilatorReport& r) {
  Json steps = Json::array(), probes = Json::array();
  for (const auto& s : r.verified_steps) steps.push_back(step_json(s, true));
  for (const auto& s : r.off_lambda) probes.push_back(step_json(s, false));
  return Json{{"dimension", r.dimension},
              {"char_poly", to_string(r.char_poly)},
              {"annihilator",
               Json{{"base", to_string(r.base)},
                    {"power", r.power},
                    {"degree", r.degree},
                    {"constant_term", to_string(r.constant_term)}}},
              {"translation_invariant", r.translation_invariant},
              {"group_elements_checked", r.group_elements_checked},
              {"group_exhaustive", r.group_exhaustive},
              {"verified_steps", steps},
              {"annihilation_holds", r.annihilation_holds},
              {"off_sample_probes", probes},
              {"interior", to_json(r.interior)},
              {"concluded", r.concluded},
              {"degree_bound", optional_json(r.degree_bound)},
              {"tight_degree", "unknown"},
              {"reason", r.reason}};
}

Json to_json(const MontelReport& r) {
  return Json{{"hypothesis", r.hypothesis},
              {"tuples_checked", r.tuples_checked},
              {"failing_tuple", optional_json(r.failing_tuple)},
              {"steps_span", r.steps_span},
              {"conclusion", r.conclusion},
              {"classification", to_json(r.classification)}};
}

Json to_json(const PowerClosureReport& r) {
  return Json{{"outcome", to_string(r.outcome)},
              {"set", elements_json(r.set)},
              {"violating_exponent", optional_json(r.violating_exponent)},
              {"violating_image", elements_json(r.violating_image)},
              {"detail", r.detail}};
}

Json to_json(const DilationReport& r) {
  return Json{{"dimension", r.dimension},
              {"char_poly", to_string(r.char_poly)},
              {"ks", r.ks},
              {"char_poly_matches", r.char_poly_matches},
              {"spectrum", to_json(r.spectrum)},
              {"power_closure_holds", r.power_closure_holds},
              {"unipotent", r.unipotent},
              {"unmixed_check", optional_json(r.unmixed_check)},
              {"concluded", r.concluded},
              {"functional_degree_bound", optional_json(r.functional_degree_bound)}};
}

Json to_json(const DegreeBounds& b) {
  return Json{{"dim", b.dim_rg},
              {"d", b.d},
              {"lower", b.lower},
              {"upper", b.upper},
              {"refined", optional_json(b.refined)},
              {"binomial_n", optional_json(b.binomial_n)}};
}

Json to_json(const CommutingSpectraReport& r) {
  Json m = Json::array();
  for (const auto& x : r.matching)
    m.push_back(Json{{"t", complex_json(x.t)}, {"s", complex_json(x.s)}, {"ts", complex_json(x.ts)}});
  auto poly = [](const std::optional<UniPoly<Rational>>& p) { return p ? Json(to_string(*p)) : Json(nullptr); };
  return Json{{"found", r.found},
              {"matching", m},
              {"max_error", r.max_error},
              {"char_poly_t", poly(r.char_t)},
              {"char_poly_s", poly(r.char_s)},
              {"char_poly_ts", poly(r.char_ts)}};
}

Json error_json(const std::exception& e) {
  Json j{{"schema", "1"}, {"message", e.what()}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    j["error"] = error_code_name(err->code());
    if (const auto* p = dynamic_cast<const ParseError*>(err)) {
      j["position"] = p->position();
      j["expected"] = p->expected();
    }
    if (const auto* n = dynamic_cast<const NotInvariantError*>(err)) {
      j["operator"] = n->op();
      j["basis_index"] = n->basis_index();
      j["basis_element"] = n->element();
      j["residual"] = n->residual();
    }
  } else {
    j["error"] = "internal";
  }
  return j;
}

}  // namespace polyinv
