#include "dmloc/report.hpp"

#include "dmloc/error.hpp"
#include "dmloc/text.hpp"

namespace dmloc {

namespace {

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string log_string(int64_t v) { return std::to_string(v); }

const char* kind_name(ASKind k) {
  switch (k) {
    case ASKind::Ramified: return "ramified";
    case ASKind::UnramifiedNontrivial: return "unramified_nontrivial";
    case ASKind::Trivial: return "trivial";
  }
  return "";
}

const char* outcome_name(KummerOutcome o) {
  switch (o) {
    case KummerOutcome::SurjectiveOnInertia: return "surjective_on_inertia";
    case KummerOutcome::ProperImageWitness: return "proper_image_witness";
    case KummerOutcome::Inconclusive: return "inconclusive";
  }
  return "";
}

const char* status_name(FormStatus s) {
  switch (s) {
    case FormStatus::Ramified: return "ramified";
    case FormStatus::ZeroOnInertia: return "zero_on_inertia";
    case FormStatus::Unknown: return "unknown";
  }
  return "";
}

}  // namespace

json norm_json(const NormValue& n, uint64_t q) {
  json j{{"value", n.to_string()}};
  const auto e = n.exact_log(q);
  j["log_q"] = e ? json(rational_string(*e)) : json(nullptr);
  return j;
}

json to_json(const ASClass& c) {
  json j{{"w", to_string(c.representative)},
         {"reduced", to_string(c.reduced)},
         {"classification", kind_name(c.kind)},
         {"steps", c.steps}};
  j["break"] = c.kind == ASKind::Ramified ? json(c.break_value) : json(nullptr);
  return j;
}

json to_json(const KummerBreakReport& r) {
  json j{{"lambda", to_string(r.lambda)},
         {"height", r.height},
         {"vanishing_level", r.vanishing_level},
         {"zero_map", r.zero_map},
         {"exact", r.exact}};
  j["break"] = r.break_value ? json(*r.break_value) : json(nullptr);
  return j;
}

json to_json(const KummerImageReport& r) {
  size_t counts[3] = {0, 0, 0};
  for (const auto& f : r.forms) ++counts[static_cast<int>(f.status)];
  json j{{"outcome", outcome_name(r.outcome)},
         {"extension_degree", r.extension_degree},
         {"dimension", r.dimension},
         {"forms", r.forms.size()},
         {"ramified_forms", counts[0]},
         {"zero_forms", counts[1]},
         {"unknown_forms", counts[2]},
         {"zero_image", r.zero_image},
         {"exact_factors", r.exact_factors},
         {"max_break", r.max_break}};
  if (r.witness) {
    const auto& f = r.forms[*r.witness];
    j["witness"] = json{{"form", f.coefficients}, {"status", status_name(f.status)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const ConductorReport& r) {
  json j{{"m", r.m},
         {"vol_log_q", log_string(r.vol_log)},
         {"volume_bound", big(r.volume_bound)},
         {"r", r.r},
         {"s", r.s},
         {"n", r.n},
         {"tightened", r.tightened},
         {"bound_holds", r.bound_holds},
         {"descent_steps", r.descent_steps},
         {"heights", r.heights}};
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["interval"] = r.interval ? json::array({r.interval->first, r.interval->second}) : json(nullptr);
  json breaks = json::array();
  for (const auto& b : r.breaks) breaks.push_back(to_json(b));
  j["breaks"] = breaks;
  j["certificate_level"] = r.certificate_level ? json(to_string(*r.certificate_level, "t")) : json(nullptr);
  return j;
}

json to_json(const VolumeReport& r) {
  json routes{{"orthogonal", log_string(r.by_orthogonal)}, {"determinant", log_string(r.by_determinant)}};
  routes["counting"] = r.by_counting ? json(log_string(*r.by_counting)) : json(nullptr);
  return json{{"vol_log_q", log_string(r.vol_log)},
              {"euler_characteristic", log_string(r.euler_characteristic)},
              {"routes", routes},
              {"counting_level", r.counting_level},
              {"agree", r.agree}};
}

json to_json(const DeterminantVolume& r) {
  return json{{"vol_log_q", log_string(r.vol_log)},
              {"sublattice_vol_log_q", log_string(r.sublattice_vol_log)},
              {"det_degree", r.det_degree},
              {"smith_index_log_q", r.smith_index_log},
              {"index_consistent", r.index_consistent}};
}

json to_json(const GeneratorBound& r) {
  return json{{"bound_log_q", log_string(r.bound_log)}, {"ball_size", r.ball_size}, {"generates", r.generates}};
}

json to_json(const OrthogonalBasis& b, uint64_t q) {
  json out = json::array();
  for (const auto& v : b.vectors) {
    json coords = json::array();
    for (const auto& c : v.coords) coords.push_back(to_string(c, "t"));
    json e{{"coords", coords}, {"norm", norm_json(v.norm, q)}};
    if (v.value) e["value"] = to_string(*v.value);
    out.push_back(e);
  }
  return out;
}

json cmd_height(const Problem& p) {
  const auto elems = p.height_elements();
  if (elems.empty()) throw ParseError("missing required key [height] elements");
  std::shared_ptr<const DrinfeldModule> d;
  if (!p.config().phi_t.empty()) d = p.module();
  json list = json::array();
  for (size_t i = 0; i < elems.size(); ++i) {
    const LocalElem& x = elems[i];
    unsigned h;
    if (d) {
      h = d->height(x);
    } else {
      h = (x.is_zero() || x.valuation().value >= 0) ? 0u : static_cast<unsigned>(-x.valuation().value);
    }
    json e{{"element", p.config().height_elements[i]}, {"height", h}};
    e["valuation"] = x.is_zero() ? json(nullptr) : json(x.valuation().value);
    list.push_back(e);
  }
  json out{{"command", "height"}, {"results", list}, {"provenance", {{"height", "valuation"}}}};
  if (elems.size() == 1) out["height"] = list[0]["height"];
  return out;
}

json cmd_reduce(const Problem& p) {
  const NormedLattice lat = p.lattice();
  const OrthogonalBasis b = reduce(lat, ReduceOptions{p.config().cap_iterations});
  json minima = json::array();
  for (const auto& n : successive_minima(b)) minima.push_back(norm_json(n, p.q()));
  return json{{"command", "reduce"},
              {"mode", p.config().lattice_mode},
              {"rank", b.rank()},
              {"basis", to_json(b, p.q())},
              {"successive_minima", minima},
              {"provenance", {{"basis", "class-aligned reduction"}}}};
}

json cmd_volume(const Problem& p) {
  const NormedLattice lat = p.lattice();
  const OrthogonalBasis b = reduce(lat, ReduceOptions{p.config().cap_iterations});
  json out = to_json(volume_report(lat, b));
  out["command"] = "volume";
  out["mode"] = p.config().lattice_mode;
  out["rank"] = b.rank();
  json minima = json::array();
  for (const auto& n : successive_minima(b)) minima.push_back(norm_json(n, p.q()));
  out["successive_minima"] = minima;
  if (auto m = p.sublattice()) out["sublattice"] = to_json(volume_det(b, p.ring(), *m));
  try {
    out["generator_bound"] = to_json(generator_bound(lat, b));
  } catch (const ComputationError& e) {
    out["generator_bound"] = json{{"error", e.code()}, {"message", e.what()}};
  }
  out["provenance"] = json{{"vol_log_q", "orthogonal formula, checked against determinant and counting"},
                           {"generator_bound", "ball enumeration + Smith form"}};
  return out;
}

json cmd_conductor(const Problem& p) {
  const auto d = p.module();
  const ConductorReport r =
      conductor(*d, p.generators(), ConductorOptions{p.config().cap_ext, p.config().cap_iterations});
  json out = to_json(r);
  out["command"] = "conductor";
  out["provenance"] = json{{"exact", "max reduced height prime to p"},
                           {"interval", "upper m-1; lower from certified Kummer breaks"},
                           {"volume_bound", "vol^s C^{s(r-s)} with -1 tightening"}};
  return out;
}

json cmd_as_break(const Problem& p) {
  json out = to_json(as_reduce(p.as_w()));
  out["command"] = "as-break";
  out["provenance"] = json{{"break", "wp-reduction"}};
  return out;
}

json cmd_kummer(const Problem& p) {
  const auto d = p.module();
  const LocalElem lambda = p.kummer_lambda();
  json out = to_json(kummer_image_at_level(*d, p.kummer_a(), lambda, p.config().cap_ext));
  out["command"] = "kummer";
  out["kummer_break"] = to_json(kummer_break(*d, lambda));
  out["provenance"] = json{{"outcome", out["exact_factors"].get<bool>() ? "exact scaling factors + wp-reduction"
                                                                         : "valuation certificate"}};
  return out;
}

}  // namespace dmloc
