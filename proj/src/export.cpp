#include "petal/export.hpp"

#include <sstream>

#include "petal/errors.hpp"

namespace petal {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

Json versioned(Json body) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

int positive_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) throw SpecError(std::string("missing integer field '") + key + "'");
  return doc[key].get<int>();
}

std::vector<int> int_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw SpecError(std::string("missing list field '") + key + "'");
  std::vector<int> out;
  for (const auto& v : doc[key]) {
    if (!v.is_number_integer()) throw SpecError(std::string("non-integer entry in '") + key + "'");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const LeafKind& leaf) {
  return std::visit(
      Overloaded{
          [](const PathBundle& p) { return Json{{"kind", "path_bundle"}, {"m", p.m}, {"k", p.k}}; },
          [](const SymmetricG& g) { return Json{{"kind", "symmetric_g"}, {"m", g.m}, {"k", g.k}}; },
          [](const AsymmetricG& g) { return Json{{"kind", "asymmetric_g"}, {"expand", g.expand}, {"contract", g.contract}}; },
          [](const Composite& c) {
            Json segs = Json::array();
            for (const auto& s : c.segments) segs.push_back(to_json(s));
            return Json{{"kind", "composite"}, {"segments", segs}};
          },
      },
      leaf.kind);
}

Json to_json(const PetalSpec& spec) {
  return Json{{"core", spec.core == CoreKind::SingleHub ? "hub" : "complete"}, {"n", spec.n}, {"leaf", to_json(spec.leaf)}};
}

LeafKind leaf_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) throw SpecError("leaf needs a string 'kind'");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "path_bundle") return PathBundle{positive_int(doc, "m"), positive_int(doc, "k")};
  if (kind == "symmetric_g") return SymmetricG{positive_int(doc, "m"), positive_int(doc, "k")};
  if (kind == "asymmetric_g") return AsymmetricG{int_list(doc, "expand"), int_list(doc, "contract")};
  if (kind == "composite") {
    if (!doc.contains("segments") || !doc["segments"].is_array()) throw SpecError("composite needs 'segments'");
    Composite c;
    for (const auto& s : doc["segments"]) c.segments.push_back(leaf_from_json(s));
    return c;
  }
  throw SpecError("unknown leaf kind '" + kind + "'");
}

PetalSpec spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw SpecError("spec document must be an object");
  PetalSpec spec;
  const auto core = doc.value("core", std::string("hub"));
  if (core == "hub") spec.core = CoreKind::SingleHub;
  else if (core == "complete") spec.core = CoreKind::CompleteCore;
  else throw SpecError("core must be 'hub' or 'complete'");
  spec.n = positive_int(doc, "n");
  if (!doc.contains("leaf")) throw SpecError("missing 'leaf'");
  spec.leaf = leaf_from_json(doc["leaf"]);
  validate(spec);
  return spec;
}

Json to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges) edges.push_back({u, v});
  return versioned(Json{{"nodes", graph.node_count},
                        {"edges", edges},
                        {"strata", graph.stratum_of},
                        {"core_distance", graph.core_distance}});
}

Json to_json(const WeightAssignment& weights, bool include_per_edge) {
  Json classes = Json::array();
  for (const auto& c : weights.classes) {
    Json entry{{"from_stratum", c.from_stratum}, {"to_stratum", c.to_stratum}, {"label", c.label}};
    if (c.exact) {
      entry["weight_num"] = c.exact->numerator();
      entry["weight_den"] = c.exact->denominator();
    }
    entry["weight"] = c.weight;
    classes.push_back(entry);
  }
  Json body{{"scheme", to_string(weights.scheme)}, {"classes", classes}};
  if (weights.scheme == Scheme::MetropolisHastings) body["rule"] = "1/(1+max(deg i, deg j))";
  if (include_per_edge && !weights.per_edge.empty()) body["per_edge"] = weights.per_edge;
  return versioned(body);
}

Json to_json(const SpectralReport& report) {
  Json body{{"spec", report.spec},
            {"slem", report.slem},
            {"theta", report.theta},
            {"source", to_string(report.source)},
            {"spectrum_w1", report.spectrum_w1},
            {"spectrum_w2", report.spectrum_w2}};
  if (!report.spectrum_w3.empty()) body["spectrum_w3"] = report.spectrum_w3;
  if (!report.spectrum.empty()) body["spectrum"] = report.spectrum;
  body["convergence_factor"] = report.convergence_factor ? Json(*report.convergence_factor) : Json(nullptr);
  return versioned(body);
}

Json to_json(const DualCertificate& cert) {
  return versioned(Json{{"s", cert.s},
                        {"primal_eigenvalue", cert.primal_eigenvalue},
                        {"dual_eigenvalue", cert.dual_eigenvalue},
                        {"a", cert.a},
                        {"a_prime", cert.a_prime},
                        {"residual_primal", cert.residual_primal},
                        {"residual_dual", cert.residual_dual},
                        {"gap", cert.gap},
                        {"orthogonality", cert.orthogonality},
                        {"class_balance", cert.class_balance},
                        {"normalization", cert.normalization}});
}

Json to_json(const SlacknessReport& report) {
  return versioned(Json{{"pass", report.pass},
                        {"tolerance", report.tolerance},
                        {"residual_primal", report.residual_primal},
                        {"residual_dual", report.residual_dual},
                        {"gap", report.gap},
                        {"orthogonality", report.orthogonality},
                        {"class_balance", report.class_balance}});
}

Json to_json(const OracleResult& result) {
  return versioned(Json{{"best_weights", result.best_weights},
                        {"best_slem", result.best_slem},
                        {"analytic_weights", result.analytic_weights},
                        {"analytic_slem", result.analytic_slem},
                        {"iterations", result.iterations},
                        {"improvement", result.improvement}});
}

Json to_json(const AuditReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back(Json{{"spec", describe(r.spec)},
                           {"slem_numeric", r.slem_numeric},
                           {"closed_form_value", r.closed_form_value ? Json(*r.closed_form_value) : Json(nullptr)},
                           {"difference", r.difference ? Json(*r.difference) : Json(nullptr)},
                           {"verdict", to_string(r.verdict)},
                           {"candidates", r.candidates}});
  }
  Json counts;
  for (auto v : {Verdict::Match, Verdict::Mismatch, Verdict::NoRootInRange, Verdict::Degenerate})
    counts[to_string(v)] = report.count(v);
  return versioned(Json{{"tolerance", report.tolerance}, {"counts", counts}, {"records", records}});
}

std::string to_dot(const Graph& graph) {
  static constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                             "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  std::ostringstream os;
  os << "graph petal {\n  node [style=filled, shape=circle, fontsize=9];\n";
  for (int v = 0; v < graph.node_count; ++v)
    os << "  " << v << " [fillcolor=\"" << kPalette[graph.stratum_of[v] % 8] << "\", label=\"" << v << "\"];\n";
  for (const auto& [u, v] : graph.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace petal
