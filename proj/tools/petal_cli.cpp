// petal: build, analyse and simulate petal consensus networks.
//
// Exit codes: 0 success, 2 invalid input, 3 numeric failure, 4 a check
// exceeded its tolerance.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "petal/audit.hpp"
#include "petal/certificates.hpp"
#include "petal/errors.hpp"
#include "petal/export.hpp"
#include "petal/oracle.hpp"
#include "petal/quotient.hpp"
#include "petal/reference_tables.hpp"
#include "petal/simulate.hpp"
#include "petal/spectral.hpp"
#include "petal/topology.hpp"
#include "petal/weights.hpp"

using namespace petal;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitTolerance = 4;

struct RunConfig {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 42;
  std::optional<double> tol;

  std::string core = "hub";
  int n = 2;
  int m = 2;
  int k = 1;
  std::string leaf = "path";
  std::vector<int> expand;
  std::vector<int> contract;
  std::string spec_file;

  std::string scheme = "optimal";
  std::string method = "quotient";
  int steps = 100;
  int window = 50;
  std::string x0 = "impulse";
  int budget = 2000;
  std::vector<std::string> perturb;
};

PetalSpec spec_from_config(const RunConfig& c) {
  if (!c.spec_file.empty()) {
    std::ifstream in(c.spec_file);
    if (!in) throw SpecError("cannot open spec file " + c.spec_file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw SpecError(std::string("spec file is not valid JSON: ") + e.what());
    }
    return spec_from_json(doc);
  }
  PetalSpec spec;
  if (c.core == "hub") spec.core = CoreKind::SingleHub;
  else if (c.core == "complete") spec.core = CoreKind::CompleteCore;
  else throw SpecError("--core must be hub or complete");
  spec.n = c.n;
  if (c.leaf == "path") spec.leaf = PathBundle{c.m, c.k};
  else if (c.leaf == "g") spec.leaf = SymmetricG{c.m, c.k};
  else if (c.leaf == "asym") spec.leaf = AsymmetricG{c.expand, c.contract};
  else throw SpecError("--leaf must be path, g or asym");
  validate(spec);
  return spec;
}

WeightAssignment weights_from_config(const RunConfig& c, const PetalSpec& spec, const Graph& graph) {
  if (c.scheme == "optimal") return optimal_weights(spec);
  if (c.scheme == "mh") return metropolis_hastings_weights(graph);
  throw SpecError("--scheme must be optimal or mh");
}

// "w2=+0.05" adds 0.05 to the class labelled w2; "w2=0.3" sets it.
WeightAssignment apply_perturbations(const WeightAssignment& base, const std::vector<std::string>& edits) {
  Vector w = base.class_weights();
  for (const auto& edit : edits) {
    const auto eq = edit.find('=');
    if (eq == std::string::npos) throw SpecError("--perturb expects label=value, got '" + edit + "'");
    const std::string label = edit.substr(0, eq);
    const std::string value = edit.substr(eq + 1);
    std::size_t idx = base.classes.size();
    for (std::size_t i = 0; i < base.classes.size(); ++i)
      if (base.classes[i].label == label) idx = i;
    if (idx == base.classes.size()) throw SpecError("no weight class labelled '" + label + "'");
    double delta = 0.0;
    try {
      delta = std::stod(value);
    } catch (const std::exception&) {
      throw SpecError("bad number in --perturb: '" + value + "'");
    }
    const bool relative = !value.empty() && (value[0] == '+' || value[0] == '-');
    w[idx] = relative ? w[idx] + delta : delta;
  }
  return base.with_class_weights(w);
}

std::string num(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string fixed(double x, int digits = 6) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw SpecError("cannot write " + c.out);
  f << text;
}

void emit_json(const RunConfig& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw SpecError("format '" + c.format + "' not supported here (use " + list + ")");
}

int cmd_build(const RunConfig& c) {
  require_format(c, {"json", "csv", "dot"});
  const PetalSpec spec = spec_from_config(c);
  const Graph g = build_graph(spec);
  if (c.format == "dot") {
    emit(c, to_dot(g));
  } else if (c.format == "csv") {
    std::string s = "u,v,stratum_u,stratum_v\n";
    for (const auto& [u, v] : g.edges)
      s += std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(g.stratum_of[u]) + "," +
           std::to_string(g.stratum_of[v]) + "\n";
    emit(c, s);
  } else {
    Json j = to_json(g);
    j["spec"] = to_json(spec);
    emit_json(c, j);
  }
  return 0;
}

int cmd_weights(const RunConfig& c) {
  require_format(c, {"json", "csv", "md"});
  const PetalSpec spec = spec_from_config(c);
  const Graph g = build_graph(spec);
  const WeightAssignment w = weights_from_config(c, spec, g);
  if (c.format == "json") {
    Json j = to_json(w, c.scheme == "mh");
    j["spec"] = describe(spec);
    emit_json(c, j);
    return 0;
  }
  auto exact = [](const EdgeClass& e) {
    return e.exact ? std::to_string(e.exact->numerator()) + "/" + std::to_string(e.exact->denominator()) : std::string("-");
  };
  std::string s = c.format == "csv" ? "label,from_stratum,to_stratum,exact,weight\n"
                                    : "| class | strata | exact | weight |\n|---|---|---|---|\n";
  for (const auto& e : w.classes) {
    if (c.format == "csv")
      s += e.label + "," + std::to_string(e.from_stratum) + "," + std::to_string(e.to_stratum) + "," + exact(e) + "," +
           num(e.weight, 17) + "\n";
    else
      s += "| " + e.label + " | " + std::to_string(e.from_stratum) + "-" + std::to_string(e.to_stratum) + " | " +
           exact(e) + " | " + fixed(e.weight) + " |\n";
  }
  emit(c, s);
  return 0;
}

int cmd_slem(const RunConfig& c) {
  require_format(c, {"json", "csv", "md"});
  const PetalSpec spec = spec_from_config(c);
  const Graph g = build_graph(spec);
  const WeightAssignment w = apply_perturbations(weights_from_config(c, spec, g), c.perturb);
  const WeightMatrix full = assemble_matrix(g, w);

  SpectralReport report;
  if (c.method == "full") {
    report = slem_full(full);
  } else if (c.method == "quotient") {
    report = slem_quotient(quotient_matrices(spec, w));
  } else {
    throw SpecError("--method must be quotient or full");
  }
  report.spec = describe(spec);
  report.convergence_factor = convergence_factor(full);

  if (c.format == "json") {
    emit_json(c, to_json(report));
  } else if (c.format == "csv") {
    emit(c, "spec,source,slem,theta,convergence_factor\n\"" + report.spec + "\"," + to_string(report.source) + "," +
                num(report.slem, 17) + "," + num(report.theta, 17) + "," + num(*report.convergence_factor, 17) + "\n");
  } else {
    emit(c, "| spec | source | SLEM | theta | r(W) |\n|---|---|---|---|---|\n| " + report.spec + " | " +
                to_string(report.source) + " | " + fixed(report.slem) + " | " + fixed(report.theta) + " | " +
                fixed(*report.convergence_factor) + " |\n");
  }
  return 0;
}

int cmd_tables(const RunConfig& c) {
  require_format(c, {"json", "csv", "md"});
  const double tol = c.tol.value_or(kTableTolerance);
  struct Row {
    std::string table;
    ReferenceCell cell;
    double computed;
  };
  std::vector<Row> rows;
  bool ok = true;
  for (auto [name, table] : {std::pair{"hub", hub_table()}, std::pair{"complete", core_table()}}) {
    for (const auto& cell : table) {
      const PetalSpec spec = cell.spec();
      const double s = slem_quotient(quotient_matrices(spec, optimal_weights(spec))).slem;
      ok = ok && std::abs(s - cell.slem) <= tol;
      rows.push_back({name, cell, s});
    }
  }

  if (c.format == "json") {
    Json cells = Json::array();
    for (const auto& r : rows)
      cells.push_back(Json{{"table", r.table},
                           {"n", r.cell.n},
                           {"m", r.cell.m},
                           {"k", r.cell.k},
                           {"computed", r.computed},
                           {"published", r.cell.slem},
                           {"difference", std::abs(r.computed - r.cell.slem)}});
    emit_json(c, Json{{"schema_version", kSchemaVersion}, {"tolerance", tol}, {"pass", ok}, {"cells", cells}});
  } else if (c.format == "csv") {
    std::string s = "table,n,m,k,computed,published,difference\n";
    for (const auto& r : rows)
      s += r.table + "," + std::to_string(r.cell.n) + "," + std::to_string(r.cell.m) + "," + std::to_string(r.cell.k) +
           "," + num(r.computed, 12) + "," + fixed(r.cell.slem, 5) + "," + num(std::abs(r.computed - r.cell.slem), 3) + "\n";
    emit(c, s);
  } else {
    std::string s = "| table | (n, m, k) | computed | published | difference |\n|---|---|---|---|---|\n";
    for (const auto& r : rows)
      s += "| " + r.table + " | (" + std::to_string(r.cell.n) + ", " + std::to_string(r.cell.m) + ", " +
           std::to_string(r.cell.k) + ") | " + fixed(r.computed) + " | " + fixed(r.cell.slem, 5) + " | " +
           num(std::abs(r.computed - r.cell.slem), 3) + " |\n";
    emit(c, s);
  }
  return ok ? 0 : kExitTolerance;
}

int cmd_simulate(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  const PetalSpec spec = spec_from_config(c);
  const Graph g = build_graph(spec);
  Vector x0;
  std::string initial;
  if (c.x0 == "impulse") {
    x0 = impulse_initial_state(g);
    initial = "impulse at terminal node of leaf 1";
  } else if (c.x0 == "random") {
    x0 = random_initial_state(g.node_count, c.seed);
    initial = "standard normal, seed " + std::to_string(c.seed);
  } else {
    throw SpecError("--x0 must be impulse or random");
  }

  std::vector<Trajectory> runs;
  runs.push_back(run_consensus(assemble_matrix(g, optimal_weights(spec)), x0, c.steps, "optimal", initial));
  runs.push_back(run_consensus(assemble_matrix(g, metropolis_hastings_weights(g)), x0, c.steps, "mh", initial));

  if (c.format == "csv") {
    std::string s = "t,distance,scheme\n";
    for (const auto& tr : runs)
      for (std::size_t t = 0; t < tr.distances.size(); ++t)
        s += std::to_string(t) + "," + num(tr.distances[t], 17) + "," + tr.scheme + "\n";
    emit(c, s);
    return 0;
  }
  Json j{{"schema_version", kSchemaVersion}, {"spec", describe(spec)}, {"steps", c.steps}, {"initial", initial}};
  Json list = Json::array();
  for (const auto& tr : runs) {
    Json r{{"scheme", tr.scheme}, {"distances", tr.distances}, {"max_mass_drift", tr.max_mass_drift}};
    try {
      r["asymptotic_rate"] = asymptotic_rate(tr, std::min(c.window, c.steps));
    } catch (const Underflow&) {
      r["asymptotic_rate"] = nullptr;
    }
    list.push_back(r);
  }
  j["trajectories"] = list;
  emit_json(c, j);
  return 0;
}

std::vector<PetalSpec> table_specs() {
  std::vector<PetalSpec> specs;
  for (auto table : {hub_table(), core_table()})
    for (const auto& cell : table) specs.push_back(cell.spec());
  return specs;
}

int cmd_audit(const RunConfig& c) {
  require_format(c, {"json", "md"});
  const auto specs = table_specs();
  const AuditReport report = audit_closed_forms(specs, c.tol.value_or(1e-6));
  if (c.format == "md") emit(c, to_markdown(report));
  else emit_json(c, to_json(report));
  return 0;
}

int cmd_verify(const RunConfig& c) {
  require_format(c, {"json", "md"});
  const double tol = c.tol.value_or(1e-8);
  constexpr double kOracleAllowance = 1e-4;
  const PetalSpec spec = spec_from_config(c);
  const WeightAssignment w = apply_perturbations(optimal_weights(spec), c.perturb);
  const QuotientPair pair = quotient_matrices(spec, w);
  const DualCertificate cert = certify(pair);
  const SlacknessReport slack = slackness_check(cert, tol);

  OracleOptions opt;
  opt.budget = c.budget;
  opt.seed = c.seed;
  const OracleResult oracle = optimality_oracle(spec, opt);
  const double weights_slem = slem_for_class_weights(spec, w.class_weights());
  const double gain = weights_slem - oracle.best_slem;
  const bool oracle_ok = gain <= kOracleAllowance;
  const bool pass = slack.pass && oracle_ok;

  if (c.format == "json") {
    emit_json(c, Json{{"schema_version", kSchemaVersion},
                      {"spec", describe(spec)},
                      {"weights", to_json(w)},
                      {"certificate", to_json(cert)},
                      {"slackness", to_json(slack)},
                      {"oracle", to_json(oracle)},
                      {"oracle_gain_over_weights", gain},
                      {"pass", pass}});
  } else {
    std::string s = "| check | value | limit | status |\n|---|---|---|---|\n";
    auto row = [&](const std::string& name, double v, double lim) {
      s += "| " + name + " | " + num(v, 3) + " | " + num(lim, 3) + " | " + (v <= lim ? "ok" : "FAIL") + " |\n";
    };
    row("primal residual", slack.residual_primal, tol);
    row("dual residual", slack.residual_dual, tol);
    row("duality gap", slack.gap, tol);
    row("orthogonality", slack.orthogonality, tol);
    row("class balance", slack.class_balance, tol);
    row("oracle gain", gain, kOracleAllowance);
    s += std::string("\n") + (pass ? "PASS" : "FAIL") + " " + describe(spec) + "\n";
    emit(c, s);
  }
  return pass ? 0 : kExitTolerance;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--format", c.format, "Output format: json, csv, md (build also takes dot)");
  app->add_option("--out", c.out, "Write output to this file instead of stdout");
  app->add_option("--seed", c.seed, "Seed for random initial states and oracle restarts");
  app->add_option("--tol", c.tol, "Override the command's tolerance");
}

void add_spec(CLI::App* app, RunConfig& c) {
  app->add_option("--core", c.core, "hub or complete");
  app->add_option("-n", c.n, "Number of leaves");
  app->add_option("-m", c.m, "Path length or tree height");
  app->add_option("-k", c.k, "Parallel paths or branching factor");
  app->add_option("--leaf", c.leaf, "Leaf kind: path, g, asym");
  app->add_option("--expand", c.expand, "Per-depth child counts (asym leaves)")->delimiter(',');
  app->add_option("--contract", c.contract, "Per-depth parent counts (asym leaves)")->delimiter(',');
  app->add_option("--spec-file", c.spec_file, "JSON spec; required for composite leaves");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petal consensus networks: optimal weights, SLEM, certificates, simulation"};
  app.require_subcommand(1);
  RunConfig c;

  auto* build = app.add_subcommand("build", "Realize the graph with strata and core distances");
  auto* weights = app.add_subcommand("weights", "Print edge-class weights");
  auto* slem = app.add_subcommand("slem", "Second largest eigenvalue modulus");
  auto* tables = app.add_subcommand("tables", "Recompute the published SLEM tables");
  auto* simulate = app.add_subcommand("simulate", "Consensus trajectories, optimal vs Metropolis-Hastings");
  auto* audit = app.add_subcommand("audit", "Compare printed closed forms with numeric SLEM");
  auto* verify = app.add_subcommand("verify", "Slackness certificate plus optimization oracle");

  for (auto* sub : {build, weights, slem, tables, simulate, audit, verify}) add_common(sub, c);
  for (auto* sub : {build, weights, slem, simulate, verify}) add_spec(sub, c);
  for (auto* sub : {weights, slem}) sub->add_option("--scheme", c.scheme, "optimal or mh");
  slem->add_option("--method", c.method, "quotient or full");
  for (auto* sub : {slem, verify})
    sub->add_option("--perturb", c.perturb, "Adjust a class weight, e.g. w2=+0.05 (repeatable)");
  simulate->add_option("--steps", c.steps, "Iteration count")->check(CLI::PositiveNumber);
  simulate->add_option("--window", c.window, "Tail length for the rate estimate")->check(CLI::PositiveNumber);
  simulate->add_option("--x0", c.x0, "impulse or random");
  verify->add_option("--budget", c.budget, "Nelder-Mead iterations per run")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*build) return cmd_build(c);
    if (*weights) return cmd_weights(c);
    if (*slem) return cmd_slem(c);
    if (*tables) return cmd_tables(c);
    if (*simulate) return cmd_simulate(c);
    if (*audit) return cmd_audit(c);
    if (*verify) return cmd_verify(c);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
