// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "petal/audit.hpp"
#include "petal/certificates.hpp"
#include "petal/errors.hpp"
#include "petal/jacobi.hpp"
#include "petal/oracle.hpp"
#include "petal/quotient.hpp"
#include "petal/reference_tables.hpp"
#include "petal/simulate.hpp"
#include "petal/spectral.hpp"

using namespace petal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double table_slem(const PetalSpec& spec) { return slem_quotient(quotient_matrices(spec, optimal_weights(spec))).slem; }

std::vector<PetalSpec> all_table_specs() {
  std::vector<PetalSpec> out;
  for (auto t : {hub_table(), core_table()})
    for (const auto& c : t) out.push_back(c.spec());
  return out;
}

Outcome hub_table_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& c : hub_table()) worst = std::max(worst, std::abs(table_slem(c.spec()) - c.slem));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= kTableTolerance && secs < 1.0,
          "14 cells, max |d| = " + fmt("%.2e", worst) + ", " + fmt("%.3f", secs) + " s"};
}

Outcome core_table_reproduction() {
  double worst = 0.0;
  for (const auto& c : core_table()) worst = std::max(worst, std::abs(table_slem(c.spec()) - c.slem));

  // Same (m, k) at every leaf count.
  double spread = 0.0;
  for (const auto& c : core_table()) {
    const double base = table_slem({CoreKind::CompleteCore, 2, PathBundle{c.m, c.k}});
    for (int n = 3; n <= 5; ++n)
      spread = std::max(spread, std::abs(table_slem({CoreKind::CompleteCore, n, PathBundle{c.m, c.k}}) - base));
  }
  return {worst <= kTableTolerance && spread <= 1e-10,
          "14 cells, max |d| = " + fmt("%.2e", worst) + ", n=2..5 spread " + fmt("%.1e", spread)};
}

Outcome quotient_full_equivalence() {
  double worst = 0.0;
  for (const auto& spec : all_table_specs()) {
    const auto w = optimal_weights(spec);
    const double full = slem_full(assemble_matrix(build_graph(spec), w)).slem;
    worst = std::max(worst, std::abs(full - slem_quotient(quotient_matrices(spec, w)).slem));
  }
  return {worst <= 1e-9, "28 instances, max |full - quotient| = " + fmt("%.1e", worst)};
}

Outcome interlacing() {
  double worst2 = 0.0, worst3 = 0.0;
  int with_w3 = 0;
  bool ok = true;
  for (const auto& spec : all_table_specs()) {
    const auto r = check_interlacing(quotient_matrices(spec, optimal_weights(spec)), 1e-10);
    ok = ok && r.ok();
    worst2 = std::max(worst2, r.w2_violation);
    if (r.w3_in_w2) {
      ++with_w3;
      worst3 = std::max(worst3, r.w3_violation);
    }
  }
  return {ok, "28 instances (" + std::to_string(with_w3) + " with W3), max violation W2 " + fmt("%.1e", worst2) +
                  ", W3 " + fmt("%.1e", worst3)};
}

Outcome certificates() {
  constexpr double kTol = 1e-8;
  constexpr double kPerturbedGap = 1e-4;
  double worst_residual = 0.0;
  double smallest_perturbed_gap = 1e300;
  bool ok = true;
  for (auto c : {CoreKind::SingleHub, CoreKind::CompleteCore})
    for (auto [n, m, k] : {std::array{2, 2, 1}, std::array{2, 2, 2}, std::array{2, 3, 1}, std::array{3, 2, 1}}) {
      const PetalSpec spec{c, n, PathBundle{m, k}};
      const auto cw = optimal_weights(spec).class_weights();
      const auto pair = quotient_matrices(spec, cw);
      const auto cert = build_certificate(pair, quotient_slem_value(pair));
      const auto r = slackness_check(cert, kTol);
      ok = ok && r.pass;
      worst_residual = std::max({worst_residual, r.residual_primal, r.residual_dual, r.gap, r.orthogonality});
      for (std::size_t i = 0; i < cw.size(); ++i) {
        auto bumped = cw;
        bumped[i] += 0.05;
        const auto pc = certify(quotient_matrices(spec, bumped));
        ok = ok && !slackness_check(pc, kTol).pass && pc.gap > kPerturbedGap;
        smallest_perturbed_gap = std::min(smallest_perturbed_gap, pc.gap);
      }
    }
  return {ok, "8 instances, max residual " + fmt("%.1e", worst_residual) + ", min gap under +0.05 " +
                  fmt("%.2e", smallest_perturbed_gap)};
}

Outcome oracle() {
  const std::vector<PetalSpec> specs{{CoreKind::SingleHub, 2, PathBundle{2, 2}},
                                     {CoreKind::SingleHub, 3, PathBundle{2, 1}},
                                     {CoreKind::CompleteCore, 2, PathBundle{2, 1}},
                                     {CoreKind::CompleteCore, 2, PathBundle{2, 2}},
                                     {CoreKind::SingleHub, 2, SymmetricG{2, 2}}};
  double worst = -1e300;
  for (const auto& s : specs) worst = std::max(worst, optimality_oracle(s).improvement);
  return {worst <= 1e-4, "5 instances, max improvement " + fmt("%.1e", worst)};
}

Outcome simulation() {
  bool ok = true;
  std::string detail;
  for (auto [n, m, k] : {std::array{2, 2, 1}, std::array{3, 3, 3}}) {
    const PetalSpec spec{CoreKind::SingleHub, n, PathBundle{m, k}};
    const Graph g = build_graph(spec);
    const Vector x0 = impulse_initial_state(g);
    const auto t = run_consensus(assemble_matrix(g, optimal_weights(spec)), x0, 400, "optimal");
    const double rate = asymptotic_rate(t, 50);
    const double diff = std::abs(rate - table_slem(spec));
    ok = ok && diff <= 1e-4 && t.max_mass_drift <= 1e-10 * norm2(x0);
    detail += "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ") |rate - slem| " +
              fmt("%.1e", diff) + "; ";
  }

  const PetalSpec fig{CoreKind::SingleHub, 3, PathBundle{4, 3}};
  const Graph g = build_graph(fig);
  const Vector x0 = impulse_initial_state(g);
  const auto opt = run_consensus(assemble_matrix(g, optimal_weights(fig)), x0, 100, "optimal");
  const auto mh = run_consensus(assemble_matrix(g, metropolis_hastings_weights(g)), x0, 100, "mh");
  ok = ok && opt.max_mass_drift <= 1e-10 * norm2(x0) && mh.max_mass_drift <= 1e-10 * norm2(x0);
  int t_star = 0;
  for (int t = 0; t <= 100; ++t)
    if (opt.distances[t] >= mh.distances[t]) t_star = t;
  ok = ok && t_star <= 30;
  detail += "crossover t* = " + std::to_string(t_star);
  return {ok, detail};
}

Outcome audit() {
  const auto specs = all_table_specs();
  const auto report = audit_closed_forms(specs);
  bool ok = true;
  for (const auto& r : report.records) {
    const auto& pb = std::get<PathBundle>(r.spec.leaf.kind);
    if (r.spec.core == CoreKind::CompleteCore && pb.k == 1) ok = ok && r.verdict == Verdict::Match;
    if (r.spec.core == CoreKind::SingleHub && r.spec.n * pb.k == 2) ok = ok && r.verdict != Verdict::Match;
    if (r.spec.core == CoreKind::CompleteCore && pb.k == 2 && pb.m == 2) ok = ok && r.verdict != Verdict::Match;
  }
  ok = ok && report.count(Verdict::Match) == 10;
  return {ok, "Match " + std::to_string(report.count(Verdict::Match)) + ", Mismatch " +
                  std::to_string(report.count(Verdict::Mismatch)) + ", NoRootInRange " +
                  std::to_string(report.count(Verdict::NoRootInRange)) + ", Degenerate " +
                  std::to_string(report.count(Verdict::Degenerate))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 hub table reproduction", hub_table_reproduction},
      {"2 complete-core table reproduction", core_table_reproduction},
      {"3 quotient/full equivalence", quotient_full_equivalence},
      {"4 interlacing", interlacing},
      {"5 certificates", certificates},
      {"6 oracle", oracle},
      {"7 simulation", simulation},
      {"8 audit golden", audit},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  %-36s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
