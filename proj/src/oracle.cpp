#include "petal/oracle.hpp"

#include <random>

#include "petal/nelder_mead.hpp"
#include "petal/quotient.hpp"
#include "petal/spectral.hpp"
#include "petal/weights.hpp"

namespace petal {

namespace {

constexpr int kMaxRefreshes = 20;
constexpr double kRefreshGain = 1e-13;

}  // namespace

double slem_for_class_weights(const PetalSpec& spec, std::span<const double> weights) {
  return quotient_slem_value(quotient_matrices(spec, weights));
}

OracleResult optimality_oracle(const PetalSpec& spec, const OracleOptions& options) {
  const WeightAssignment analytic = optimal_weights(spec);
  OracleResult out;
  out.analytic_weights = analytic.class_weights();
  out.analytic_slem = slem_for_class_weights(spec, out.analytic_weights);

  Vector origin = out.analytic_weights;
  if (options.start == OracleStart::MetropolisHastings) {
    const Graph g = build_graph(spec);
    const WeightAssignment mh = metropolis_hastings_weights(g);
    for (std::size_t i = 0; i < analytic.classes.size(); ++i)
      origin[i] = mh.find(analytic.classes[i].from_stratum, analytic.classes[i].to_stratum)->weight;
  }

  const Objective f = [&](std::span<const double> w) { return slem_for_class_weights(spec, w); };
  NelderMeadOptions nm;
  nm.max_iterations = options.budget;

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vector> starts{origin};
  for (int r = 0; r < options.restarts; ++r) {
    Vector x = origin;
    for (double& v : x) v *= 1.0 + options.perturbation * normal(rng);
    starts.push_back(std::move(x));
  }

  out.best_weights = origin;
  out.best_slem = f(origin);
  for (const Vector& x0 : starts) {
    NelderMeadResult run = nelder_mead(f, x0, nm);
    out.iterations += run.iterations;
    for (int refresh = 0; refresh < kMaxRefreshes; ++refresh) {
      NelderMeadResult again = nelder_mead(f, run.x, nm);
      out.iterations += again.iterations;
      const bool gained = again.value < run.value - kRefreshGain;
      if (again.value < run.value) run = std::move(again);
      if (!gained) break;
    }
    if (run.value < out.best_slem) {
      out.best_slem = run.value;
      out.best_weights = run.x;
    }
  }
  out.improvement = out.analytic_slem - out.best_slem;
  return out;
}

}  // namespace petal
