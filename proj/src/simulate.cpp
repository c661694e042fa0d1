#include "petal/simulate.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "petal/errors.hpp"

namespace petal {

namespace {

double deviation(const Vector& x, double mean) {
  double s = 0.0;
  for (double v : x) s += (v - mean) * (v - mean);
  return std::sqrt(s);
}

}  // namespace

Trajectory run_consensus(const WeightMatrix& w, const Vector& x0, int steps, std::string scheme,
                         std::string initial) {
  if (static_cast<int>(x0.size()) != w.dimension())
    throw SpecError("initial state has " + std::to_string(x0.size()) + " entries, matrix has dimension " +
                    std::to_string(w.dimension()));
  if (steps < 1) throw SpecError("step count must be at least 1");

  const double mass = std::accumulate(x0.begin(), x0.end(), 0.0);
  const double mean = mass / static_cast<double>(x0.size());
  const double d0 = deviation(x0, mean);
  if (d0 <= 1e-14 * norm2(x0)) throw SpecError("initial state is already at consensus");
  const double allowed = 1e-10 * norm2(x0);

  Trajectory traj;
  traj.steps = steps;
  traj.scheme = std::move(scheme);
  traj.initial = std::move(initial);
  traj.distances.reserve(static_cast<std::size_t>(steps) + 1);
  traj.distances.push_back(1.0);

  // The raw state checks mass conservation. Distances come from the deviation
  // x(t) - mean, re-centred and renormalized every step so that rounding stays
  // relative to its own size instead of to the mean.
  Vector x = x0, y(x0.size());
  Vector e(x0.size()), f(x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i) e[i] = (x0[i] - mean) / d0;
  double d = 1.0;
  for (int t = 1; t <= steps; ++t) {
    w.multiply(x, y);
    std::swap(x, y);
    const double drift = std::abs(std::accumulate(x.begin(), x.end(), 0.0) - mass);
    traj.max_mass_drift = std::max(traj.max_mass_drift, drift);
    if (drift > allowed) throw NumericError("sum of node values drifted by " + std::to_string(drift) + " at step " + std::to_string(t));

    if (d > 0.0) {
      w.multiply(e, f);
      const double shift = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
      for (double& v : f) v -= shift;
      const double c = norm2(f);
      // A contraction below the floor in one step means the deviation is rounding noise.
      if (c <= kTrajectoryFloor) {
        d = 0.0;
      } else {
        d *= c;
        for (std::size_t i = 0; i < f.size(); ++i) e[i] = f[i] / c;
      }
    }
    traj.distances.push_back(d);
  }
  return traj;
}

double asymptotic_rate(const Trajectory& traj, int window) {
  if (window < 1 || window > traj.steps) throw SpecError("window must lie in [1, steps]");
  const std::size_t end = traj.distances.size() - 1;
  const std::size_t start = end - static_cast<std::size_t>(window);
  for (std::size_t t = start + 1; t <= end; ++t)
    if (traj.distances[t] <= kTrajectoryFloor * traj.distances[t - 1] || traj.distances[t] < kSmallestDistance)
      throw Underflow("trajectory collapsed to rounding noise at step " + std::to_string(t));
  return std::pow(traj.distances[end] / traj.distances[start], 1.0 / window);
}

Vector impulse_initial_state(const Graph& graph) {
  Vector x(static_cast<std::size_t>(graph.node_count), 0.0);
  int last = graph.node_count - 1;
  for (int i = 0; i < graph.node_count; ++i)
    if (graph.leaf_of[i] == 0) last = i;
  x[static_cast<std::size_t>(last)] = 1.0;
  return x;
}

Vector random_initial_state(int dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector x(static_cast<std::size_t>(dimension));
  for (double& v : x) v = normal(rng);
  return x;
}

}  // namespace petal
