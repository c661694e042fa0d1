#pragma once

#include <cstdint>
#include <string>

#include "petal/matrix.hpp"
#include "petal/topology.hpp"
#include "petal/weights.hpp"

namespace petal {

struct Trajectory {
  Vector distances;  // d(0..steps), d(t) = |x(t) - mean| / |x(0) - mean|, accurate in relative terms
  int steps = 0;
  std::string initial;  // description of x(0)
  std::string scheme;
  double max_mass_drift = 0.0;  // largest |1'x(t) - 1'x(0)| seen
};

/// Iterate x(t+1) = W x(t) for `steps` steps. Throws SpecError for a constant
/// or mis-sized x0 and NumericError if the sum of x drifts by more than
/// 1e-10 |x0|.
Trajectory run_consensus(const WeightMatrix& w, const Vector& x0, int steps, std::string scheme = "custom",
                         std::string initial = "custom");

/// A step whose contraction factor falls below this leaves only rounding noise;
/// the distance is recorded as 0 from then on.
inline constexpr double kTrajectoryFloor = 1e-13;
/// Distances below this are too close to the double range limit to trust.
inline constexpr double kSmallestDistance = 1e-280;

/// Geometric-mean ratio d(T)/d(T-1) over the last `window` steps. Throws
/// Underflow when the window contains a collapsed step.
double asymptotic_rate(const Trajectory& traj, int window);

/// Unit impulse at the terminal node of the first leaf.
Vector impulse_initial_state(const Graph& graph);

/// Standard normal entries from mt19937_64(seed).
Vector random_initial_state(int dimension, std::uint64_t seed);

}  // namespace petal
