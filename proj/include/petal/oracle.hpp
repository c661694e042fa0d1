#pragma once

#include <cstdint>
#include <optional>

#include "petal/matrix.hpp"
#include "petal/topology.hpp"

namespace petal {

enum class OracleStart { Analytic, MetropolisHastings };

struct OracleOptions {
  int budget = 2000;  // Nelder-Mead iterations per run
  int restarts = 8;   // perturbed starting points besides the main one
  std::uint64_t seed = 42;
  double perturbation = 0.1;  // relative spread of perturbed starts
  OracleStart start = OracleStart::Analytic;
};

struct OracleResult {
  Vector best_weights;
  double best_slem = 0.0;
  Vector analytic_weights;
  double analytic_slem = 0.0;
  int iterations = 0;
  double improvement = 0.0;  // analytic_slem - best_slem
};

/// Derivative-free search over class-constant weights minimizing the quotient
/// SLEM. Each run restarts from its own best point until it stops improving.
OracleResult optimality_oracle(const PetalSpec& spec, const OracleOptions& options = {});

/// Quotient SLEM for explicit class weights (class order as in optimal_weights).
double slem_for_class_weights(const PetalSpec& spec, std::span<const double> weights);

}  // namespace petal
