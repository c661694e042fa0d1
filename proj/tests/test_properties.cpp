// Randomised checks over seeded specs and weights.

#include <doctest.h>

#include <random>

#include "petal/certificates.hpp"
#include "petal/jacobi.hpp"
#include "petal/spectral.hpp"
#include "support.hpp"

using namespace petal;

namespace {

PetalSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(1, 3);
  std::uniform_int_distribution<int> kind(0, 3);
  const CoreKind c = small(rng) == 1 ? CoreKind::CompleteCore : CoreKind::SingleHub;
  const int n = 1 + small(rng);
  switch (kind(rng)) {
    case 0:
      return {c, n, PathBundle{1 + small(rng), small(rng)}};
    case 1:
      return {c, n, SymmetricG{small(rng), 1 + small(rng) % 2}};
    case 2: {
      const int a = small(rng), b = small(rng);
      return {c, n, AsymmetricG{{a, b}, {a * b}}};
    }
    default:
      return {c, n, Composite{{PathBundle{2, small(rng)}, PathBundle{1 + small(rng), 1}}}};
  }
}

}  // namespace

TEST_CASE("random specs and random class weights") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> jitter(0.7, 1.3);
  for (int trial = 0; trial < 60; ++trial) {
    const PetalSpec spec = random_spec(rng);
    CAPTURE(describe(spec));
    auto cw = optimal_weights(spec).class_weights();
    for (double& w : cw) w *= jitter(rng);
    const auto assignment = optimal_weights(spec).with_class_weights(cw);
    const Graph g = build_graph(spec);
    const WeightMatrix w = assemble_matrix(g, assignment);
    CHECK(w.row_sum_error() <= 1e-14);

    const auto pair = quotient_matrices(spec, assignment);
    const double full = petal::test::reference_eigenvalues(w.to_dense()).size() > 1 ? slem_full(w).slem : 0.0;
    CHECK(std::abs(full - quotient_slem_value(pair)) <= 1e-9);
    CHECK(check_interlacing(pair).ok());

    // Random weights cannot beat the analytic ones.
    CHECK(quotient_slem_value(pair) >=
          quotient_slem_value(quotient_matrices(spec, optimal_weights(spec))) - 1e-12);
  }
}

TEST_CASE("certificate scaling is consistent for arbitrary weights") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> jitter(0.8, 1.2);
  for (int trial = 0; trial < 30; ++trial) {
    const PetalSpec spec = random_spec(rng);
    auto cw = optimal_weights(spec).class_weights();
    for (double& w : cw) w *= jitter(rng);
    const auto c = certify(quotient_matrices(spec, cw));
    CHECK(c.normalization <= 1e-12);
    CHECK(std::abs(dot(c.z1, c.z1) + dot(c.z2, c.z2) - 1.0) <= 1e-12);
  }
}
