#include <doctest.h>

#include <cmath>
#include <numbers>

#include "petal/certificates.hpp"
#include "petal/errors.hpp"
#include "petal/jacobi.hpp"
#include "petal/spectral.hpp"
#include "support.hpp"

using namespace petal;
using petal::test::core;
using petal::test::hub;

namespace {

QuotientPair optimal_pair(const PetalSpec& spec) { return quotient_matrices(spec, optimal_weights(spec)); }

QuotientPair bumped_pair(const PetalSpec& spec, std::size_t cls, double delta) {
  auto cw = optimal_weights(spec).class_weights();
  cw[cls] += delta;
  return quotient_matrices(spec, cw);
}

}  // namespace

TEST_CASE("certificate for the 5-node path at cos(pi/5)") {
  const auto c = build_certificate(optimal_pair(hub(2, 2, 1)), std::cos(std::numbers::pi / 5));
  CHECK(c.residual_primal <= 1e-9);
  CHECK(c.residual_dual <= 1e-9);
  CHECK(c.gap <= 1e-9);
  CHECK(c.orthogonality <= 1e-9);
  CHECK(c.normalization <= 1e-10);
  CHECK(slackness_check(c).pass);
}

TEST_CASE("a value outside the spectrum has no certificate") {
  CHECK_THROWS_AS(build_certificate(optimal_pair(hub(2, 2, 1)), 0.5), NoSuchEigenvalue);
}

TEST_CASE("slackness passes at the optimum") {
  SUBCASE("hub n=2 m=2 k=2") {
    const auto pair = optimal_pair(hub(2, 2, 2));
    const auto c = build_certificate(pair, (1.0 + std::sqrt(2.0)) / 3.0);
    CHECK(slackness_check(c).pass);
  }
  SUBCASE("complete core n=2 m=2 k=1") {
    const auto c = build_certificate(optimal_pair(core(2, 2, 1)), std::sqrt(3.0) / 2.0);
    CHECK(slackness_check(c).pass);
    CHECK(c.orthogonality == 0.0);
  }
}

TEST_CASE("slackness fails after perturbing a weight") {
  const auto c = certify(bumped_pair(hub(2, 2, 2), 1, 0.05));
  const auto r = slackness_check(c);
  CHECK_FALSE(r.pass);
  CHECK(c.gap > 1e-3);
}

TEST_CASE("certify matches build_certificate at the optimum") {
  for (auto spec : {hub(2, 3, 2), core(3, 3, 3), hub(4, 3, 5)}) {
    const auto pair = optimal_pair(spec);
    const auto a = certify(pair);
    const auto b = build_certificate(pair, quotient_slem_value(pair));
    CHECK(std::abs(a.gap - b.gap) <= 1e-12);
    CHECK(slackness_check(a).pass);
    CHECK(slackness_check(b).pass);
  }
}

TEST_CASE("certificate invariants at the optimum") {
  for (const auto& spec : petal::test::assorted_specs()) {
    CAPTURE(describe(spec));
    const auto c = certify(optimal_pair(spec));
    CHECK(c.normalization <= 1e-10);
    CHECK(c.class_balance <= 1e-9);
    CHECK(slackness_check(c).pass);

    // a_i^2 / a_j^2 = a'_i^2 / a'_j^2
    for (std::size_t i = 0; i < c.a.size(); ++i)
      for (std::size_t j = 0; j < c.a.size(); ++j) {
        if (std::abs(c.a[j]) <= 1e-6 || std::abs(c.a_prime[j]) <= 1e-6) continue;
        const double lhs = c.a[i] * c.a[i] / (c.a[j] * c.a[j]);
        const double rhs = c.a_prime[i] * c.a_prime[i] / (c.a_prime[j] * c.a_prime[j]);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
      }
  }
}

TEST_CASE("single-path coordinates follow the sine law") {
  // a_{m-j} / a_m = sin((j+1) theta) / sin(theta) on the layer classes.
  for (auto c_kind : {CoreKind::SingleHub, CoreKind::CompleteCore})
    for (int n = 2; n <= 4; ++n)
      for (int m = 2; m <= 6; ++m) {
        const PetalSpec spec{c_kind, n, PathBundle{m, 1}};
        CAPTURE(describe(spec));
        const auto c = certify(optimal_pair(spec));
        const double theta = std::acos(c.s);
        const std::size_t last = c.a.size() - 1;
        for (int j = 0; j < m; ++j) {
          const double expect = std::sin((j + 1) * theta) / std::sin(theta);
          CHECK(std::abs(c.a[last - j] / c.a[last] - expect) <= 1e-8);
        }
      }
}

TEST_CASE("residuals do not depend on eigenvector sign or scale") {
  // The certificate normalises its eigenvectors; flipping the quotient's sign
  // conventions by relabelling cannot change the residuals.
  const auto pair = optimal_pair(hub(3, 3, 2));
  const auto c = certify(pair);
  QuotientPair flipped = pair;
  for (auto& b : flipped.primal_basis) b = scaled(b, -1.0);
  for (auto& b : flipped.dual_basis) b = scaled(b, -1.0);
  const auto d = certify(flipped);
  CHECK(std::abs(c.gap - d.gap) <= 1e-14);
  CHECK(std::abs(c.class_balance - d.class_balance) <= 1e-14);
  for (std::size_t i = 0; i < c.a.size(); ++i) CHECK(std::abs(std::abs(c.a[i]) - std::abs(d.a[i])) <= 1e-12);
}

TEST_CASE("Gram matrix") {
  const Matrix g = gram({{1.0, 0.0}, {1.0, 1.0}});
  CHECK(g(0, 0) == 1.0);
  CHECK(g(0, 1) == 1.0);
  CHECK(g(1, 1) == 2.0);
}

TEST_CASE("slackness report tolerance is configurable") {
  DualCertificate c;
  c.gap = 1e-6;
  CHECK_FALSE(slackness_check(c).pass);
  CHECK(slackness_check(c, 1e-5).pass);
}
