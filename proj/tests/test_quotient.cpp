#include <doctest.h>

#include <cmath>

#include "petal/errors.hpp"
#include "petal/jacobi.hpp"
#include "petal/quotient.hpp"
#include "support.hpp"

using namespace petal;
using petal::test::core;
using petal::test::hub;

namespace {

double entry_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return (a - b).max_abs();
}

// Union of quotient spectra with the multiplicity each block has in the full matrix.
std::vector<double> quotient_spectrum_with_multiplicity(const QuotientPair& q, std::size_t nodes) {
  std::vector<double> all = eigenvalues(q.w1);
  const auto e2 = eigenvalues(q.w2);
  for (int c = 0; c < q.spec.n - 1; ++c) all.insert(all.end(), e2.begin(), e2.end());
  if (q.w3) {
    const auto e3 = eigenvalues(*q.w3);
    const std::size_t rest = nodes - all.size();
    REQUIRE(rest % e3.size() == 0);
    for (std::size_t c = 0; c < rest / e3.size(); ++c) all.insert(all.end(), e3.begin(), e3.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("hub n=2 m=2 k=2 quotients") {
  const auto q = quotient_matrices(hub(2, 2, 2), optimal_weights(hub(2, 2, 2)));
  const double r2 = std::sqrt(2.0);
  const Matrix w1{{-1.0 / 3, 2.0 / 3, 0.0}, {2.0 / 3, 1.0 / 3, r2 / 3}, {0.0, r2 / 3, 1.0 / 3}};
  const Matrix w2{{1.0 / 3, r2 / 3}, {r2 / 3, 1.0 / 3}};
  CHECK(entry_diff(q.w1, w1) <= 1e-15);
  CHECK(entry_diff(q.w2, w2) <= 1e-15);
  const double norm = std::sqrt(1.0 + 4.0 + 2.0);
  CHECK(std::abs(q.perron[0] - 1.0 / norm) <= 1e-15);
  CHECK(std::abs(q.perron[1] - 2.0 / norm) <= 1e-15);
  CHECK(std::abs(q.perron[2] - r2 / norm) <= 1e-15);
  CHECK(q.w3_source == W3Source::PathInterior);
}

TEST_CASE("complete core n=2 m=2 k=1 quotients") {
  const auto q = quotient_matrices(core(2, 2, 1), optimal_weights(core(2, 2, 1)));
  const Matrix w2{{-0.5, 0.5, 0.0}, {0.5, 0.0, 0.5}, {0.0, 0.5, 0.5}};
  CHECK(entry_diff(q.w2, w2) <= 1e-15);
  CHECK_FALSE(q.w3.has_value());
}

TEST_CASE("W1 matches the stratum quotient of the explicit matrix") {
  for (const auto& spec : petal::test::assorted_specs()) {
    CAPTURE(describe(spec));
    const Graph g = build_graph(spec);
    const auto w = optimal_weights(spec);
    const Matrix dense = assemble_matrix(g, w).to_dense();
    const auto q = quotient_matrices(spec, w);
    CHECK(entry_diff(q.w1, stratum_quotient(dense, strata(g))) <= 1e-12);
  }
}

TEST_CASE("quotient spectra cover the full spectrum") {
  for (const auto& spec : petal::test::assorted_specs()) {
    CAPTURE(describe(spec));
    const Graph g = build_graph(spec);
    const auto w = optimal_weights(spec);
    const auto full = petal::test::reference_eigenvalues(assemble_matrix(g, w).to_dense());
    const auto q = quotient_matrices(spec, w);
    CHECK(petal::test::max_abs_diff(quotient_spectrum_with_multiplicity(q, full.size()), full) <= 1e-9);
  }
}

TEST_CASE("quotient spectra also cover perturbed weights") {
  for (const auto& spec : {hub(3, 3, 2), core(2, 4, 3)}) {
    auto cw = optimal_weights(spec).class_weights();
    for (std::size_t i = 0; i < cw.size(); ++i) cw[i] *= 1.0 + 0.1 * static_cast<double>(i);
    const auto w = optimal_weights(spec).with_class_weights(cw);
    const auto full = petal::test::reference_eigenvalues(assemble_matrix(build_graph(spec), w).to_dense());
    const auto q = quotient_matrices(spec, w);
    CHECK(petal::test::max_abs_diff(quotient_spectrum_with_multiplicity(q, full.size()), full) <= 1e-9);
  }
}

TEST_CASE("Perron vector is a unit positive fixed point of W1") {
  for (const auto& spec : petal::test::assorted_specs()) {
    const auto q = quotient_matrices(spec, optimal_weights(spec));
    const Vector wv = q.w1 * q.perron;
    for (std::size_t i = 0; i < wv.size(); ++i) {
      CHECK(std::abs(wv[i] - q.perron[i]) <= 1e-12);
      CHECK(q.perron[i] > 0.0);
    }
    CHECK(std::abs(norm2(q.perron) - 1.0) <= 1e-14);
  }
}

TEST_CASE("path-bundle quotients are tridiagonal") {
  for (auto spec : {hub(3, 4, 3), core(2, 5, 2)}) {
    const auto q = quotient_matrices(spec, optimal_weights(spec));
    for (const Matrix* m : {&q.w1, &q.w2, &*q.w3})
      for (std::size_t i = 0; i < m->rows(); ++i)
        for (std::size_t j = 0; j < m->cols(); ++j)
          if (i > j + 1 || j > i + 1) CHECK((*m)(i, j) == 0.0);
  }
}

TEST_CASE("W2 is assembled from the primal basis") {
  for (const auto& spec : petal::test::assorted_specs()) {
    const auto q = quotient_matrices(spec, optimal_weights(spec));
    Matrix w2 = Matrix::identity(q.w2.rows());
    for (std::size_t i = 0; i < q.primal_basis.size(); ++i)
      w2 = w2 - outer(scaled(q.primal_basis[i], q.class_weights[i]), q.primal_basis[i]);
    CHECK(entry_diff(w2, q.w2) <= 1e-14);
  }
}

TEST_CASE("interlacing on assorted specs") {
  for (const auto& spec : petal::test::assorted_specs()) {
    CAPTURE(describe(spec));
    const auto r = check_interlacing(quotient_matrices(spec, optimal_weights(spec)));
    CHECK(r.ok());
    const bool interior = std::holds_alternative<PathBundle>(spec.leaf.kind) &&
                          std::get<PathBundle>(spec.leaf.kind).k >= 2;
    CHECK(r.w3_in_w2.has_value() == interior);
  }
}

TEST_CASE("interlacing helpers detect violations") {
  CHECK(cauchy_violation({0.0, 1.0, 2.0}, {0.5, 1.5}) == 0.0);
  CHECK(cauchy_violation({0.0, 1.0, 2.0}, {0.5, 2.5}) == doctest::Approx(0.5));
  CHECK(downdate_violation({0.0, 1.0}, {0.5, 1.5}) == 0.0);
  CHECK(downdate_violation({0.0, 1.0}, {1.5, 1.5}) == doctest::Approx(0.5));
}

TEST_CASE("non-class-constant assignments are rejected") {
  const auto spec = hub(2, 3, 2);
  const Graph g = build_graph(spec);
  WeightAssignment w;
  w.per_edge = edge_weights(g, optimal_weights(spec));
  w.per_edge[0] += 0.01;
  CHECK_THROWS_AS(quotient_matrices(spec, w), SpecError);

  auto missing = optimal_weights(spec);
  missing.classes.erase(missing.classes.begin());
  CHECK_THROWS_AS(quotient_matrices(spec, missing), SpecError);

  const Vector wrong_size{0.5};
  CHECK_THROWS_AS(quotient_matrices(spec, wrong_size), SpecError);
}

TEST_CASE("Metropolis-Hastings weights are class constant on petals") {
  const auto spec = core(3, 3, 2);
  const Graph g = build_graph(spec);
  const auto mh = metropolis_hastings_weights(g);
  const auto q = quotient_matrices(spec, mh);
  const auto full = petal::test::reference_eigenvalues(assemble_matrix(g, mh).to_dense());
  CHECK(petal::test::max_abs_diff(quotient_spectrum_with_multiplicity(q, full.size()), full) <= 1e-9);
}

TEST_CASE("leaf complement block") {
  // k parallel paths: the complement of a PathBundle leaf is the interior block, k-1 times.
  const auto spec = hub(2, 4, 3);
  const auto w = optimal_weights(spec);
  const auto block = leaf_complement_block(spec, w);
  const auto q = quotient_matrices(spec, w);
  auto expected = eigenvalues(*q.w3);
  const auto copy = expected;
  expected.insert(expected.end(), copy.begin(), copy.end());
  std::sort(expected.begin(), expected.end());
  CHECK(petal::test::max_abs_diff(eigenvalues(block), expected) <= 1e-12);
  CHECK(leaf_complement_block(hub(2, 3, 1), optimal_weights(hub(2, 3, 1))).rows() == 0);
}
