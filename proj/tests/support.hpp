#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "petal/matrix.hpp"
#include "petal/topology.hpp"

namespace petal::test {

inline Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

// Reference spectrum from Eigen, ascending.
inline std::vector<double> reference_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a), Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = a.size() == b.size() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline PetalSpec hub(int n, int m, int k) { return {CoreKind::SingleHub, n, PathBundle{m, k}}; }
inline PetalSpec core(int n, int m, int k) { return {CoreKind::CompleteCore, n, PathBundle{m, k}}; }

// A mix of every leaf kind, small enough for dense full-graph checks.
inline std::vector<PetalSpec> assorted_specs() {
  std::vector<PetalSpec> out;
  for (auto c : {CoreKind::SingleHub, CoreKind::CompleteCore}) {
    for (int n : {2, 3, 4})
      for (int m : {2, 3, 4})
        for (int k : {1, 2, 3}) out.push_back({c, n, PathBundle{m, k}});
    out.push_back({c, 2, SymmetricG{2, 2}});
    out.push_back({c, 3, SymmetricG{1, 3}});
    out.push_back({c, 2, SymmetricG{3, 2}});
    out.push_back({c, 2, AsymmetricG{{2, 3}, {3, 2}}});
    out.push_back({c, 3, AsymmetricG{{2, 2, 2}, {2, 4}}});
    out.push_back({c, 2, AsymmetricG{{4}, {2, 2}}});
    out.push_back({c, 3, Composite{{PathBundle{2, 2}, PathBundle{2, 2}}}});
    out.push_back({c, 3, Composite{{SymmetricG{1, 2}, PathBundle{3, 1}}}});
    out.push_back({c, 2, Composite{{PathBundle{3, 1}, AsymmetricG{{3}, {3}}, PathBundle{2, 2}}}});
  }
  return out;
}

}  // namespace petal::test
