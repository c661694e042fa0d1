#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "petal/matrix.hpp"
#include "petal/topology.hpp"

namespace petal {

using Rational = boost::rational<std::int64_t>;

enum class Scheme { Optimal, MetropolisHastings, Custom };

std::string to_string(Scheme s);

/// All edges joining stratum `from_stratum` to `to_stratum` share one weight.
struct EdgeClass {
  int from_stratum = 0;
  int to_stratum = 0;
  std::string label;                 // "w0" for core edges, "wd" for depth-d edges
  double weight = 0.0;
  std::optional<Rational> exact;     // present when the weight is a known rational
};

struct WeightAssignment {
  Scheme scheme = Scheme::Custom;
  std::vector<EdgeClass> classes;
  std::vector<double> per_edge;      // aligned with Graph::edges; empty means expand from classes

  const EdgeClass* find(int from_stratum, int to_stratum) const;
  const EdgeClass* find(const std::string& label) const;
  Vector class_weights() const;

  /// Same classes, new values; result is a Custom assignment without per-edge data.
  WeightAssignment with_class_weights(std::span<const double> weights) const;
};

/// Label used for the class joining two strata.
std::string class_label(int from_stratum, int to_stratum);

/// Closed-form optimal weights. Hub edges 2/(2+n k1), core edges 1/n, every
/// other depth-d layer 1/(1+k_d).
WeightAssignment optimal_weights(const PetalSpec& spec);

/// W_ij = 1/(1 + max(deg i, deg j)) on every edge.
WeightAssignment metropolis_hastings_weights(const Graph& graph);

/// Per-edge weights of the assignment on this graph; throws SpecError when an
/// edge has no weight.
std::vector<double> edge_weights(const Graph& graph, const WeightAssignment& assignment);

/// Symmetric weight matrix with sparse off-diagonal storage.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(int dimension, std::span<const std::pair<int, int>> edges,
               std::span<const double> edge_weights);

  int dimension() const { return dimension_; }
  std::span<const double> diagonal() const { return diagonal_; }

  /// y = W x
  void multiply(std::span<const double> x, std::span<double> y) const;
  Matrix to_dense() const;
  /// Largest |sum_j W_ij - 1|.
  double row_sum_error() const;

  template <class F>
  void for_each_offdiagonal(int row, F&& f) const {
    for (std::size_t p = row_start_[row]; p < row_start_[row + 1]; ++p) f(col_[p], val_[p]);
  }

 private:
  int dimension_ = 0;
  Vector diagonal_;
  std::vector<std::size_t> row_start_;
  std::vector<int> col_;
  Vector val_;
};

WeightMatrix assemble_matrix(const Graph& graph, const WeightAssignment& assignment);

}  // namespace petal
