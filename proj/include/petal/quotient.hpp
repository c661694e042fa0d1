#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petal/matrix.hpp"
#include "petal/topology.hpp"
#include "petal/weights.hpp"

namespace petal {

enum class W3Source {
  None,
  PathInterior,    // tridiagonal block of path-differing modes inside a PathBundle leaf
  LeafComplement,  // one leaf compressed onto the complement of its level indicators
};

/// Stratified quotients of a petal weight matrix.
///
/// w1 acts on leaf-symmetric vectors (one coordinate per stratum, scaled by
/// the square root of the stratum size) and carries the unit Perron vector.
/// w2 acts on vectors that cancel across leaves. w3, when present, collects
/// the modes that vary inside a single leaf. Together their spectra cover the
/// spectrum of the full matrix.
///
/// Per class i, primal_basis[i] and dual_basis[i] are the rank-one directions
/// with w2 = I - sum w_i b_i b_i^T on the primal side. On the dual side the
/// operator is w1 - v v^T for a single hub and w2 for a complete core.
struct QuotientPair {
  PetalSpec spec;
  Matrix w1;
  Matrix w2;
  std::optional<Matrix> w3;
  W3Source w3_source = W3Source::None;
  Vector perron;
  Vector stratum_sizes;

  std::vector<std::string> labels;
  Vector class_weights;
  std::vector<Vector> primal_basis;
  std::vector<Vector> dual_basis;

  /// Matrix whose eigenvalue -s pairs with the dual vector z2.
  Matrix dual_operator() const;
};

/// Throws SpecError for assignments that are not constant on every edge class
/// or that leave a class without a weight.
QuotientPair quotient_matrices(const PetalSpec& spec, const WeightAssignment& weights);

/// Same as quotient_matrices with class weights given in class order.
QuotientPair quotient_matrices(const PetalSpec& spec, std::span<const double> class_weights);

/// Compression of one leaf of the full matrix onto the vectors that sum to
/// zero on every level of that leaf. Empty matrix when no such vectors exist.
Matrix leaf_complement_block(const PetalSpec& spec, const WeightAssignment& weights);

/// Symmetrized stratum quotient computed directly from an explicit matrix and
/// node partition: B_ab = sum_{i in a, j in b} W_ij / sqrt(|a| |b|).
Matrix stratum_quotient(const Matrix& w, const std::vector<std::vector<int>>& parts);

struct InterlacingReport {
  bool w2_in_w1 = false;
  double w2_violation = 0.0;
  std::optional<bool> w3_in_w2;  // absent when w3 is not a compression of w2
  double w3_violation = 0.0;

  bool ok() const { return w2_in_w1 && w3_in_w2.value_or(true); }
};

/// Cauchy interlacing of a compression: outer[j] <= inner[j] <= outer[j+d].
/// Both lists ascending; d = outer.size() - inner.size(). Returns the largest
/// violation (0 when the relation holds exactly).
double cauchy_violation(const Vector& outer, const Vector& inner);

/// Interlacing of a rank-one downdate: lower[j] <= upper[j] <= lower[j+1].
double downdate_violation(const Vector& lower, const Vector& upper);

InterlacingReport check_interlacing(const QuotientPair& pair, double tol = 1e-10);

}  // namespace petal
