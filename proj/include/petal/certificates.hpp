#pragma once

#include "petal/matrix.hpp"
#include "petal/quotient.hpp"

namespace petal {

/// Rank-one dual point Z = [z1; z2][z1; z2]^T for the stratified SLEM
/// program, with the residuals of the optimality conditions.
struct DualCertificate {
  double s = 0.0;                  // candidate SLEM (primal objective)
  double primal_eigenvalue = 0.0;  // eigenvalue of w2 carried by z1
  double dual_eigenvalue = 0.0;    // eigenvalue of the dual operator carried by z2
  Vector z1;
  Vector z2;
  Vector a;        // z1 = sum a_i primal_basis[i]
  Vector a_prime;  // z2 = sum a'_i dual_basis[i]

  double residual_primal = 0.0;  // |(sI - W2) z1|
  double residual_dual = 0.0;    // |(sI + dual operator) z2|
  double gap = 0.0;              // |z1'z1 - z2'z2 - s|
  double orthogonality = 0.0;    // |v' z2| (single hub only)
  double class_balance = 0.0;    // max_i |(b_i' z1)^2 - (a_i' z2)^2|
  double normalization = 0.0;    // |z1'z1 + z2'z2 - 1|
};

/// Certificate at a given s: z1 spans the eigenvalue s of w2 and z2 the
/// eigenvalue -s of the dual operator, scaled so that z1'z1 + z2'z2 = 1 and
/// z1'z1 - z2'z2 = s. Throws NoSuchEigenvalue when either eigenvalue is
/// missing (tolerance 1e-9).
DualCertificate build_certificate(const QuotientPair& pair, double s);

/// Certificate for arbitrary class weights: z1 and z2 are the extreme
/// eigenvectors, s is the quotient SLEM, and the scaling satisfies the trace
/// constraint together with the weighted sum of the class constraints. At an
/// optimum this coincides with build_certificate at the SLEM; otherwise the
/// residuals measure how far the weights are from optimal.
DualCertificate certify(const QuotientPair& pair);

/// Gram matrix G_ij = b_i' b_j of a basis.
Matrix gram(const std::vector<Vector>& basis);

struct SlacknessReport {
  bool pass = false;
  double tolerance = 1e-8;
  double residual_primal = 0.0;
  double residual_dual = 0.0;
  double gap = 0.0;
  double orthogonality = 0.0;
  double class_balance = 0.0;
};

SlacknessReport slackness_check(const DualCertificate& cert, double tolerance = 1e-8);

}  // namespace petal
