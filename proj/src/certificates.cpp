#include "petal/certificates.hpp"

#include <algorithm>
#include <cmath>

#include "petal/errors.hpp"
#include "petal/jacobi.hpp"
#include "petal/spectral.hpp"

namespace petal {

namespace {

constexpr double kEigenMatchTol = 1e-9;

// Solve G x = b for symmetric positive definite G (Cholesky).
Vector solve_spd(const Matrix& g, const Vector& b) {
  const std::size_t n = g.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = g(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 0.0) throw NumericError("basis Gram matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i);
  }
  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

Vector coordinates(const std::vector<Vector>& basis, const Vector& z) {
  Vector rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], z);
  return solve_spd(gram(basis), rhs);
}

// Deterministic sign: largest-magnitude entry positive.
Vector canonical_sign(Vector v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
  if (!v.empty() && v[best] < 0)
    for (double& x : v) x = -x;
  return v;
}

struct Eigenpair {
  double value;
  Vector vector;
};

// Eigenpairs of the dual side with the Perron direction removed.
std::vector<Eigenpair> dual_pairs(const QuotientPair& pair) {
  const auto dec = eig_symmetric(pair.spec.core == CoreKind::CompleteCore ? pair.w2 : pair.w1);
  std::vector<Eigenpair> out;
  for (std::size_t j = 0; j < dec.values.size(); ++j) {
    Vector u = dec.vectors.column(j);
    if (pair.spec.core == CoreKind::SingleHub && std::abs(dot(u, pair.perron)) > 0.5) continue;
    out.push_back({dec.values[j], std::move(u)});
  }
  return out;
}

DualCertificate assemble(const QuotientPair& pair, double s, double lam_plus, Vector u1, double lam_minus,
                         Vector u2) {
  DualCertificate c;
  c.s = s;
  c.primal_eigenvalue = lam_plus;
  c.dual_eigenvalue = lam_minus;

  // p^2 (1 - lam_plus) = q^2 (1 - lam_minus) and p^2 + q^2 = 1.
  const double denom = 2.0 - lam_plus - lam_minus;
  const double p2 = denom > 0.0 ? std::clamp((1.0 - lam_minus) / denom, 0.0, 1.0) : 0.5;
  const double q2 = 1.0 - p2;
  c.z1 = scaled(canonical_sign(std::move(u1)), std::sqrt(p2));
  c.z2 = scaled(canonical_sign(std::move(u2)), std::sqrt(q2));

  c.a = coordinates(pair.primal_basis, c.z1);
  c.a_prime = coordinates(pair.dual_basis, c.z2);

  const std::size_t m1 = pair.w2.rows();
  const Matrix primal_op = Matrix::identity(m1) * s - pair.w2;
  const Matrix dual_op = pair.dual_operator();
  const Matrix dual_shifted = dual_op + Matrix::identity(dual_op.rows()) * s;
  c.residual_primal = norm2(primal_op * c.z1);
  c.residual_dual = norm2(dual_shifted * c.z2);
  const double n1 = dot(c.z1, c.z1);
  const double n2 = dot(c.z2, c.z2);
  c.gap = std::abs(n1 - n2 - s);
  c.normalization = std::abs(n1 + n2 - 1.0);
  c.orthogonality = pair.spec.core == CoreKind::SingleHub ? std::abs(dot(pair.perron, c.z2)) : 0.0;
  for (std::size_t i = 0; i < pair.primal_basis.size(); ++i) {
    const double lhs = dot(pair.primal_basis[i], c.z1);
    const double rhs = dot(pair.dual_basis[i], c.z2);
    c.class_balance = std::max(c.class_balance, std::abs(lhs * lhs - rhs * rhs));
  }
  return c;
}

}  // namespace

Matrix gram(const std::vector<Vector>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = dot(basis[i], basis[j]);
  return g;
}

DualCertificate build_certificate(const QuotientPair& pair, double s) {
  const auto primal = eig_symmetric(pair.w2);
  std::size_t ip = 0;
  for (std::size_t j = 1; j < primal.values.size(); ++j)
    if (std::abs(primal.values[j] - s) < std::abs(primal.values[ip] - s)) ip = j;
  if (primal.values.empty() || std::abs(primal.values[ip] - s) > kEigenMatchTol)
    throw NoSuchEigenvalue("s is not an eigenvalue of the primal quotient");

  const auto dual = dual_pairs(pair);
  const Eigenpair* best = nullptr;
  for (const auto& e : dual)
    if (best == nullptr || std::abs(e.value + s) < std::abs(best->value + s)) best = &e;
  if (best == nullptr || std::abs(best->value + s) > kEigenMatchTol)
    throw NoSuchEigenvalue("-s is not an eigenvalue of the dual quotient");

  return assemble(pair, s, primal.values[ip], primal.vectors.column(ip), best->value, best->vector);
}

DualCertificate certify(const QuotientPair& pair) {
  const auto primal = eig_symmetric(pair.w2);
  const auto dual = dual_pairs(pair);
  const auto lowest = std::min_element(dual.begin(), dual.end(),
                                       [](const Eigenpair& x, const Eigenpair& y) { return x.value < y.value; });
  const std::size_t top = primal.values.size() - 1;
  return assemble(pair, quotient_slem_value(pair), primal.values[top], primal.vectors.column(top), lowest->value,
                  lowest->vector);
}

SlacknessReport slackness_check(const DualCertificate& cert, double tolerance) {
  SlacknessReport r;
  r.tolerance = tolerance;
  r.residual_primal = cert.residual_primal;
  r.residual_dual = cert.residual_dual;
  r.gap = cert.gap;
  r.orthogonality = cert.orthogonality;
  r.class_balance = cert.class_balance;
  r.pass = r.residual_primal <= tolerance && r.residual_dual <= tolerance && r.gap <= tolerance &&
           r.orthogonality <= tolerance && r.class_balance <= tolerance;
  return r;
}

}  // namespace petal
