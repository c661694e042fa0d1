#include "petal/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "petal/errors.hpp"

namespace petal {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

double max_off_diagonal(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j)));
  return worst;
}

}  // namespace

EigenDecomposition eig_symmetric(const Matrix& input, bool want_vectors) {
  if (!input.square()) throw SpecError("eigensolver needs a square matrix");
  if (input.asymmetry() > kSymmetryTol) throw SpecError("eigensolver needs a symmetric matrix");

  const std::size_t n = input.rows();
  Matrix a = input;
  // Symmetrize exactly so that the rotations see a single upper triangle.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  Matrix v = want_vectors ? Matrix::identity(n) : Matrix();

  const double tol = kOffDiagonalTol * std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < kMaxSweeps && max_off_diagonal(a) >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const double vrp = v(r, p);
            const double vrq = v(r, q);
            v(r, p) = c * vrp - s * vrq;
            v(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
  if (max_off_diagonal(a) >= tol) throw NumericError("Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]);
  if (want_vectors) {
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
  }
  return out;
}

}  // namespace petal
