#pragma once

#include "petal/matrix.hpp"

namespace petal {

/// Eigenpairs of a dense symmetric matrix, eigenvalues ascending.
/// Column j of `vectors` belongs to values[j]; empty when not requested.
struct EigenDecomposition {
  Vector values;
  Matrix vectors;
};

/// Cyclic Jacobi rotations. Throws SpecError when |A - A^T| exceeds 1e-12.
EigenDecomposition eig_symmetric(const Matrix& a, bool want_vectors = true);

inline Vector eigenvalues(const Matrix& a) { return eig_symmetric(a, false).values; }

}  // namespace petal
