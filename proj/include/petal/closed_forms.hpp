#pragma once

#include <functional>
#include <vector>

#include "petal/weights.hpp"

namespace petal {

/// Roots of f in the open interval (lo, hi): sign changes on a uniform grid of
/// `points` interior samples, refined by bisection to `tol`.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               int points = 10000, double tol = 1e-12);

/// Left-hand side of the printed single-hub characteristic equation
/// (nk-2)(sin((m-1)t) + sin((m+1)t)) + 2nk sin(mt).
double hub_characteristic(int n, int m, int k, double theta);

/// Roots of hub_characteristic in (0, pi), ascending. Throws
/// DegenerateEquation when the function vanishes on the whole grid.
std::vector<double> hub_closed_form_roots(int n, int m, int k);

using Polynomial = std::vector<Rational>;  // ascending coefficients

/// f_0 = 1, f_1 = s/k, f_2 = (k+1)s^2/k - 1, f_i = 2s f_{i-1} - f_{i-2}.
Polynomial core_recursion_polynomial(int i, int k);

/// (2(k+1)s^2 - 1) f_{m-1}(s) - (k+1) s f_{m-2}(s), exact.
Polynomial core_characteristic_polynomial(int m, int k);

double evaluate(const Polynomial& p, double x);

struct CoreCharacteristic {
  Polynomial coefficients;
  std::vector<double> roots;  // in (0, 1), ascending
};

CoreCharacteristic core_closed_form_roots(int m, int k);

}  // namespace petal
