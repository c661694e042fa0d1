#include "petal/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "petal/errors.hpp"

namespace petal {

namespace {

Polynomial trim(Polynomial p) {
  while (p.size() > 1 && p.back().numerator() == 0) p.pop_back();
  return p;
}

Polynomial add(const Polynomial& a, const Polynomial& b, Rational scale_b = 1) {
  Polynomial out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += scale_b * b[i];
  return trim(out);
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int points,
                               double tol) {
  std::vector<double> roots;
  bool have_prev = false;
  double x_prev = lo;
  double f_prev = 0.0;
  for (int i = 1; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / points;
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
      have_prev = false;
      continue;
    }
    if (have_prev && (fx < 0) != (f_prev < 0)) roots.push_back(bisect(f, x_prev, x, f_prev, tol));
    have_prev = true;
    x_prev = x;
    f_prev = fx;
  }
  // The open interval excludes roots that converge onto an endpoint.
  std::erase_if(roots, [&](double r) { return r - lo <= tol || hi - r <= tol; });
  return roots;
}

double hub_characteristic(int n, int m, int k, double theta) {
  const double nk = static_cast<double>(n) * k;
  return (nk - 2.0) * (std::sin((m - 1) * theta) + std::sin((m + 1) * theta)) + 2.0 * nk * std::sin(m * theta);
}

std::vector<double> hub_closed_form_roots(int n, int m, int k) {
  if (n < 2 || m < 2 || k < 1) throw SpecError("closed form needs n >= 2, m >= 2, k >= 1");
  constexpr int kPoints = 10000;
  const double scale = 2.0 * std::abs(static_cast<double>(n) * k - 2.0) + 2.0 * n * k;
  bool all_zero = true;
  for (int i = 1; i < kPoints && all_zero; ++i) {
    const double t = std::numbers::pi * i / kPoints;
    all_zero = std::abs(hub_characteristic(n, m, k, t)) <= 1e-12 * scale;
  }
  if (all_zero) throw DegenerateEquation("characteristic equation vanishes identically");
  return scan_roots([&](double t) { return hub_characteristic(n, m, k, t); }, 0.0, std::numbers::pi, kPoints);
}

Polynomial core_recursion_polynomial(int i, int k) {
  if (k < 1) throw SpecError("k must be >= 1");
  if (i < 0) throw SpecError("polynomial index must be >= 0");
  const Polynomial f0{Rational(1)};
  const Polynomial f1{Rational(0), Rational(1, k)};
  const Polynomial f2{Rational(-1), Rational(0), Rational(k + 1, k)};
  if (i == 0) return f0;
  if (i == 1) return f1;
  if (i == 2) return f2;
  const Polynomial two_s{Rational(0), Rational(2)};
  Polynomial prev = f1;
  Polynomial cur = f2;
  for (int j = 3; j <= i; ++j) {
    Polynomial next = add(multiply(two_s, cur), prev, Rational(-1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial core_characteristic_polynomial(int m, int k) {
  if (m < 2 || k < 1) throw SpecError("complete-core characteristic needs m >= 2, k >= 1");
  if (m > 40) throw SpecError("m too large for exact coefficients");
  const Polynomial lead{Rational(-1), Rational(0), Rational(2 * (k + 1))};
  const Polynomial kp1_s{Rational(0), Rational(k + 1)};
  return add(multiply(lead, core_recursion_polynomial(m - 1, k)), multiply(kp1_s, core_recursion_polynomial(m - 2, k)), Rational(-1));
}

double evaluate(const Polynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + static_cast<double>(it->numerator()) / static_cast<double>(it->denominator());
  return acc;
}

CoreCharacteristic core_closed_form_roots(int m, int k) {
  CoreCharacteristic out;
  out.coefficients = core_characteristic_polynomial(m, k);
  out.roots = scan_roots([&](double s) { return evaluate(out.coefficients, s); }, 0.0, 1.0);
  return out;
}

}  // namespace petal
