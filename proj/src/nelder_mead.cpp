#include "petal/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace petal {

NelderMeadResult nelder_mead(const Objective& f, Vector start, const NelderMeadOptions& opt) {
  const std::size_t d = start.size();
  NelderMeadResult res;
  auto eval = [&](const Vector& x) {
    ++res.evaluations;
    const double v = f(x);
    return std::isnan(v) ? INFINITY : v;
  };

  std::vector<Vector> simplex{start};
  for (std::size_t i = 0; i < d; ++i) {
    Vector x = start;
    x[i] += x[i] != 0.0 ? opt.initial_step * std::abs(x[i]) : 0.00025;
    simplex.push_back(std::move(x));
  }
  std::vector<double> values(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  auto diameter = [&] {
    double worst = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      Vector diff = axpy(-1.0, simplex[0], simplex[i]);
      worst = std::max(worst, norm2(diff));
    }
    return worst;
  };

  while (res.iterations < opt.max_iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<Vector> s2;
      std::vector<double> v2;
      for (std::size_t i : order) {
        s2.push_back(simplex[i]);
        v2.push_back(values[i]);
      }
      simplex = std::move(s2);
      values = std::move(v2);
    }
    if (diameter() < opt.tolerance) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    Vector centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i][j] / static_cast<double>(d);
    const Vector& worst = simplex[d];
    auto along = [&](double t) {
      Vector x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = centroid[j] + t * (worst[j] - centroid[j]);
      return x;
    };

    const Vector xr = along(-opt.reflection);
    const double fr = eval(xr);
    if (fr < values[0]) {
      Vector xe = along(-opt.reflection * opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[d] = std::move(xe);
        values[d] = fe;
      } else {
        simplex[d] = xr;
        values[d] = fr;
      }
      continue;
    }
    if (fr < values[d - 1]) {
      simplex[d] = xr;
      values[d] = fr;
      continue;
    }
    if (fr < values[d]) {
      Vector xc = along(-opt.reflection * opt.contraction);
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex[d] = std::move(xc);
        values[d] = fc;
        continue;
      }
    } else {
      Vector xc = along(opt.contraction);
      const double fc = eval(xc);
      if (fc < values[d]) {
        simplex[d] = std::move(xc);
        values[d] = fc;
        continue;
      }
    }
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = 0; j < d; ++j) simplex[i][j] = simplex[0][j] + opt.shrink * (simplex[i][j] - simplex[0][j]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  res.x = simplex[best];
  res.value = values[best];
  return res;
}

}  // namespace petal
