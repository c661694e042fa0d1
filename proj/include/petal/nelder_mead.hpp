#pragma once

#include <functional>
#include <span>

#include "petal/matrix.hpp"

namespace petal {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double tolerance = 1e-10;  // simplex diameter
  int max_iterations = 2000;
  double initial_step = 0.05;  // relative to each coordinate
};

struct NelderMeadResult {
  Vector x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

NelderMeadResult nelder_mead(const Objective& f, Vector start, const NelderMeadOptions& options = {});

}  // namespace petal
