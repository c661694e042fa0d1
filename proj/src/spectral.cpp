#include "petal/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "petal/errors.hpp"
#include "petal/jacobi.hpp"

namespace petal {

namespace {

constexpr double kUnitTol = 1e-9;

std::size_t index_nearest_one(const Vector& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (std::abs(values[i] - 1.0) < std::abs(values[best] - 1.0)) best = i;
  return best;
}

double max_modulus(const Vector& values, std::size_t skip = static_cast<std::size_t>(-1)) {
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != skip) worst = std::max(worst, std::abs(values[i]));
  return worst;
}

double safe_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

}  // namespace

std::string to_string(SlemSource s) {
  switch (s) {
    case SlemSource::FullGraph:
      return "full";
    case SlemSource::Quotient:
      return "quotient";
    case SlemSource::HubClosedForm:
      return "closed-form-hub";
    case SlemSource::CoreClosedForm:
      return "closed-form-core";
  }
  return "full";
}

SpectralReport slem_full(const WeightMatrix& w) {
  SpectralReport r;
  r.source = SlemSource::FullGraph;
  r.spectrum = eigenvalues(w.to_dense());
  if (r.spectrum.size() <= 1) return r;
  const std::size_t perron = index_nearest_one(r.spectrum);
  for (std::size_t i = 0; i < r.spectrum.size(); ++i)
    if (i != perron && std::abs(r.spectrum[i] - 1.0) <= kUnitTol)
      throw MultipleUnitEigenvalues("eigenvalue 1 is not simple: the iteration does not reach consensus");
  r.slem = max_modulus(r.spectrum, perron);
  r.theta = safe_acos(r.slem);
  return r;
}

SpectralReport slem_quotient(const QuotientPair& pair) {
  SpectralReport r;
  r.spec = describe(pair.spec);
  r.source = SlemSource::Quotient;
  r.spectrum_w1 = eigenvalues(pair.w1);
  r.spectrum_w2 = eigenvalues(pair.w2);
  if (pair.w3) r.spectrum_w3 = eigenvalues(*pair.w3);
  r.slem = std::max({max_modulus(r.spectrum_w1, index_nearest_one(r.spectrum_w1)), max_modulus(r.spectrum_w2),
                     max_modulus(r.spectrum_w3)});
  r.theta = safe_acos(r.slem);
  return r;
}

double quotient_slem_value(const QuotientPair& pair) { return slem_quotient(pair).slem; }

double convergence_factor(const WeightMatrix& w) {
  const std::size_t n = static_cast<std::size_t>(w.dimension());
  Matrix a = w.to_dense();
  const double avg = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) -= avg;
  const Vector ev = eigenvalues(a.transpose() * a);
  return std::sqrt(std::max(0.0, ev.back()));
}

}  // namespace petal
