#pragma once

#include <optional>
#include <string>

#include "petal/matrix.hpp"
#include "petal/quotient.hpp"
#include "petal/weights.hpp"

namespace petal {

enum class SlemSource { FullGraph, Quotient, HubClosedForm, CoreClosedForm };

std::string to_string(SlemSource s);

struct SpectralReport {
  std::string spec;  // human-readable description, empty for bare matrices
  double slem = 0.0;
  double theta = 0.0;  // arccos(slem)
  SlemSource source = SlemSource::FullGraph;
  Vector spectrum;      // full spectrum (FullGraph only)
  Vector spectrum_w1;
  Vector spectrum_w2;
  Vector spectrum_w3;
  std::optional<double> convergence_factor;
};

/// SLEM from the dense spectrum of W. Throws MultipleUnitEigenvalues when an
/// eigenvalue other than the Perron one lies within 1e-9 of 1.
SpectralReport slem_full(const WeightMatrix& w);

/// SLEM over spec(W1) minus its Perron eigenvalue, spec(W2) and spec(W3).
SpectralReport slem_quotient(const QuotientPair& pair);

/// Same value as slem_quotient(pair).slem without building the report.
double quotient_slem_value(const QuotientPair& pair);

/// Spectral norm of W - 11^T/n, from the largest eigenvalue of A^T A.
double convergence_factor(const WeightMatrix& w);

}  // namespace petal
