#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "petal/topology.hpp"

namespace petal {

enum class Verdict { Match, Mismatch, NoRootInRange, Degenerate };

std::string to_string(Verdict v);

struct AuditRecord {
  PetalSpec spec;
  double slem_numeric = 0.0;
  std::optional<double> closed_form_value;  // candidate nearest to slem_numeric
  std::optional<double> difference;
  Verdict verdict = Verdict::Mismatch;
  std::vector<double> candidates;  // every SLEM candidate the closed form produced
};

struct AuditReport {
  double tolerance = 1e-6;
  std::vector<AuditRecord> records;

  int count(Verdict v) const;
};

/// Compare the printed closed-form SLEM equations against quotient spectra.
/// Hub petals use the trigonometric equation (candidates cos(theta)); complete
/// cores use the polynomial recursion (candidates are its roots in (0,1)).
/// Only PathBundle leaves have closed forms; anything else throws SpecError.
AuditReport audit_closed_forms(std::span<const PetalSpec> specs, double tolerance = 1e-6);

std::string to_markdown(const AuditReport& report);

}  // namespace petal
