#include "petal/audit.hpp"

#include <cmath>
#include <cstdio>

#include "petal/closed_forms.hpp"
#include "petal/errors.hpp"
#include "petal/quotient.hpp"
#include "petal/spectral.hpp"
#include "petal/weights.hpp"

namespace petal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "Match";
    case Verdict::Mismatch:
      return "Mismatch";
    case Verdict::NoRootInRange:
      return "NoRootInRange";
    case Verdict::Degenerate:
      return "Degenerate";
  }
  return "Mismatch";
}

int AuditReport::count(Verdict v) const {
  int c = 0;
  for (const auto& r : records) c += r.verdict == v;
  return c;
}

namespace {

AuditRecord audit_one(const PetalSpec& spec, double tolerance) {
  validate(spec);
  const auto* bundle = std::get_if<PathBundle>(&spec.leaf.kind);
  if (bundle == nullptr) throw SpecError("closed forms exist only for PathBundle leaves: " + describe(spec));

  AuditRecord rec;
  rec.spec = spec;
  rec.slem_numeric = slem_quotient(quotient_matrices(spec, optimal_weights(spec))).slem;

  if (spec.core == CoreKind::SingleHub) {
    try {
      for (double theta : hub_closed_form_roots(spec.n, bundle->m, bundle->k)) rec.candidates.push_back(std::cos(theta));
    } catch (const DegenerateEquation&) {
      rec.verdict = Verdict::Degenerate;
      return rec;
    }
  } else {
    rec.candidates = core_closed_form_roots(bundle->m, bundle->k).roots;
  }

  if (rec.candidates.empty()) {
    rec.verdict = Verdict::NoRootInRange;
    return rec;
  }
  double best = rec.candidates.front();
  for (double c : rec.candidates)
    if (std::abs(c - rec.slem_numeric) < std::abs(best - rec.slem_numeric)) best = c;
  rec.closed_form_value = best;
  rec.difference = std::abs(best - rec.slem_numeric);
  rec.verdict = *rec.difference <= tolerance ? Verdict::Match : Verdict::Mismatch;
  return rec;
}

std::string fixed(double x, int digits = 6) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

AuditReport audit_closed_forms(std::span<const PetalSpec> specs, double tolerance) {
  AuditReport report;
  report.tolerance = tolerance;
  for (const auto& spec : specs) report.records.push_back(audit_one(spec, tolerance));
  return report;
}

std::string to_markdown(const AuditReport& report) {
  std::string out = "| spec | numeric SLEM | closed form | difference | verdict |\n|---|---|---|---|---|\n";
  for (const auto& r : report.records) {
    out += "| " + describe(r.spec) + " | " + fixed(r.slem_numeric) + " | " +
           (r.closed_form_value ? fixed(*r.closed_form_value) : "-") + " | " +
           (r.difference ? fixed(*r.difference, 9) : "-") + " | " + to_string(r.verdict) + " |\n";
  }
  return out;
}

}  // namespace petal
