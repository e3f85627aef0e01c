#include "definetti/report.hpp"

#include <algorithm>
#include <cmath>

namespace definetti {

namespace {

void fill_bounds(DeltaReport& report) {
  const double deficit = std::max(0.0, 1.0 - report.delta);
  report.bound_sqrt = 2.0 * std::sqrt(deficit);
  report.bound_linear = 2.0 * deficit;
}

}  // namespace

DeltaReport DeltaReport::from_exact(BigRational value, std::string formula_id,
                                    std::string psi_label) {
  value.canonicalize();
  DeltaReport report;
  report.delta = value.get_d();
  report.exact = std::move(value);
  report.formula_id = std::move(formula_id);
  report.psi_label = std::move(psi_label);
  fill_bounds(report);
  if (report.exact && *report.exact != 0 && *report.exact != 1) {
    // get_d truncates; recompute the deficit from the exact value
    const BigRational deficit = 1 - *report.exact;
    report.bound_linear = 2.0 * deficit.get_d();
    report.bound_sqrt = 2.0 * std::sqrt(std::max(0.0, deficit.get_d()));
  }
  return report;
}

DeltaReport DeltaReport::from_double(double value, std::string formula_id, std::string psi_label) {
  DeltaReport report;
  report.delta = value;
  report.formula_id = std::move(formula_id);
  report.psi_label = std::move(psi_label);
  fill_bounds(report);
  return report;
}

DeltaReport DeltaReport::from_double(double value, double deficit, std::string formula_id,
                                     std::string psi_label) {
  DeltaReport report = from_double(value, std::move(formula_id), std::move(psi_label));
  deficit = std::max(0.0, deficit);
  report.bound_sqrt = 2.0 * std::sqrt(deficit);
  report.bound_linear = 2.0 * deficit;
  return report;
}

}  // namespace definetti
