#ifndef DEFINETTI_REPORT_HPP
#define DEFINETTI_REPORT_HPP

#include <optional>
#include <string>

#include "definetti/exact.hpp"

namespace definetti {

/// A value of delta_psi(X) together with the two de Finetti error bounds it
/// implies: 2*sqrt(1 - delta) in general, 2*(1 - delta) when the target
/// representation has multiplicity one.
struct DeltaReport {
  /// Present whenever the inputs admit exact rational evaluation.
  std::optional<BigRational> exact;
  double delta = 0.0;
  double bound_sqrt = 0.0;
  double bound_linear = 0.0;
  /// Which closed form produced the value.
  std::string formula_id;
  /// The fixed vector psi in B the overlap was taken against.
  std::string psi_label;

  static DeltaReport from_exact(BigRational value, std::string formula_id, std::string psi_label);
  static DeltaReport from_double(double value, std::string formula_id, std::string psi_label);
  /// For callers that can evaluate 1 - delta without cancellation.
  static DeltaReport from_double(double value, double deficit, std::string formula_id,
                                 std::string psi_label);
};

}  // namespace definetti

#endif  // DEFINETTI_REPORT_HPP
