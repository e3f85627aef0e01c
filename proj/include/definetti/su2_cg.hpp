#ifndef DEFINETTI_SU2_CG_HPP
#define DEFINETTI_SU2_CG_HPP

#include <compare>
#include <string>
#include <vector>

#include "definetti/exact.hpp"
#include "definetti/report.hpp"
#include "definetti/weights.hpp"

namespace definetti {

/// Half-integer angular momentum stored as twice its value.
class TwoJ {
 public:
  constexpr TwoJ() = default;
  static constexpr TwoJ doubled(int value) { return TwoJ(value); }
  static constexpr TwoJ integer(int j) { return TwoJ(2 * j); }
  /// Accepts "3", "1/2", "2.5"; throws std::invalid_argument otherwise.
  static TwoJ parse(const std::string& text);

  constexpr int twice() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }
  double value() const { return doubled_ / 2.0; }
  std::string to_string() const;

  constexpr TwoJ operator-() const { return TwoJ(-doubled_); }
  constexpr TwoJ operator+(TwoJ o) const { return TwoJ(doubled_ + o.doubled_); }
  constexpr TwoJ operator-(TwoJ o) const { return TwoJ(doubled_ - o.doubled_); }
  friend constexpr bool operator==(TwoJ, TwoJ) = default;
  friend constexpr auto operator<=>(TwoJ, TwoJ) = default;

 private:
  constexpr explicit TwoJ(int d) : doubled_(d) {}
  int doubled_ = 0;
};

namespace su2 {

/// |j1 - j2| <= j <= j1 + j2 and j1 + j2 + j integral.
bool triangle(TwoJ j1, TwoJ j2, TwoJ j);

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> in the Condon-Shortley
/// convention, from Racah's closed form.
///
/// Returns exact zero whenever a selection rule fails (m != m1 + m2, the
/// triangle rule, |m| > j). Throws std::invalid_argument for a negative j-type
/// value or an m whose parity does not match its j.
ExactReal cg(TwoJ j1, TwoJ m1, TwoJ j2, TwoJ m2, TwoJ j, TwoJ m);

/// delta_{|j2 m2>}(W^r) for R_(2j) in R_(2j1) (x) R_(2j2):
///   (2j2+1)/(2j+1) * sum_{m1} |<j1 m1 j2 m2 | j (m1+m2)>|^2
/// with m1 from j1-r to j1 (down) or -j1 to -j1+r (up). Exact rational.
DeltaReport delta_su2(TwoJ j1, TwoJ j2, TwoJ j, TwoJ m2, long r, Direction direction);

/// Same quantity for every r in [0, r_max], sharing the coefficient sums.
std::vector<BigRational> delta_su2_profile(TwoJ j1, TwoJ j2, TwoJ j, TwoJ m2, long r_max,
                                           Direction direction);

}  // namespace su2

}  // namespace definetti

#endif  // DEFINETTI_SU2_CG_HPP
