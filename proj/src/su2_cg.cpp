#include "definetti/su2_cg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace definetti {

TwoJ TwoJ::parse(const std::string& text) {
  const BigRational twice = 2 * parse_rational(text);
  if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) {
    throw std::invalid_argument("'" + text + "' is not a multiple of 1/2");
  }
  return TwoJ::doubled(static_cast<int>(twice.get_num().get_si()));
}

std::string TwoJ::to_string() const {
  if (is_integral()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

namespace su2 {

namespace {

const BigInt& fact(int twice_value) {
  // arguments arrive doubled and are always even here
  return factorial(static_cast<unsigned long>(twice_value / 2));
}

void require_j(TwoJ j, const char* name) {
  if (j.twice() < 0) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void require_m(TwoJ j, TwoJ m, const char* name) {
  if (std::abs(m.twice() % 2) != std::abs(j.twice() % 2)) {
    throw std::invalid_argument(std::string(name) + "=" + m.to_string() +
                                " has the wrong parity for j=" + j.to_string());
  }
}

BigRational delta_prefactor(TwoJ j2, TwoJ j) {
#ifdef DEFINETTI_MUTANT_DROP_CG_PREFACTOR
  (void)j2;
  (void)j;
  return BigRational(1);
#else
  BigRational f(j2.twice() + 1, j.twice() + 1);
  f.canonicalize();
  return f;
#endif
}

void validate_delta_args(TwoJ j1, TwoJ j2, TwoJ j, TwoJ m2, long r) {
  require_j(j1, "j1");
  require_j(j2, "j2");
  require_j(j, "j");
  if (!triangle(j1, j2, j)) {
    throw std::invalid_argument("(j1, j2, j) = (" + j1.to_string() + ", " + j2.to_string() +
                                ", " + j.to_string() + ") violates the triangle rule");
  }
  require_m(j2, m2, "m2");
  if (std::abs(m2.twice()) > j2.twice()) throw std::invalid_argument("|m2| > j2");
  if (r < 0) throw std::invalid_argument("r must be >= 0");
}

// |<j1 m1 j2 m2 | j m>|^2 for the k-th admissible m1 in the given direction.
BigRational squared_term(TwoJ j1, TwoJ j2, TwoJ j, TwoJ m2, long step, Direction direction) {
  const TwoJ m1 = direction == Direction::down
                      ? j1 - TwoJ::doubled(static_cast<int>(2 * step))
                      : -j1 + TwoJ::doubled(static_cast<int>(2 * step));
  return cg(j1, m1, j2, m2, j, m1 + m2).square();
}

}  // namespace

bool triangle(TwoJ j1, TwoJ j2, TwoJ j) {
  if (j1.twice() < 0 || j2.twice() < 0 || j.twice() < 0) return false;
  if ((j1.twice() + j2.twice() + j.twice()) % 2 != 0) return false;
  return j.twice() >= std::abs(j1.twice() - j2.twice()) && j.twice() <= j1.twice() + j2.twice();
}

ExactReal cg(TwoJ j1, TwoJ m1, TwoJ j2, TwoJ m2, TwoJ j, TwoJ m) {
  require_j(j1, "j1");
  require_j(j2, "j2");
  require_j(j, "j");
  require_m(j1, m1, "m1");
  require_m(j2, m2, "m2");
  require_m(j, m, "m");

  if (m != m1 + m2 || !triangle(j1, j2, j)) return {};
  if (std::abs(m1.twice()) > j1.twice() || std::abs(m2.twice()) > j2.twice() ||
      std::abs(m.twice()) > j.twice()) {
    return {};
  }

  const int J1 = j1.twice();
  const int J2 = j2.twice();
  const int J = j.twice();
  const int M1 = m1.twice();
  const int M2 = m2.twice();
  const int M = m.twice();

  BigRational prefactor(BigInt(J + 1) * fact(J1 + J2 - J) * fact(J1 - J2 + J) * fact(-J1 + J2 + J),
                        fact(J1 + J2 + J + 2));
  prefactor.canonicalize();
  prefactor *= fact(J + M) * fact(J - M) * fact(J1 - M1) * fact(J1 + M1) * fact(J2 - M2) *
               fact(J2 + M2);
  prefactor.canonicalize();

  // Racah sum over k; all factorial arguments below are halves of even ints.
  const int a = (J1 + J2 - J) / 2;
  const int b = (J1 - M1) / 2;
  const int c = (J2 + M2) / 2;
  const int d = (J - J2 + M1) / 2;
  const int e = (J - J1 - M2) / 2;
  const int k_min = std::max({0, -d, -e});
  const int k_max = std::min({a, b, c});

  BigRational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    const BigInt den = factorial(static_cast<unsigned long>(k)) *
                       factorial(static_cast<unsigned long>(a - k)) *
                       factorial(static_cast<unsigned long>(b - k)) *
                       factorial(static_cast<unsigned long>(c - k)) *
                       factorial(static_cast<unsigned long>(d + k)) *
                       factorial(static_cast<unsigned long>(e + k));
    BigRational term(BigInt(k % 2 == 0 ? 1 : -1), den);
    term.canonicalize();
    sum += term;
  }
  if (sgn(sum) == 0) return {};
  return ExactReal::signed_sqrt(sgn(sum), prefactor * sum * sum);
}

DeltaReport delta_su2(TwoJ j1, TwoJ j2, TwoJ j, TwoJ m2, long r, Direction direction) {
  validate_delta_args(j1, j2, j, m2, r);
  const long steps = std::min<long>(r, j1.twice());
  BigRational sum = 0;
  for (long t = 0; t <= steps; ++t) sum += squared_term(j1, j2, j, m2, t, direction);

  const std::string psi = "|j2 m2> = |" + j2.to_string() + " " + m2.to_string() + ">";
  const std::string id =
      direction == Direction::down ? "su2-clebsch-gordan-down" : "su2-clebsch-gordan-up";
  return DeltaReport::from_exact(delta_prefactor(j2, j) * sum, id, psi);
}

std::vector<BigRational> delta_su2_profile(TwoJ j1, TwoJ j2, TwoJ j, TwoJ m2, long r_max,
                                           Direction direction) {
  validate_delta_args(j1, j2, j, m2, r_max);
  const BigRational prefactor = delta_prefactor(j2, j);
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(r_max + 1));
  BigRational sum = 0;
  for (long r = 0; r <= r_max; ++r) {
    if (r <= j1.twice()) sum += squared_term(j1, j2, j, m2, r, direction);
    BigRational value = prefactor * sum;
    value.canonicalize();
    out.push_back(std::move(value));
  }
  return out;
}

}  // namespace su2

}  // namespace definetti
