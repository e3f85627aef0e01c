#ifndef DEFINETTI_EXACT_HPP
#define DEFINETTI_EXACT_HPP

#include <gmpxx.h>

#include <string>

namespace definetti {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n! from a process-wide memoized table. Safe to call from several threads.
const BigInt& factorial(unsigned long n);

/// Binomial coefficient; zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

BigRational pow(const BigRational& base, unsigned long exponent);

/// True when q is the square of a rational; the root (nonnegative) is written
/// to *root when provided.
bool is_perfect_square(const BigRational& q, BigRational* root = nullptr);

/// Real number of the form sign * sqrt(radicand) with a rational radicand.
///
/// Clebsch-Gordan coefficients live in this set. Addition is exact only when
/// the two radicands are commensurable (their product is a rational square);
/// otherwise the sum leaves the representable set and operator+ throws.
class ExactReal {
 public:
  ExactReal() = default;

  static ExactReal signed_sqrt(int sign, BigRational radicand);
  static ExactReal sqrt(BigRational radicand) { return signed_sqrt(1, std::move(radicand)); }
  static ExactReal rational(const BigRational& value);

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  /// Value squared, i.e. the radicand (always exact).
  const BigRational& square() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  double to_double() const;
  std::string to_string() const;

  ExactReal operator-() const;
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b) { return a + (-b); }
  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

 private:
  int sign_ = 0;
  BigRational radicand_ = 0;
};

/// "p/q", or "p" when the denominator is one.
std::string render_rational(const BigRational& q);

/// Decimal rendering with `significant` digits, round-half-even, trailing
/// zeros removed. Plain positional notation for magnitudes in [1e-5, 1e12),
/// scientific otherwise. Deterministic for a given input.
std::string render_decimal(const BigRational& q, int significant = 12);
std::string render_decimal(double x, int significant = 12);

/// Parses "7", "-3/4", "0.125", "1.5e-3" exactly. Throws std::invalid_argument.
BigRational parse_rational(const std::string& text);

}  // namespace definetti

#endif  // DEFINETTI_EXACT_HPP
