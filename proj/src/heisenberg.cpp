#include "definetti/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace definetti {

template <class Scalar>
BasicHeisenbergTriple<Scalar>::BasicHeisenbergTriple(Scalar mu_, Scalar nu_, long sector_, long r_)
    : mu(std::move(mu_)), nu(std::move(nu_)), sector(sector_), r(r_) {
  if (!(mu > 0) || !(nu > 0)) throw std::invalid_argument("Heisenberg: mu and nu must be > 0");
  if (sector < 0) throw std::invalid_argument("Heisenberg: sector must be >= 0");
  if (r < 0) throw std::invalid_argument("Heisenberg: r must be >= 0");
}

template struct BasicHeisenbergTriple<double>;
template struct BasicHeisenbergTriple<BigRational>;

namespace heis {

namespace {

void require_positive(double mu, double nu) {
  if (!(mu > 0.0) || !(nu > 0.0) || !std::isfinite(mu) || !std::isfinite(nu)) {
    throw std::invalid_argument("mu and nu must be finite and > 0");
  }
}

void require_positive(const BigRational& mu, const BigRational& nu) {
  if (sgn(mu) <= 0 || sgn(nu) <= 0) throw std::invalid_argument("mu and nu must be > 0");
}

double log_binomial(long n, long k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

BigRational canonical(BigRational q) {
  q.canonicalize();
  return q;
}

std::string psi_label() { return "|0> in H_nu"; }

// sum_{n=0}^{count-1} binom(n+D, D) p^n with Neumaier compensation
double negative_binomial_partial_sum(long sector, long count, double p) {
  double sum = 0.0;
  double compensation = 0.0;
  double term = 1.0;
  for (long n = 0; n < count; ++n) {
    if (n > 0) term *= p * static_cast<double>(n + sector) / static_cast<double>(n);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

// 1 - delta equals P[Binomial(r+1, q) <= D]: a sum of positive terms, so it
// stays accurate when delta is close to one.
double deficit_binomial_tail(long sector, long r, double p, double q) {
  const long trials = r + 1;
  double sum = 0.0;
  for (long j = 0; j <= std::min(sector, trials); ++j) {
    sum += std::exp(log_binomial(trials, j) + static_cast<double>(j) * std::log(q) +
                    static_cast<double>(trials - j) * std::log(p));
  }
  return std::min(1.0, sum);
}

BigRational exact_delta(const ExactHeisenbergTriple& t) {
  if (t.r < t.sector) return 0;
  const BigRational total = t.mu + t.nu;
  const BigRational p = canonical(t.mu / total);
  const BigRational q = canonical(t.nu / total);
  BigRational sum = 0;
  BigRational p_power = 1;
  for (long n = 0; n <= t.r - t.sector; ++n) {
    sum += BigRational(binomial(n + t.sector, t.sector)) * p_power;
    p_power *= p;
  }
  return canonical(pow(q, static_cast<unsigned long>(t.sector + 1)) * sum);
}

}  // namespace

double alpha_coeff(long sector, long ell, double mu, double nu) {
  require_positive(mu, nu);
  if (sector < 0 || ell < 0 || ell > sector) throw std::out_of_range("alpha_coeff: need 0 <= l <= D");
  const double p = mu / (mu + nu);
  const double q = nu / (mu + nu);
  return std::exp(log_binomial(sector, ell) + static_cast<double>(ell) * std::log(p) +
                  static_cast<double>(sector - ell) * std::log(q));
}

BigRational alpha_coeff(long sector, long ell, const BigRational& mu, const BigRational& nu) {
  require_positive(mu, nu);
  if (sector < 0 || ell < 0 || ell > sector) throw std::out_of_range("alpha_coeff: need 0 <= l <= D");
  const BigRational total = mu + nu;
  return canonical(BigRational(binomial(sector, ell)) *
                   pow(canonical(mu / total), static_cast<unsigned long>(ell)) *
                   pow(canonical(nu / total), static_cast<unsigned long>(sector - ell)));
}

double alpha_weight(long sector, long n, double mu, double nu) {
  require_positive(mu, nu);
  if (sector < 0 || n < 0) throw std::out_of_range("alpha_weight: need D, n >= 0");
  const double p = mu / (mu + nu);
  const double q = nu / (mu + nu);
  return std::exp(static_cast<double>(sector) * std::log(q) + log_binomial(n + sector, sector) +
                  static_cast<double>(n) * std::log(p));
}

BigRational alpha_weight(long sector, long n, const BigRational& mu, const BigRational& nu) {
  require_positive(mu, nu);
  if (sector < 0 || n < 0) throw std::out_of_range("alpha_weight: need D, n >= 0");
  const BigRational total = mu + nu;
  return canonical(pow(canonical(nu / total), static_cast<unsigned long>(sector)) *
                   BigRational(binomial(n + sector, sector)) *
                   pow(canonical(mu / total), static_cast<unsigned long>(n)));
}

DeltaReport delta_number_space(const HeisenbergTriple& t) {
  const double p = t.mu / (t.mu + t.nu);
  const double q = t.nu / (t.mu + t.nu);
  double delta = 0.0;
  if (t.r >= t.sector) {
    delta = std::pow(q, static_cast<double>(t.sector + 1)) *
            negative_binomial_partial_sum(t.sector, t.r - t.sector + 1, p);
  }
  delta = std::min(delta, 1.0);
  return DeltaReport::from_double(delta, deficit_binomial_tail(t.sector, t.r, p, q),
                                  "heisenberg-number-space", psi_label());
}

DeltaReport delta_number_space(const ExactHeisenbergTriple& t) {
  return DeltaReport::from_exact(exact_delta(t), "heisenberg-number-space", psi_label());
}

double epsilon_heisenberg(const HeisenbergTriple& t) {
  const DeltaReport report = delta_number_space(t);
  return t.sector == 0 && t.r == 0 ? report.bound_linear : report.bound_sqrt;
}

double epsilon_heisenberg(const ExactHeisenbergTriple& t) {
  const DeltaReport report = delta_number_space(t);
  return t.sector == 0 && t.r == 0 ? report.bound_linear : report.bound_sqrt;
}

std::optional<BigRational> epsilon_heisenberg_exact(const ExactHeisenbergTriple& t) {
  const BigRational deficit = 1 - exact_delta(t);
  if (t.sector == 0 && t.r == 0) return canonical(2 * deficit);
  BigRational root;
  if (is_perfect_square(deficit, &root)) return canonical(2 * root);
  return std::nullopt;
}

double coherent_bound(long n, long k, long r) {
  if (!(0 < k && k < n)) throw std::invalid_argument("coherent_bound: need 0 < k < n");
  if (r < 0) throw std::invalid_argument("coherent_bound: need r >= 0");
  const double ratio = static_cast<double>(k) / static_cast<double>(n);
  if (r == 0) return 2.0 * ratio;
  return 2.0 * std::pow(ratio, static_cast<double>(r + 1) / 2.0);
}

std::optional<BigRational> coherent_bound_exact(long n, long k, long r) {
  if (!(0 < k && k < n)) throw std::invalid_argument("coherent_bound: need 0 < k < n");
  if (r < 0) throw std::invalid_argument("coherent_bound: need r >= 0");
  const BigRational ratio = canonical(BigRational(k, n));
  if (r == 0) return canonical(2 * ratio);
  BigRational root;
  if (is_perfect_square(pow(ratio, static_cast<unsigned long>(r + 1)), &root)) {
    return canonical(2 * root);
  }
  return std::nullopt;
}

}  // namespace heis

}  // namespace definetti
