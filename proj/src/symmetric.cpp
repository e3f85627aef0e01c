#include "definetti/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace definetti {

SymTriple::SymTriple(long n_, long k_, long r_, long d_) : n(n_), k(k_), r(r_), d(d_) {
  if (k < 0 || k > n) throw std::invalid_argument("SymTriple: need 0 <= k <= n");
  if (d < 2) throw std::invalid_argument("SymTriple: need d >= 2");
  if (r < 0) throw std::invalid_argument("SymTriple: need r >= 0");
  r = std::min(r, k);
}

namespace sym {

namespace {

const BigInt& fact(long n) { return factorial(static_cast<unsigned long>(n)); }

BigRational ratio(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

BigInt dim_sym(long n, long d) {
  if (n < 0) throw std::invalid_argument("dim_sym: n must be >= 0");
  if (d < 1) throw std::invalid_argument("dim_sym: d must be >= 1");
  return binomial(n + d - 1, n);
}

BigRational epsilon(const SymTriple& t) {
#ifdef DEFINETTI_MUTANT_EPSILON_OFF_BY_ONE
  const long first = t.r;
#else
  const long first = t.r + 1;
#endif
  BigRational sum = 0;
  for (long i = first; i <= t.k; ++i) {
    sum += ratio(binomial(t.k, i) * binomial(i + t.d - 2, i), binomial(t.n, i));
  }
  BigRational eps = 2 * ratio(dim_sym(t.n - t.k, t.d), dim_sym(t.n, t.d)) * sum;
  eps.canonicalize();
  return eps;
}

std::vector<long> weight_profile(std::span<const Weight> set, long k) {
  std::vector<long> f(static_cast<std::size_t>(k + 1), 0);
  for (const auto& w : set) {
    if (w.total() != k || w[0] < 0 || w[0] > k) {
      throw std::invalid_argument("weight_profile: " + w.to_string() + " is not a weight of Sym^" +
                                  std::to_string(k));
    }
    ++f[static_cast<std::size_t>(w[0])];
  }
  return f;
}

BigRational delta_psi_weights(long n, long k, long d, std::span<const long> profile) {
  if (k < 0 || k > n || d < 2) throw std::invalid_argument("delta_psi_weights: bad (n, k, d)");
  if (profile.size() > static_cast<std::size_t>(k + 1)) {
    throw std::invalid_argument("delta_psi_weights: profile longer than k+1");
  }
  BigInt sum = 0;
  for (std::size_t idx = 0; idx < profile.size(); ++idx) {
    const long i = static_cast<long>(idx);
    const long available = binomial(k - i + d - 2, k - i).get_si();
    if (profile[idx] < 0 || profile[idx] > available) {
      throw std::invalid_argument("delta_psi_weights: f_" + std::to_string(i) + "=" +
                                  std::to_string(profile[idx]) + " exceeds the " +
                                  std::to_string(available) + " weights with w_1 = " +
                                  std::to_string(i));
    }
    sum += (fact(n - k + i) / fact(i)) * profile[idx];
  }
  BigRational delta = ratio(dim_sym(n - k, d), dim_sym(n, d)) * ratio(fact(k), fact(n)) * sum;
  delta.canonicalize();
  return delta;
}

BigRational term_overlap(const Weight& w, long n, long k) {
  if (k < 0 || k > n) throw std::invalid_argument("term_overlap: need 0 <= k <= n");
  for (long x : w.entries()) {
    if (x < 0) throw std::invalid_argument("term_overlap: negative entry in " + w.to_string());
  }
  if (w.total() != k) {
    throw std::invalid_argument("term_overlap: " + w.to_string() + " does not sum to k=" +
                                std::to_string(k));
  }
  const long w1 = w[0];
  BigRational v = ratio(fact(k) * fact(w1 + n - k), fact(n) * fact(w1));
  return v;
}

BigRational closed_form_sum(long n, long k, long r) {
  if (k < 0 || k > n || r < 0) throw std::invalid_argument("closed_form_sum: need 0 <= r, k <= n");
  if (r >= k) return 0;
  return ratio(fact(k) * fact(n - r), BigInt(n - k + 1) * fact(n) * fact(k - r - 1));
}

ExponentialBound bound_exponential(const SymTriple& t) {
  if (t.d > std::min(t.k, t.n - t.k)) {
    throw std::invalid_argument("bound_exponential: need d <= min(k, n-k), got d=" +
                                std::to_string(t.d) + ", k=" + std::to_string(t.k) +
                                ", n=" + std::to_string(t.n));
  }
  const double n = static_cast<double>(t.n);
  const double k = static_cast<double>(t.k);
  const double r = static_cast<double>(t.r);
  const double d = static_cast<double>(t.d);
  const double log_fact_dm2 = std::lgamma(d - 1.0);
  const double log_ratio = std::log(k / (n - r));

  const double log_headline = std::log(2.0) + 3.0 * d - log_fact_dm2 + (r + 1.0) * log_ratio +
                              (d - 2.0) * std::log(k * (n - k) / (n - r));
  const double log_intermediate = -log_fact_dm2 + (d - 1.0 + r) * log_ratio +
                                  (d - 2.0) * std::log(n - k) + (d - 1.0) * r / k +
                                  (d - 1.0) * (d - 1.0) / k + (d - 1.0) * (d - 1.0) / (n - k);
  return {std::exp(log_headline), std::exp(log_intermediate)};
}

BigRational exact_error_d2(long n, long k, long r) {
  if (k < 0 || k > n || r < 0) throw std::invalid_argument("exact_error_d2: need 0 <= r, k <= n");
  if (r >= k) return 0;
  BigRational v = 2 * ratio(fact(k) * fact(n - r), fact(k - r - 1) * fact(n + 1));
  v.canonicalize();
  return v;
}

}  // namespace sym

}  // namespace definetti
