#ifndef DEFINETTI_SYMMETRIC_HPP
#define DEFINETTI_SYMMETRIC_HPP

#include <span>
#include <vector>

#include "definetti/exact.hpp"
#include "definetti/weights.hpp"

namespace definetti {

/// Parameters of Sym^n(C^d) inside Sym^k (x) Sym^{n-k}, approximated by
/// W^r-states on the k kept systems.
///
/// Requires 0 <= k <= n, d >= 2, r >= 0. A radius above k is clamped to k:
/// the approximating set is then the whole of Sym^k and the error vanishes.
struct SymTriple {
  long n;
  long k;
  long r;
  long d;

  SymTriple(long n, long k, long r, long d);
};

namespace sym {

/// binom(n+d-1, n).
BigInt dim_sym(long n, long d);

/// eps_{n,k,r,d} = 2 dimSym(n-k)/dimSym(n) * sum_{i=r+1}^{k} binom(k,i)/binom(n,i) * binom(i+d-2,i)
BigRational epsilon(const SymTriple& t);

/// f_i = number of weights in `set` with first entry i, for i = 0..k.
std::vector<long> weight_profile(std::span<const Weight> set, long k);

/// delta_psi(W) for psi = |1>^(n-k) given the first-entry profile f of W:
///   dimSym(n-k)/dimSym(n) * k!/n! * sum_i (n-k+i)!/i! * f_i
/// Throws if some f_i exceeds the number of weights of Sym^k with w_1 = i.
BigRational delta_psi_weights(long n, long k, long d, std::span<const long> profile);

/// tr(P_Sym^n (|w><w| (x) |1><1|^(n-k))) = k!/n! * (w_1+n-k)!/w_1! for w a weight of Sym^k.
BigRational term_overlap(const Weight& w, long n, long k);

/// sum_{i=r+1}^{k} binom(k,i)/binom(n,i) in closed form
///   k!(n-r)! / ((n-k+1) n! (k-r-1)!);
/// zero when r >= k.
BigRational closed_form_sum(long n, long k, long r);

struct ExponentialBound {
  /// 2 e^{3d}/(d-2)! (k/(n-r))^{r+1} (k(n-k)/(n-r))^{d-2}
  double headline;
  /// (1/(d-2)!) (k/(n-r))^{d-1+r} (n-k)^{d-2} exp((d-1)r/k + (d-1)^2/k + (d-1)^2/(n-k));
  /// bounds eps/2.
  double intermediate;
};

/// Requires 2 <= d <= min(k, n-k).
ExponentialBound bound_exponential(const SymTriple& t);

/// eps_{n,k,r,2} = 2 k!/(k-r-1)! * (n-r)!/(n+1)!; zero when r >= k.
BigRational exact_error_d2(long n, long k, long r);

}  // namespace sym

}  // namespace definetti

#endif  // DEFINETTI_SYMMETRIC_HPP
