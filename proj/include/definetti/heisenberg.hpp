#ifndef DEFINETTI_HEISENBERG_HPP
#define DEFINETTI_HEISENBERG_HPP

#include <optional>

#include "definetti/exact.hpp"
#include "definetti/report.hpp"

namespace definetti {

/// H^sector_{mu+nu} inside H_mu (x) H_nu, approximated on H_mu by number
/// states |n>, n <= r.
///
/// `sector` is the label of the copy of H_{mu+nu}: its lowest vector carries
/// `sector` excitations in total. Scalar is double for arbitrary positive
/// reals, BigRational for exact evaluation.
template <class Scalar>
struct BasicHeisenbergTriple {
  Scalar mu;
  Scalar nu;
  long sector;
  long r;

  BasicHeisenbergTriple(Scalar mu, Scalar nu, long sector, long r);
};

using HeisenbergTriple = BasicHeisenbergTriple<double>;
using ExactHeisenbergTriple = BasicHeisenbergTriple<BigRational>;

extern template struct BasicHeisenbergTriple<double>;
extern template struct BasicHeisenbergTriple<BigRational>;

namespace heis {

/// binom(D, l) mu^l nu^(D-l) / (mu+nu)^D: squared amplitude of |D-l>|l> in the
/// lowest vector of sector D.
double alpha_coeff(long sector, long ell, double mu, double nu);
BigRational alpha_coeff(long sector, long ell, const BigRational& mu, const BigRational& nu);

/// (nu/(mu+nu))^D binom(n+D, D) (mu/(mu+nu))^n: weight of |D+n>|0> in the
/// n-th basis vector of sector D.
double alpha_weight(long sector, long n, double mu, double nu);
BigRational alpha_weight(long sector, long n, const BigRational& mu, const BigRational& nu);

/// delta_{|0>}(N^r) = (nu/(mu+nu))^(D+1) sum_{n=0}^{r-D} binom(n+D, D) (mu/(mu+nu))^n.
/// Zero when r < D.
DeltaReport delta_number_space(const HeisenbergTriple& t);
DeltaReport delta_number_space(const ExactHeisenbergTriple& t);

/// 2(1 - delta) when D = 0 and r = 0, 2 sqrt(1 - delta) otherwise.
double epsilon_heisenberg(const HeisenbergTriple& t);
double epsilon_heisenberg(const ExactHeisenbergTriple& t);
/// The same error when it is rational.
std::optional<BigRational> epsilon_heisenberg_exact(const ExactHeisenbergTriple& t);

/// Coherent-state de Finetti error: 2k/n for r = 0, else 2 (k/n)^((r+1)/2).
/// Requires 0 < k < n.
double coherent_bound(long n, long k, long r);
/// Rational value of coherent_bound when it has one (r = 0, r odd, or k/n a
/// rational square).
std::optional<BigRational> coherent_bound_exact(long n, long k, long r);

}  // namespace heis

}  // namespace definetti

#endif  // DEFINETTI_HEISENBERG_HPP
