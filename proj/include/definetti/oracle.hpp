#ifndef DEFINETTI_ORACLE_HPP
#define DEFINETTI_ORACLE_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "definetti/dense_operator.hpp"
#include "definetti/exact.hpp"
#include "definetti/su2_cg.hpp"
#include "definetti/symmetric.hpp"
#include "definetti/weights.hpp"

// Brute-force counterparts of the closed forms. Everything here is built from
// explicit vectors and matrices and deliberately avoids calling the formula
// modules, so agreement between the two is meaningful.
namespace definetti::oracle {

// ---------------------------------------------------------------------------
// Symmetric subspace

/// Largest d^n the dense symmetric routines accept.
inline constexpr long kMaxProductDimension = 1'000'000;

/// Normalized type-class vector |w> in (C^d)^(x)n. Product-basis index of
/// |v_1...v_n> is sum_i v_i d^(n-i) with letters v_i in [0, d).
struct SymBasisVector {
  Weight weight;
  Eigen::VectorXd amplitudes;
};

/// One vector per weight, ordered like weights::sym_weights. Throws
/// std::length_error past the size guard.
std::vector<SymBasisVector> sym_basis(long n, long d);

/// Product-basis labels (v_1, ..., v_n), letters 1-based.
std::vector<BasisLabel> product_basis_labels(long n, long d);

/// Dense projector onto Sym^n(C^d); guarded at d^n <= 4096.
DenseOperator sym_projector(long n, long d);

/// (d_B/d_C) tr[P_Sym^n (P_X (x) |1><1|^(n-k))] with X spanned by the type-class
/// vectors with w_1 >= k - r and both dimensions counted from the bases.
double brute_delta_symmetric(const SymTriple& t);

/// tr[P_Sym^n (|w><w| (x) |1><1|^(n-k))] for a weight w of Sym^k, k = |w|.
double brute_term_overlap(const Weight& w, long n);

/// sum_{i=r+1}^{k} binom(k,i)/binom(n,i), summed term by term.
BigRational direct_ratio_sum(long n, long k, long r);

// ---------------------------------------------------------------------------
// Clebsch-Gordan synthesis

inline constexpr int kMaxCgTwoJ = 24;

/// Exact sum of real square roots, kept as rational multiples of square roots
/// of distinct squarefree integers (which are linearly independent over Q).
class SurdSum {
 public:
  void add(const ExactReal& x);
  bool is_zero() const { return terms_.empty(); }
  /// The value when it is rational.
  std::optional<BigRational> rational() const;
  double to_double() const;

 private:
  std::map<BigInt, BigRational> terms_;  // squarefree kernel -> coefficient
};

/// All coefficients <j1 m1 j2 m2 | j m> for fixed j1, j2, synthesized from the
/// highest vector of each j by the lowering operator.
class CgTable {
 public:
  CgTable(TwoJ j1, TwoJ j2);

  TwoJ j1() const { return j1_; }
  TwoJ j2() const { return j2_; }
  /// Exact zero for any combination absent from the table.
  ExactReal at(TwoJ j, TwoJ m, TwoJ m1) const;
  /// Allowed j values, descending.
  std::vector<TwoJ> total_spins() const;
  /// Number of m values stored for j.
  long multiplet_size(TwoJ j) const;
  std::size_t size() const { return entries_.size(); }

 private:
  TwoJ j1_;
  TwoJ j2_;
  std::map<std::tuple<int, int, int>, ExactReal> entries_;  // (2j, 2m, 2m1)
};

/// Throws std::length_error when j1 or j2 exceeds 12.
CgTable cg_oracle(TwoJ j1, TwoJ j2);

/// (d_B/d_C) tr[P_C (P_X (x) |j2 m2><j2 m2|)] from the synthesized table, with
/// P_X the span of |j1 m1> for m1 >= j1 - r (down) or m1 <= -j1 + r (up).
BigRational brute_delta_su2(const CgTable& table, TwoJ j, TwoJ m2, long r, Direction direction);

/// {w in W_mu : w + nu in W_lambda} for mu = (2 j1, 0), nu = (2 j2, 0) and lambda
/// the weight of spin j shifted to the same total.
std::vector<Weight> lambda_up_set(TwoJ j1, TwoJ j2, TwoJ j);

// ---------------------------------------------------------------------------
// Truncated Fock space

/// Operators on span{|0>, ..., |cutoff>}.
DenseOperator annihilation(long cutoff);
DenseOperator creation(long cutoff);
/// exp(alpha a^dagger - conj(alpha) a) on the truncated space.
DenseOperator displacement(std::complex<double> alpha, long cutoff);

struct HeisOracleReport {
  double delta = 0.0;
  /// || a_{mu nu} psi^D || for the constructed lowest vector.
  double annihilation_residual = 0.0;
  /// Geometric bound on the weight of |D+n>|0> beyond the cutoff. Those
  /// components have more than r quanta, so they never enter delta.
  double tail_bound = 0.0;
  /// max | ||psi_n||^2 - 1 | over the generated states; nonzero only if the
  /// truncation clipped one of them.
  double norm_defect = 0.0;
  long cutoff = 0;
};

/// delta_{|0>}(N^r) from truncated two-mode states. Requires mu, nu > 0 and
/// cutoff >= r + D + 40.
HeisOracleReport heis_oracle(double mu, double nu, long sector, long r, long cutoff);

/// max |<psi^D_n | psi^D'_n'> - [D=D'][n=n']| over D, D', n, n' <= max_index.
double heis_orthogonality_defect(double mu, double nu, long max_index, long cutoff);

// ---------------------------------------------------------------------------
// Monte Carlo over SU(2)

/// Haar-random element of SU(2) from a uniform point on S^3.
Eigen::Matrix2cd haar_su2(std::mt19937_64& rng);

/// Haar-random unit vector of Sym^n(C^2), coordinates in the type-class basis.
Eigen::VectorXcd haar_symmetric_state(long n, std::mt19937_64& rng);

struct McReport {
  long n_samples = 0;
  std::uint64_t seed = 0;
  /// Trace distance between the projected mixture and tr_{n-k}|Psi><Psi|.
  double lhs_distance = 0.0;
  /// 2 (1 - delta) with delta from brute_delta_symmetric.
  double bound = 0.0;
  /// Trace distance between the unprojected mixture and the exact marginal.
  double identity_residual = 0.0;
  /// 5 * (1/2) sqrt(dim) * standard error (Frobenius) of each estimator.
  double mc_tolerance = 0.0;
  double identity_tolerance = 0.0;
  bool passed() const { return lhs_distance <= bound + mc_tolerance; }
};

/// Samples are drawn in chunks; chunk c uses its own generator seeded from
/// (seed, c), so results do not depend on `threads`.
McReport mc_theorem1(long n, long k, long r, long n_samples, std::uint64_t seed,
                     unsigned threads = 1);
/// Same, for a supplied state given in the type-class basis of Sym^n(C^2).
McReport mc_theorem1(const Eigen::VectorXcd& psi, long k, long r, long n_samples,
                     std::uint64_t seed, unsigned threads = 1);

}  // namespace definetti::oracle

#endif  // DEFINETTI_ORACLE_HPP
