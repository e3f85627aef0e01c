#ifndef DEFINETTI_WEIGHTS_HPP
#define DEFINETTI_WEIGHTS_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "definetti/exact.hpp"

namespace definetti {

/// Integer d-tuple on the SU(d) weight lattice (d >= 2).
///
/// Also used for plain difference vectors, so entries may be negative.
class Weight {
 public:
  explicit Weight(std::vector<long> entries);
  Weight(std::initializer_list<long> entries) : Weight(std::vector<long>(entries)) {}

  std::size_t dimension() const { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  std::span<const long> entries() const { return entries_; }
  long total() const;

  /// w_i <-> w_{d+1-i}.
  Weight reversed() const;
  /// Subtracts w_d * (1,...,1); idempotent.
  Weight normalized() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<long> entries_;
};

/// Index i of the simple root alpha_i, 1 <= i <= d-1.
class RootIndex {
 public:
  RootIndex(int index, int dimension);
  int index() const { return index_; }
  int dimension() const { return dimension_; }

 private:
  int index_;
  int dimension_;
};

/// Coefficients of a zero-sum vector in the simple-root basis, and the
/// largest absolute coefficient.
struct HeightDecomposition {
  std::vector<BigRational> coefficients;
  BigRational height;
};

enum class Direction { down, up };

enum class WeightOrder { less_or_equal, not_less_or_equal, incomparable };

namespace weights {

Weight simple_root(RootIndex i);
Weight simple_root(int i, int d);

/// Prefix-sum comparison. Weights with different totals are incomparable.
WeightOrder compare(const Weight& w, const Weight& w2);
/// true iff compare(w, w2) == less_or_equal.
bool weight_leq(const Weight& w, const Weight& w2);

/// Writes v = sum_i c_i alpha_i; v must have zero coordinate sum.
HeightDecomposition decompose(std::span<const BigRational> v);
/// Inverse of decompose: sum_i c_i alpha_i as a d-vector.
std::vector<BigRational> combine(std::span<const BigRational> coefficients);

/// lambda - w = sum n_i alpha_i, height max |n_i|.
HeightDecomposition height_down(const Weight& lambda, const Weight& w);
/// w = mu_* + sum m_i alpha_i with mu_* the lowest weight of R_mu.
HeightDecomposition height_up(const Weight& mu, const Weight& w);

/// Lowest weight of the irrep with highest weight mu (the reversal of mu).
Weight lowest_weight(const Weight& mu);

/// Compositions of n into d nonnegative parts, lexicographically descending.
std::vector<Weight> sym_weights(long n, long d);

/// Weights of Sym^n(C^d) within height r of the highest (down) or lowest (up)
/// weight.
std::vector<Weight> w_r_set(long n, long d, long r, Direction direction);

/// Multinomial (sum w)! / prod w_i!.
BigInt type_class_size(const Weight& w);

/// Radius r = ht_up_mu(lambda - nu) at which the reduced state of R_lambda in
/// R_mu (x) R_nu is exactly a mixture of W^r-states.
///
/// The three weights are normalized, then lambda is shifted along (1,...,1) so
/// the coordinate sums match. A non-integral decomposition means the triple
/// cannot occur in the tensor product and raises std::invalid_argument.
long exact_radius(const Weight& lambda, const Weight& mu, const Weight& nu);

}  // namespace weights

}  // namespace definetti

#endif  // DEFINETTI_WEIGHTS_HPP
