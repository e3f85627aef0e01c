#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "definetti/oracle.hpp"

namespace definetti::oracle {

namespace {

long checked_power(long d, long n, long limit) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  long p = 1;
  for (long i = 0; i < n; ++i) {
    if (p > limit / d) {
      throw std::length_error("dense oracle: d^n = " + std::to_string(d) + "^" +
                              std::to_string(n) + " exceeds the size guard " +
                              std::to_string(limit));
    }
    p *= d;
  }
  return p;
}

// Letter counts of every product-basis index.
std::vector<std::vector<long>> letter_counts(long n, long d, long size) {
  std::vector<std::vector<long>> counts(static_cast<std::size_t>(size),
                                        std::vector<long>(static_cast<std::size_t>(d), 0));
  for (long idx = 0; idx < size; ++idx) {
    long rest = idx;
    for (long i = 0; i < n; ++i) {
      ++counts[static_cast<std::size_t>(idx)][static_cast<std::size_t>(rest % d)];
      rest /= d;
    }
  }
  return counts;
}

Eigen::MatrixXd basis_matrix(const std::vector<SymBasisVector>& basis) {
  if (basis.empty()) return {};
  Eigen::MatrixXd b(basis.front().amplitudes.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    b.col(static_cast<Eigen::Index>(c)) = basis[c].amplitudes;
  }
  return b;
}

}  // namespace

std::vector<SymBasisVector> sym_basis(long n, long d) {
  if (d < 2) throw std::invalid_argument("sym_basis: need d >= 2");
  const long size = checked_power(d, n, kMaxProductDimension);
  const auto counts = letter_counts(n, d, size);

  // descending lexicographic order, same as the weight enumeration
  std::map<std::vector<long>, std::vector<long>, std::greater<>> classes;
  for (long idx = 0; idx < size; ++idx) classes[counts[static_cast<std::size_t>(idx)]].push_back(idx);

  std::vector<SymBasisVector> out;
  out.reserve(classes.size());
  for (const auto& [w, members] : classes) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
    const double amp = 1.0 / std::sqrt(static_cast<double>(members.size()));
    for (long idx : members) v[idx] = amp;
    out.push_back({Weight(w), std::move(v)});
  }
  return out;
}

std::vector<BasisLabel> product_basis_labels(long n, long d) {
  const long size = checked_power(d, n, kMaxProductDimension);
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (long idx = 0; idx < size; ++idx) {
    BasisLabel l(static_cast<std::size_t>(n));
    long rest = idx;
    for (long i = n - 1; i >= 0; --i) {
      l[static_cast<std::size_t>(i)] = rest % d + 1;
      rest /= d;
    }
    labels.push_back(std::move(l));
  }
  return labels;
}

DenseOperator sym_projector(long n, long d) {
  checked_power(d, n, 4096);
  const Eigen::MatrixXcd b = basis_matrix(sym_basis(n, d)).cast<std::complex<double>>();
  return DenseOperator::projector_onto(b, product_basis_labels(n, d));
}

double brute_delta_symmetric(const SymTriple& t) {
  const auto full = sym_basis(t.n, t.d);
  const auto kept = sym_basis(t.k, t.d);
  const auto traced = sym_basis(t.n - t.k, t.d);
  const long stride = checked_power(t.d, t.n - t.k, kMaxProductDimension);
  const long kept_size = checked_power(t.d, t.k, kMaxProductDimension);

  // psi = |1...1> is product index 0 on the traced systems, so x (x) psi only
  // touches rows idx_A * stride of the full space.
  const Eigen::MatrixXd b = basis_matrix(full);
  Eigen::MatrixXd rows(kept_size, b.cols());
  for (long a = 0; a < kept_size; ++a) rows.row(a) = b.row(a * stride);

  double trace = 0.0;
  for (const auto& x : kept) {
    if (x.weight[0] < t.k - t.r) continue;
    trace += (rows.transpose() * x.amplitudes).squaredNorm();
  }
  const double d_b = static_cast<double>(traced.size());
  const double d_c = static_cast<double>(full.size());
  return d_b / d_c * trace;
}

double brute_term_overlap(const Weight& w, long n) {
  const long k = w.total();
  const auto d = static_cast<long>(w.dimension());
  if (k > n) throw std::invalid_argument("brute_term_overlap: |w| exceeds n");
  const auto kept = sym_basis(k, d);
  const auto it = std::find_if(kept.begin(), kept.end(),
                               [&](const SymBasisVector& v) { return v.weight == w; });
  if (it == kept.end()) {
    throw std::invalid_argument("brute_term_overlap: " + w.to_string() + " is not a weight");
  }
  const long stride = checked_power(d, n - k, kMaxProductDimension);
  const Eigen::MatrixXd b = basis_matrix(sym_basis(n, d));
  Eigen::VectorXd embedded = Eigen::VectorXd::Zero(b.rows());
  for (Eigen::Index a = 0; a < it->amplitudes.size(); ++a) embedded[a * stride] = it->amplitudes[a];
  return (b.transpose() * embedded).squaredNorm();
}

BigRational direct_ratio_sum(long n, long k, long r) {
  if (k < 0 || k > n || r < 0) throw std::invalid_argument("direct_ratio_sum: need 0 <= r, k <= n");
  BigRational sum = 0;
  for (long i = r + 1; i <= k; ++i) {
    BigRational term(binomial(k, i), binomial(n, i));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

}  // namespace definetti::oracle
