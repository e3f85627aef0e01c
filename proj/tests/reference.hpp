// Reference computations used only by the tests. Each one reaches its value
// by a different route from the library so that agreement is informative.
#ifndef DEFINETTI_TESTS_REFERENCE_HPP
#define DEFINETTI_TESTS_REFERENCE_HPP

#include <Eigen/Dense>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace ref {

inline mpq_class q(const std::string& text) {
  mpq_class v(text);
  v.canonicalize();
  return v;
}

inline mpq_class q(long num, long den) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

inline mpz_class fact(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

inline long ipow(long b, long e) {
  long p = 1;
  while (e-- > 0) p *= b;
  return p;
}

/// Compositions of n into d parts, any order.
inline std::vector<std::vector<long>> compositions(long n, long d) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, long left, long slot) -> void {
    if (slot == d - 1) {
      cur[static_cast<std::size_t>(slot)] = left;
      out.push_back(cur);
      return;
    }
    for (long x = 0; x <= left; ++x) {
      cur[static_cast<std::size_t>(slot)] = x;
      self(self, left - x, slot + 1);
    }
  };
  rec(rec, n, 0);
  return out;
}

inline mpz_class multinomial(const std::vector<long>& w) {
  mpz_class den = 1;
  long total = 0;
  for (long x : w) {
    den *= fact(x);
    total += x;
  }
  return fact(total) / den;
}

/// 1 - eps/2 for Sym^n(C^d): the overlap of |w>|1..1> with the symmetric
/// subspace is |T^w| / |T^(w + (n-k) e_1)| since both are flat type-class sums.
inline mpq_class delta_symmetric_counting(long n, long k, long r, long d) {
  mpq_class sum = 0;
  for (auto w : compositions(k, d)) {
    if (w[0] < k - r) continue;
    mpz_class small = multinomial(w);
    w[0] += n - k;
    mpq_class term(small, multinomial(w));
    term.canonicalize();
    sum += term;
  }
  mpq_class dims(static_cast<long>(compositions(n - k, d).size()),
                 static_cast<long>(compositions(n, d).size()));
  dims.canonicalize();
  mpq_class out = dims * sum;
  out.canonicalize();
  return out;
}

/// (1/n!) sum over permutations of the n tensor factors.
inline Eigen::MatrixXd permutation_projector(long n, long d) {
  const long size = ipow(d, n);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, size);
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  std::vector<long> digits(static_cast<std::size_t>(n));
  do {
    for (long idx = 0; idx < size; ++idx) {
      long rest = idx;
      for (long i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = rest % d;
        rest /= d;
      }
      long image = 0;
      for (long i = 0; i < n; ++i) image = image * d + digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      p(image, idx) += 1.0;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p / static_cast<double>(count);
}

/// delta for psi = |1..1> built from permutation projectors only.
inline double delta_symmetric_permutations(long n, long k, long r, long d) {
  const Eigen::MatrixXd p_n = permutation_projector(n, d);
  const Eigen::MatrixXd p_k = permutation_projector(k, d);
  const Eigen::MatrixXd p_b = permutation_projector(n - k, d);
  const long kept = ipow(d, k);
  const long stride = ipow(d, n - k);
  // diagonal projector onto product strings with at least k-r copies of letter 0
  Eigen::VectorXd mask(kept);
  for (long idx = 0; idx < kept; ++idx) {
    long rest = idx;
    long zeros = 0;
    for (long i = 0; i < k; ++i) {
      zeros += rest % d == 0 ? 1 : 0;
      rest /= d;
    }
    mask[idx] = zeros >= k - r ? 1.0 : 0.0;
  }
  const Eigen::MatrixXd p_x = p_k * mask.asDiagonal();
  double trace = 0.0;
  for (long a = 0; a < kept; ++a) {
    for (long b = 0; b < kept; ++b) trace += p_n(b * stride, a * stride) * p_x(a, b);
  }
  return p_b.trace() / p_n.trace() * trace;
}

/// Clebsch-Gordan table in double precision, built literally: the top vector
/// of each j is the Gram-Schmidt complement of the larger-j vectors at m = j,
/// then J- generates the rest. Keys are doubled (j, m, m1).
inline std::map<std::tuple<int, int, int>, double> cg_gram_schmidt(int J1, int J2) {
  const int n1 = J1 + 1;
  const int n2 = J2 + 1;
  auto index = [&](int m1, int m2) { return ((J1 - m1) / 2) * n2 + (J2 - m2) / 2; };
  const int dim = n1 * n2;
  Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(dim, dim);
  for (int m1 = -J1; m1 <= J1; m1 += 2) {
    for (int m2 = -J2; m2 <= J2; m2 += 2) {
      if (m1 > -J1) lower(index(m1 - 2, m2), index(m1, m2)) += 0.5 * std::sqrt(double(J1 + m1) * (J1 - m1 + 2));
      if (m2 > -J2) lower(index(m1, m2 - 2), index(m1, m2)) += 0.5 * std::sqrt(double(J2 + m2) * (J2 - m2 + 2));
    }
  }
  std::map<std::pair<int, int>, Eigen::VectorXd> states;
  std::map<std::tuple<int, int, int>, double> table;
  for (int J = J1 + J2; J >= std::abs(J1 - J2); J -= 2) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v[index(J1, J - J1)] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int Jp = J1 + J2; Jp > J; Jp -= 2) {
        const Eigen::VectorXd& u = states.at({Jp, J});
        v -= u.dot(v) * u;
      }
    }
    v.normalize();
    if (v[index(J1, J - J1)] < 0) v = -v;
    for (int M = J; M >= -J; M -= 2) {
      if (M < J) {
        v = lower * v;
        v.normalize();
      }
      states[{J, M}] = v;
      for (int m1 = -J1; m1 <= J1; m1 += 2) {
        const int m2 = M - m1;
        if (std::abs(m2) <= J2) table[{J, M, m1}] = v[index(m1, m2)];
      }
    }
  }
  return table;
}

/// 1 - delta for the Heisenberg number space equals P[Binomial(r+1, q) <= D],
/// q = nu/(mu+nu): at most D of the first r+1 trials land in the second mode.
inline mpq_class heis_delta_binomial(const mpq_class& mu, const mpq_class& nu, long sector, long r) {
  mpq_class p = mu / (mu + nu);
  mpq_class qq = nu / (mu + nu);
  p.canonicalize();
  qq.canonicalize();
  mpq_class tail = 0;
  for (long j = 0; j <= std::min(sector, r + 1); ++j) {
    mpq_class term = choose(r + 1, j);
    for (long i = 0; i < j; ++i) term *= qq;
    for (long i = 0; i < r + 1 - j; ++i) term *= p;
    tail += term;
  }
  mpq_class out = 1 - tail;
  out.canonicalize();
  return out;
}

}  // namespace ref

#endif  // DEFINETTI_TESTS_REFERENCE_HPP
