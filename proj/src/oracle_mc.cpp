#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "definetti/oracle.hpp"

namespace definetti::oracle {

namespace {

constexpr long kChunk = 4096;

using Cplx = std::complex<double>;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct Sums {
  Eigen::MatrixXcd identity;      // sum of d_B chi~ chi~^dagger
  Eigen::MatrixXd identity_sq;    // sum of |entries|^2
  Eigen::MatrixXcd projected;     // sum of ||chi~||^2 chi chi^dagger
  Eigen::MatrixXd projected_sq;

  explicit Sums(Eigen::Index dim)
      : identity(Eigen::MatrixXcd::Zero(dim, dim)), identity_sq(Eigen::MatrixXd::Zero(dim, dim)),
        projected(Eigen::MatrixXcd::Zero(dim, dim)), projected_sq(Eigen::MatrixXd::Zero(dim, dim)) {}

  void merge(const Sums& o) {
    identity += o.identity;
    identity_sq += o.identity_sq;
    projected += o.projected;
    projected_sq += o.projected_sq;
  }
};

Eigen::MatrixXcd tensor_power(const Eigen::Matrix2cd& u, long times) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (long i = 0; i < times; ++i) out = kron(out, Eigen::MatrixXcd(u));
  return out;
}

Eigen::VectorXcd tensor_power(const Eigen::Vector2cd& v, long times) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
  for (long i = 0; i < times; ++i) {
    Eigen::VectorXcd next(out.size() * 2);
    for (Eigen::Index a = 0; a < out.size(); ++a) {
      next[2 * a] = out[a] * v[0];
      next[2 * a + 1] = out[a] * v[1];
    }
    out = std::move(next);
  }
  return out;
}

// (1/2) sqrt(dim) * Frobenius standard error of the sample mean, times 5.
double tolerance(const Eigen::MatrixXcd& sum, const Eigen::MatrixXd& sum_sq, double count) {
  const Eigen::MatrixXcd mean = sum / count;
  const double variance = (sum_sq / count - mean.cwiseAbs2()).sum();
  const double se = std::sqrt(std::max(variance, 0.0) / count);
  return 5.0 * 0.5 * std::sqrt(static_cast<double>(sum.rows())) * se;
}

}  // namespace

Eigen::Matrix2cd haar_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double x[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& v : x) {
      v = gauss(rng);
      norm += v * v;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  const double a = x[0] / norm;
  const double b = x[1] / norm;
  const double c = x[2] / norm;
  const double d = x[3] / norm;
  Eigen::Matrix2cd u;
  u << Cplx(a, b), Cplx(-c, d), Cplx(c, d), Cplx(a, -b);
  return u;
}

Eigen::VectorXcd haar_symmetric_state(long n, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("haar_symmetric_state: n must be >= 0");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd psi(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) psi[i] = Cplx(gauss(rng), gauss(rng));
  return psi / psi.norm();
}

McReport mc_theorem1(long n, long k, long r, long n_samples, std::uint64_t seed,
                     unsigned threads) {
  if (n < 1 || n > 16) throw std::invalid_argument("mc_theorem1: need 1 <= n <= 16");
  auto rng = stream(seed, 0x70736900u, 0);
  return mc_theorem1(haar_symmetric_state(n, rng), k, r, n_samples, seed, threads);
}

McReport mc_theorem1(const Eigen::VectorXcd& psi, long k, long r, long n_samples,
                     std::uint64_t seed, unsigned threads) {
  const long n = static_cast<long>(psi.size()) - 1;
  if (n < 1 || n > 16) throw std::invalid_argument("mc_theorem1: 2^n must be at most 2^16");
  if (k < 1 || k > n) throw std::invalid_argument("mc_theorem1: need 1 <= k <= n");
  if (r < 0) throw std::invalid_argument("mc_theorem1: r must be >= 0");
  if (n_samples < 1000) throw std::invalid_argument("mc_theorem1: need at least 1000 samples");
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw std::invalid_argument("mc_theorem1: psi not normalized");

  // |Psi> in the product basis, reshaped to (kept index, traced index)
  const auto full = sym_basis(n, 2);
  Eigen::VectorXcd flat = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (std::size_t i = 0; i < full.size(); ++i) {
    flat += psi[static_cast<Eigen::Index>(i)] * full[i].amplitudes.cast<Cplx>();
  }
  const Eigen::Index kept_dim = Eigen::Index{1} << k;
  const Eigen::Index traced_dim = Eigen::Index{1} << (n - k);
  Eigen::MatrixXcd m(kept_dim, traced_dim);
  for (Eigen::Index a = 0; a < kept_dim; ++a) {
    for (Eigen::Index b = 0; b < traced_dim; ++b) m(a, b) = flat[a * traced_dim + b];
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();

  const auto kept = sym_basis(k, 2);
  Eigen::MatrixXcd p_x = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (const auto& x : kept) {
    if (x.weight[0] >= k - r) {
      const Eigen::VectorXcd v = x.amplitudes.cast<Cplx>();
      p_x += v * v.adjoint();
    }
  }
  const double d_b = static_cast<double>(sym_basis(n - k, 2).size());

  const long chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<Sums> partial(static_cast<std::size_t>(chunks), Sums(kept_dim));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long c = next++; c < chunks; c = next++) {
      auto rng = stream(seed, 0x6d63u, static_cast<std::uint64_t>(c));
      Sums& s = partial[static_cast<std::size_t>(c)];
      const long count = std::min(kChunk, n_samples - c * kChunk);
      for (long i = 0; i < count; ++i) {
        const Eigen::Matrix2cd u = haar_su2(rng);
        const Eigen::VectorXcd psi_g = tensor_power(Eigen::Vector2cd(u.col(0)), n - k);
        const Eigen::VectorXcd chi = m * psi_g.conjugate();
        const Eigen::MatrixXcd x_term = d_b * chi * chi.adjoint();
        s.identity += x_term;
        s.identity_sq += x_term.cwiseAbs2();

        const Eigen::MatrixXcd uk = tensor_power(u, k);
        const Eigen::VectorXcd projected = uk * (p_x * (uk.adjoint() * chi));
        const double pn = projected.squaredNorm();
        if (pn > 0.0) {
          const Eigen::MatrixXcd y_term =
              (d_b * chi.squaredNorm() / pn) * projected * projected.adjoint();
          s.projected += y_term;
          s.projected_sq += y_term.cwiseAbs2();
        }
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Sums total(kept_dim);
  for (const auto& s : partial) total.merge(s);  // fixed order keeps the result schedule-free

  const double count = static_cast<double>(n_samples);
  McReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  report.identity_residual = trace_distance(total.identity / count, rho);
  report.lhs_distance = trace_distance(total.projected / count, rho);
  report.identity_tolerance = tolerance(total.identity, total.identity_sq, count);
  report.mc_tolerance = tolerance(total.projected, total.projected_sq, count);
  report.bound = 2.0 * (1.0 - brute_delta_symmetric(SymTriple(n, k, r, 2)));
  return report;
}

}  // namespace definetti::oracle
