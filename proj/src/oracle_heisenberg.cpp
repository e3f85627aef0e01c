#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "definetti/oracle.hpp"

namespace definetti::oracle {

namespace {

std::vector<BasisLabel> fock_labels(long cutoff) {
  std::vector<BasisLabel> labels;
  for (long n = 0; n <= cutoff; ++n) labels.push_back({n});
  return labels;
}

void require_cutoff(long cutoff) {
  if (cutoff < 1) throw std::invalid_argument("Fock cutoff must be >= 1");
  if (cutoff > 4000) throw std::length_error("Fock cutoff above 4000");
}

void require_modes(double mu, double nu) {
  if (!(mu > 0.0) || !(nu > 0.0) || !std::isfinite(mu) || !std::isfinite(nu)) {
    throw std::invalid_argument("heis_oracle: mu and nu must be positive and finite");
  }
}

// Two truncated modes; a state is the matrix C(n1, n2) of amplitudes of |n1>|n2>.
// Operators are applied entrywise since a and a^dagger are bidiagonal.
class TwoModes {
 public:
  TwoModes(double mu, double nu, long cutoff)
      : cutoff_(cutoff), s1_(std::sqrt(mu / (mu + nu))), s2_(std::sqrt(nu / (mu + nu))) {}

  Eigen::MatrixXd zero() const { return Eigen::MatrixXd::Zero(cutoff_ + 1, cutoff_ + 1); }

  // a_{mu nu} = (sqrt(mu) a_1 + sqrt(nu) a_2) / sqrt(mu + nu)
  Eigen::MatrixXd lower(const Eigen::MatrixXd& c) const {
    Eigen::MatrixXd out = zero();
    for (long i = 0; i <= cutoff_; ++i) {
      for (long j = 0; j <= cutoff_; ++j) {
        double v = 0.0;
        if (i < cutoff_) v += s1_ * std::sqrt(static_cast<double>(i + 1)) * c(i + 1, j);
        if (j < cutoff_) v += s2_ * std::sqrt(static_cast<double>(j + 1)) * c(i, j + 1);
        out(i, j) = v;
      }
    }
    return out;
  }

  Eigen::MatrixXd raise(const Eigen::MatrixXd& c) const {
    Eigen::MatrixXd out = zero();
    for (long i = 0; i <= cutoff_; ++i) {
      for (long j = 0; j <= cutoff_; ++j) {
        double v = 0.0;
        if (i > 0) v += s1_ * std::sqrt(static_cast<double>(i)) * c(i - 1, j);
        if (j > 0) v += s2_ * std::sqrt(static_cast<double>(j)) * c(i, j - 1);
        out(i, j) = v;
      }
    }
    return out;
  }

  // Lowest vector of the given sector: the normalized kernel of a_{mu nu}
  // among states with `sector` excitations in total.
  Eigen::MatrixXd lowest(long sector) const {
    Eigen::MatrixXd c = zero();
    c(sector, 0) = 1.0;
    for (long l = 0; l < sector; ++l) {
      // the |sector-l-1, l> coefficient of a c must vanish
      c(sector - l - 1, l + 1) = -c(sector - l, l) * s1_ * std::sqrt(static_cast<double>(sector - l)) /
                                 (s2_ * std::sqrt(static_cast<double>(l + 1)));
    }
    return c / c.norm();
  }

  long cutoff() const { return cutoff_; }
  double p() const { return s1_ * s1_; }

 private:
  long cutoff_;
  double s1_;
  double s2_;
};

}  // namespace

DenseOperator annihilation(long cutoff) {
  require_cutoff(cutoff);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (long n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return DenseOperator(std::move(a), fock_labels(cutoff));
}

DenseOperator creation(long cutoff) { return annihilation(cutoff).adjoint(); }

DenseOperator displacement(std::complex<double> alpha, long cutoff) {
  const Eigen::MatrixXcd a = annihilation(cutoff).matrix();
  const Eigen::MatrixXcd generator = alpha * a.adjoint() - std::conj(alpha) * a;
  return DenseOperator(generator.exp(), fock_labels(cutoff));
}

HeisOracleReport heis_oracle(double mu, double nu, long sector, long r, long cutoff) {
  require_modes(mu, nu);
  if (sector < 0 || r < 0) throw std::invalid_argument("heis_oracle: sector and r must be >= 0");
  if (cutoff < r + sector + 40) {
    throw std::invalid_argument("heis_oracle: cutoff " + std::to_string(cutoff) +
                                " below r + sector + 40 = " + std::to_string(r + sector + 40));
  }
  require_cutoff(cutoff);
  const TwoModes modes(mu, nu, cutoff);

  HeisOracleReport report;
  report.cutoff = cutoff;
  Eigen::MatrixXd psi = modes.lowest(sector);
  report.annihilation_residual = modes.lower(psi).norm();

  // psi_n has sector + n excitations, so every n <= cutoff - sector fits.
  double overlap = 0.0;
  double last_weight = 0.0;
  const long n_max = cutoff - sector;
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) psi = modes.raise(psi) / std::sqrt(static_cast<double>(n));
    report.norm_defect = std::max(report.norm_defect, std::abs(psi.squaredNorm() - 1.0));
    for (long occ = 0; occ <= std::min(r, cutoff); ++occ) overlap += psi(occ, 0) * psi(occ, 0);
    last_weight = psi(std::min(sector + n, cutoff), 0) * psi(std::min(sector + n, cutoff), 0);
  }
  report.delta = nu / (mu + nu) * overlap;

  // weight ratio of consecutive |D+n>|0> components is p (n+D)/n
  const double n0 = static_cast<double>(n_max + 1);
  const double rho = modes.p() * (n0 + static_cast<double>(sector)) / n0;
  report.tail_bound =
      rho < 1.0 ? last_weight * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  return report;
}

double heis_orthogonality_defect(double mu, double nu, long max_index, long cutoff) {
  require_modes(mu, nu);
  if (max_index < 0) throw std::invalid_argument("heis_orthogonality_defect: max_index < 0");
  if (cutoff < 2 * max_index) {
    throw std::invalid_argument("heis_orthogonality_defect: cutoff below 2 * max_index");
  }
  require_cutoff(cutoff);
  const TwoModes modes(mu, nu, cutoff);

  std::vector<std::pair<long, Eigen::MatrixXd>> states;  // (sector * (max+1) + n, psi)
  for (long sector = 0; sector <= max_index; ++sector) {
    Eigen::MatrixXd psi = modes.lowest(sector);
    for (long n = 0; n <= max_index; ++n) {
      if (n > 0) psi = modes.raise(psi) / std::sqrt(static_cast<double>(n));
      states.emplace_back(sector * (max_index + 1) + n, psi);
    }
  }
  double defect = 0.0;
  for (const auto& [ia, a] : states) {
    for (const auto& [ib, b] : states) {
      const double expected = ia == ib ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(a.cwiseProduct(b).sum() - expected));
    }
  }
  return defect;
}

}  // namespace definetti::oracle
