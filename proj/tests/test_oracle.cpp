#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "definetti/oracle.hpp"
#include "definetti/su2_cg.hpp"
#include "reference.hpp"

using namespace definetti;

namespace {

TwoJ h(int doubled) { return TwoJ::doubled(doubled); }

unsigned many_threads() { return std::max(4u, std::thread::hardware_concurrency()); }

}  // namespace

TEST_CASE("type-class basis") {
  const auto basis = oracle::sym_basis(2, 2);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].weight == Weight{2, 0});
  CHECK(basis[1].weight == Weight{1, 1});
  CHECK(basis[2].weight == Weight{0, 2});
  CHECK(basis[1].amplitudes(1) == doctest::Approx(std::sqrt(0.5)));
  CHECK(basis[1].amplitudes(2) == doctest::Approx(std::sqrt(0.5)));
  CHECK(basis[1].amplitudes(0) == 0.0);
  CHECK(oracle::sym_basis(4, 3).size() == 15);
  CHECK_THROWS_AS(oracle::sym_basis(30, 2), std::length_error);

  for (long d = 2; d <= 4; ++d) {
    for (long n = 0; n <= 6; ++n) {
      const auto b = oracle::sym_basis(n, d);
      const auto expected = weights::sym_weights(n, d);
      REQUIRE(b.size() == expected.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b[i].weight == expected[i]);
        for (std::size_t j = 0; j < b.size(); ++j) {
          CHECK(b[i].amplitudes.dot(b[j].amplitudes) == doctest::Approx(i == j ? 1.0 : 0.0));
        }
      }
    }
  }
  const auto labels = oracle::product_basis_labels(2, 3);
  REQUIRE(labels.size() == 9);
  CHECK(labels[0] == BasisLabel{1, 1});
  CHECK(labels[5] == BasisLabel{2, 3});
}

TEST_CASE("symmetric projector equals the permutation average") {
  for (long d = 2; d <= 3; ++d) {
    for (long n = 1; n <= 4; ++n) {
      const auto p = oracle::sym_projector(n, d);
      CHECK(p.is_projector());
      CHECK(p.trace().real() == doctest::Approx(sym::dim_sym(n, d).get_d()));
      const Eigen::MatrixXd expected = ref::permutation_projector(n, d);
      CHECK((p.matrix().real() - expected).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(p.matrix().imag().cwiseAbs().maxCoeff() == 0.0);
    }
  }
  CHECK_THROWS_AS(oracle::sym_projector(13, 2), std::length_error);
}

TEST_CASE("dense overlap examples") {
  CHECK(oracle::brute_delta_symmetric(SymTriple(4, 2, 0, 2)) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(oracle::brute_delta_symmetric(SymTriple(4, 2, 2, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  const SymTriple t(6, 3, 1, 3);
  CHECK(oracle::brute_delta_symmetric(t) ==
        doctest::Approx(1.0 - sym::epsilon(t).get_d() / 2).epsilon(1e-12));
  for (long n = 1; n <= 6; ++n) {
    for (long r = 0; r <= 3; ++r) {
      CHECK(oracle::brute_delta_symmetric(SymTriple(n, std::min(n, 3L), r, 2)) ==
            doctest::Approx(ref::delta_symmetric_permutations(n, std::min(n, 3L), r, 2)).epsilon(1e-12));
    }
  }
  CHECK(oracle::brute_term_overlap(Weight{0, 2}, 4) == doctest::Approx(1.0 / 6.0));
  CHECK(oracle::direct_ratio_sum(4, 2, 0) == ref::q("2/3"));
}

TEST_CASE("synthesized coupling table") {
  const auto table = oracle::cg_oracle(h(1), h(1));
  CHECK(table.total_spins() == std::vector<TwoJ>{h(2), h(0)});
  CHECK(table.multiplet_size(h(2)) == 3);
  CHECK(table.multiplet_size(h(0)) == 1);
  CHECK(table.at(h(2), h(0), h(1)) == ExactReal::sqrt(ref::q("1/2")));
  CHECK(table.at(h(0), h(0), h(1)) == ExactReal::sqrt(ref::q("1/2")));
  CHECK(table.at(h(0), h(0), h(-1)) == -ExactReal::sqrt(ref::q("1/2")));
  CHECK(table.at(h(2), h(2), h(-1)).is_zero());
  CHECK_THROWS_AS(oracle::cg_oracle(h(26), h(1)), std::length_error);
  for (int J1 = 0; J1 <= 6; ++J1) {
    for (int J2 = 0; J2 <= 6; ++J2) {
      const auto t = oracle::cg_oracle(h(J1), h(J2));
      CHECK(t.at(h(J1 + J2), h(J1 + J2), h(J1)) == ExactReal::rational(1));
      long states = 0;
      for (TwoJ j : t.total_spins()) states += t.multiplet_size(j);
      CHECK(states == (J1 + 1) * (J2 + 1));
    }
  }
}

TEST_CASE("exact sums of surds") {
  oracle::SurdSum s;
  s.add(ExactReal::sqrt(2));
  s.add(ExactReal::sqrt(8));
  s.add(-ExactReal::sqrt(18));
  CHECK(s.is_zero());
  s.add(ExactReal::sqrt(ref::q("9/4")));
  REQUIRE(s.rational().has_value());
  CHECK(*s.rational() == ref::q("3/2"));
  s.add(ExactReal::sqrt(3));
  CHECK_FALSE(s.rational().has_value());
  CHECK(s.to_double() == doctest::Approx(1.5 + std::sqrt(3.0)));
}

TEST_CASE("brute-force su(2) overlap agrees with the closed form") {
  for (int J1 = 0; J1 <= 6; ++J1) {
    for (int J2 = 0; J2 <= 6; ++J2) {
      const auto table = oracle::cg_oracle(h(J1), h(J2));
      for (TwoJ j : table.total_spins()) {
        for (int M2 = -J2; M2 <= J2; M2 += 2) {
          for (long r = 0; r <= J1; ++r) {
            for (Direction dir : {Direction::down, Direction::up}) {
              CHECK(oracle::brute_delta_su2(table, j, h(M2), r, dir) ==
                    *su2::delta_su2(h(J1), h(J2), j, h(M2), r, dir).exact);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("weights reachable from the lowest weight") {
  CHECK(oracle::lambda_up_set(h(2), h(2), h(0)) == std::vector<Weight>{Weight{0, 2}});
  for (int J1 = 0; J1 <= 8; ++J1) {
    for (int J2 = 0; J2 <= 8; ++J2) {
      CHECK(oracle::lambda_up_set(h(J1), h(J2), h(J1 + J2)) == weights::sym_weights(J1, 2));
    }
  }
}

TEST_CASE("dense operator algebra") {
  DenseOperator::Matrix x(2, 2);
  x << 0, 1, 1, 0;
  const DenseOperator sx(x, {{0}, {1}});
  const auto id = DenseOperator::identity({{0}, {1}});
  const auto both = kron(sx, id);
  CHECK(both.rows() == 4);
  CHECK(both.row_basis()[2] == BasisLabel{1, 0});
  CHECK(both.trace() == std::complex<double>(0, 0));
  CHECK(kron(id, id).trace() == std::complex<double>(4, 0));
  CHECK(sx.is_unitary());
  CHECK(sx.is_hermitian());
  CHECK_FALSE(sx.is_projector());
  CHECK((sx * sx - id).matrix().cwiseAbs().maxCoeff() == 0.0);
  CHECK(trace_distance(sx.matrix(), -sx.matrix()) == doctest::Approx(2.0));
  DenseOperator::Matrix v(2, 1);
  v << std::sqrt(0.5), std::sqrt(0.5);
  CHECK(DenseOperator::projector_onto(v, {{0}, {1}}).is_projector());
}

TEST_CASE("truncated Fock operators") {
  const long cutoff = 80;
  CHECK(oracle::annihilation(cutoff).adjoint().matrix() == oracle::creation(cutoff).matrix());
  const std::complex<double> alpha(0.7, -0.4);
  const auto disp = oracle::displacement(alpha, cutoff);
  Eigen::MatrixXcd top = disp.matrix().leftCols(20);
  CHECK((top.adjoint() * top - Eigen::MatrixXcd::Identity(20, 20)).cwiseAbs().maxCoeff() < 1e-10);
  std::complex<double> amp = std::exp(-std::norm(alpha) / 2);
  for (long n = 0; n < 20; ++n) {
    CHECK(std::abs(disp.matrix()(n, 0) - amp) < 1e-12);
    amp *= alpha / std::sqrt(double(n + 1));
  }
}

TEST_CASE("two-mode oracle") {
  const auto vacuum = oracle::heis_oracle(1.0, 1.0, 0, 0, 60);
  CHECK(vacuum.delta == doctest::Approx(0.5).epsilon(1e-12));
  for (long sector = 0; sector <= 8; ++sector) {
    for (double mu : {0.5, 1.0, 3.0}) {
      const auto rep = oracle::heis_oracle(mu, 2.0, sector, sector + 5, 2 * sector + 45);
      CHECK(rep.annihilation_residual < 1e-10);
      CHECK(rep.delta == doctest::Approx(ref::heis_delta_binomial(mpq_class(mu), ref::q("2"), sector, sector + 5).get_d()).epsilon(1e-10));
    }
  }
  CHECK(oracle::heis_orthogonality_defect(1.0, 2.0, 6, 40) < 1e-10);
  CHECK_THROWS_AS(oracle::heis_oracle(1.0, 1.0, 2, 3, 44), std::invalid_argument);
}

TEST_CASE("Haar SU(2) second moments") {
  std::mt19937_64 rng(7);
  const long samples = 200000;
  Eigen::Matrix<std::complex<double>, 4, 4> moments = Eigen::Matrix<std::complex<double>, 4, 4>::Zero();
  for (long s = 0; s < samples; ++s) {
    const Eigen::Matrix2cd u = oracle::haar_su2(rng);
    CHECK_MESSAGE((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12, "unitary");
    const Eigen::Vector4cd flat(u(0, 0), u(0, 1), u(1, 0), u(1, 1));
    moments += flat * flat.adjoint();
  }
  moments /= double(samples);
  const double tol = 3.0 / std::sqrt(double(samples));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      // E[U_ij conj(U_kl)] = [i=k][j=l] / 2
      const double expect = a == b ? 0.5 : 0.0;
      CHECK(std::abs(moments(a, b) - expect) < tol);
    }
  }
}

TEST_CASE("Monte Carlo estimator is deterministic across thread counts") {
  const auto one = oracle::mc_theorem1(4, 2, 1, 5000, 11, 1);
  const auto many = oracle::mc_theorem1(4, 2, 1, 5000, 11, many_threads());
  CHECK(one.lhs_distance == many.lhs_distance);
  CHECK(one.identity_residual == many.identity_residual);
  CHECK(one.mc_tolerance == many.mc_tolerance);
  const auto other = oracle::mc_theorem1(4, 2, 1, 5000, 12, 1);
  CHECK(other.lhs_distance != one.lhs_distance);
}

TEST_CASE("Monte Carlo bound holds and r = k is exact") {
  for (long r = 0; r <= 2; ++r) {
    const auto rep = oracle::mc_theorem1(4, 2, r, 20000, 3, many_threads());
    CHECK(rep.passed());
    CHECK(rep.identity_residual <= rep.identity_tolerance);
    if (r == 2) {
      CHECK(rep.bound == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(rep.lhs_distance <= rep.mc_tolerance);
    }
  }
}

TEST_CASE("Monte Carlo error shrinks like N^-1/2") {
  const std::vector<long> sizes{1000, 10000, 100000};
  std::vector<double> log_mean;
  for (long n_samples : sizes) {
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      sum += oracle::mc_theorem1(4, 2, 2, n_samples, seed, many_threads()).identity_residual;
    }
    log_mean.push_back(std::log(sum / 10.0));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(double(sizes[i]));
    sx += x;
    sy += log_mean[i];
    sxx += x * x;
    sxy += x * log_mean[i];
  }
  const double m = double(sizes.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  MESSAGE("fitted slope " << slope);
  CHECK(slope == doctest::Approx(-0.5).epsilon(0.3));
}
