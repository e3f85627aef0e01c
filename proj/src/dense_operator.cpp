#include "definetti/dense_operator.hpp"

#include <stdexcept>

namespace definetti {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

DenseOperator::DenseOperator(Matrix entries, std::vector<BasisLabel> basis)
    : DenseOperator(std::move(entries), basis, basis) {}

DenseOperator::DenseOperator(Matrix entries, std::vector<BasisLabel> row_basis,
                             std::vector<BasisLabel> col_basis)
    : entries_(std::move(entries)), row_basis_(std::move(row_basis)),
      col_basis_(std::move(col_basis)) {
  if (static_cast<Eigen::Index>(row_basis_.size()) != entries_.rows() ||
      static_cast<Eigen::Index>(col_basis_.size()) != entries_.cols()) {
    throw std::invalid_argument("DenseOperator: basis labels do not match matrix shape");
  }
}

DenseOperator DenseOperator::identity(std::vector<BasisLabel> basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  return DenseOperator(Matrix::Identity(n, n), std::move(basis));
}

DenseOperator DenseOperator::projector_onto(const Matrix& orthonormal_columns,
                                            std::vector<BasisLabel> basis) {
  return DenseOperator(orthonormal_columns * orthonormal_columns.adjoint(), std::move(basis));
}

DenseOperator DenseOperator::adjoint() const {
  return DenseOperator(entries_.adjoint(), col_basis_, row_basis_);
}

std::complex<double> DenseOperator::trace() const {
  if (rows() != cols()) throw std::logic_error("trace of a non-square operator");
  return entries_.trace();
}

bool DenseOperator::is_hermitian(double tol) const {
  return rows() == cols() && max_abs(entries_ - entries_.adjoint()) <= tol;
}

bool DenseOperator::is_projector(double tol) const {
  return is_hermitian(tol) && max_abs(entries_ * entries_ - entries_) <= tol;
}

bool DenseOperator::is_unitary(double tol) const {
  if (rows() != cols()) return false;
  return max_abs(entries_.adjoint() * entries_ - Matrix::Identity(rows(), cols())) <= tol;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("DenseOperator: shape mismatch in product");
  return DenseOperator(a.entries_ * b.entries_, a.row_basis_, b.col_basis_);
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("DenseOperator: shape mismatch in sum");
  }
  return DenseOperator(a.entries_ + b.entries_, a.row_basis_, a.col_basis_);
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("DenseOperator: shape mismatch in difference");
  }
  return DenseOperator(a.entries_ - b.entries_, a.row_basis_, a.col_basis_);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  auto combine = [](const std::vector<BasisLabel>& x, const std::vector<BasisLabel>& y) {
    std::vector<BasisLabel> out;
    out.reserve(x.size() * y.size());
    for (const auto& lx : x) {
      for (const auto& ly : y) {
        BasisLabel l = lx;
        l.insert(l.end(), ly.begin(), ly.end());
        out.push_back(std::move(l));
      }
    }
    return out;
  };
  return DenseOperator(kron(a.matrix(), b.matrix()), combine(a.row_basis(), b.row_basis()),
                       combine(a.col_basis(), b.col_basis()));
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("trace_distance: shape mismatch");
  }
  const Eigen::MatrixXcd diff = a - b;
  // symmetrize away round-off before the Hermitian eigensolver
  const Eigen::MatrixXcd herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace definetti
