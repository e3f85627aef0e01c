#ifndef DEFINETTI_DENSE_OPERATOR_HPP
#define DEFINETTI_DENSE_OPERATOR_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace definetti {

/// Tuple describing one basis vector: a product-basis string (v_1..v_n), a
/// weight, or Fock occupation numbers.
using BasisLabel = std::vector<long>;

/// Complex matrix over explicitly labelled finite bases.
class DenseOperator {
 public:
  using Matrix = Eigen::MatrixXcd;

  DenseOperator(Matrix entries, std::vector<BasisLabel> basis);
  DenseOperator(Matrix entries, std::vector<BasisLabel> row_basis,
                std::vector<BasisLabel> col_basis);

  static DenseOperator identity(std::vector<BasisLabel> basis);
  /// Q Q^dagger for a matrix Q with orthonormal columns.
  static DenseOperator projector_onto(const Matrix& orthonormal_columns,
                                      std::vector<BasisLabel> basis);

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  const Matrix& matrix() const { return entries_; }
  const std::vector<BasisLabel>& row_basis() const { return row_basis_; }
  const std::vector<BasisLabel>& col_basis() const { return col_basis_; }

  DenseOperator adjoint() const;
  std::complex<double> trace() const;

  /// ||P^2 - P|| and ||P - P^dagger|| (max-abs) both below tol.
  bool is_projector(double tol = 1e-10) const;
  bool is_unitary(double tol = 1e-10) const;
  bool is_hermitian(double tol = 1e-10) const;

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);

 private:
  Matrix entries_;
  std::vector<BasisLabel> row_basis_;
  std::vector<BasisLabel> col_basis_;
};

/// A (x) B; labels are concatenated.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// (1/2) tr |A - B| for Hermitian A, B.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace definetti

#endif  // DEFINETTI_DENSE_OPERATOR_HPP
