#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace anyon {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Sized for the small blocks that appear in
// category data and dimer states, and for Fock spaces of a few modes.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix scalar(cplx v);
  static CMatrix diagonal(const std::vector<cplx>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<cplx>& entries() const { return data_; }
  std::vector<cplx>& entries() { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;
  CMatrix real_part() const;
  CMatrix imag_part() const;

  cplx trace() const;
  double max_abs() const;
  bool all_finite() const;
  bool is_hermitian(double rel_tol = 1e-12) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);

// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// max |U U^dagger - 1| over entries; square input required.
double unitarity_residual(const CMatrix& u);

CMatrix kron(const CMatrix& a, const CMatrix& b);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

// Cyclic complex Jacobi. Throws InvalidInput for non-Hermitian input.
HermitianEigen hermitian_eigen(const CMatrix& m);
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// One-sided Jacobi; descending order, min(rows, cols) values.
std::vector<double> singular_values(const CMatrix& m);

double trace_norm(const CMatrix& m);

// Number of singular values above tol * sigma_max.
std::size_t numerical_rank(const CMatrix& m, double tol = 1e-9);

}  // namespace anyon
