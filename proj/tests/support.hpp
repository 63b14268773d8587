#pragma once

#include <Eigen/Dense>

#include <random>

#include "anyon/linalg.hpp"

namespace testing {

using anyon::CMatrix;
using anyon::cplx;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(977);
  return g;
}

inline double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline CMatrix random_matrix(std::size_t r, std::size_t c) {
  std::normal_distribution<double> n;
  CMatrix m(r, c);
  for (auto& v : m.entries()) v = cplx(n(rng()), n(rng()));
  return m;
}

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline CMatrix from_eigen(const Eigen::MatrixXcd& e) {
  CMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

inline CMatrix random_unitary(std::size_t n) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(random_matrix(n, n)));
  return from_eigen(qr.householderQ() * Eigen::MatrixXcd::Identity(n, n));
}

// Random density block of the given rank and trace.
inline CMatrix random_psd(std::size_t n, double trace) {
  CMatrix g = random_matrix(n, n);
  CMatrix p = g * g.adjoint();
  return (trace / p.trace().real()) * p;
}

// Oracle trace norm: Eigen's SVD.
inline double eigen_trace_norm(const CMatrix& m) {
  return to_eigen(m).jacobiSvd().singularValues().sum();
}

}  // namespace testing
