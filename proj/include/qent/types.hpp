#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qent/errors.hpp"

namespace qent {

/// Dense square complex matrix, the universal numeric carrier.
template <typename Scalar = double>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_square(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Worst entrywise |m(i,j) - conj(m(j,i))|.
template <typename Derived>
auto hermiticity_deviation(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  Real worst = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Real dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (dev > worst) worst = dev;
    }
  return worst;
}

/// (m + m^dag)/2, evaluated entrywise so that an already-Hermitian input is
/// returned unchanged to the last bit: (x + x)/2 == x in IEEE arithmetic.
template <typename Scalar>
ComplexMatrix<Scalar> hermitian_part(const ComplexMatrix<Scalar>& m) {
  if (!is_square(m)) throw DimensionMismatch("hermitian_part: matrix not square");
  ComplexMatrix<Scalar> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const std::complex<Scalar> s = m(i, j) + std::conj(m(j, i));
      out(i, j) = std::complex<Scalar>(s.real() / Scalar(2), s.imag() / Scalar(2));
    }
  return out;
}

/// Kronecker product; row-major composite index convention
/// (i*rows_b + k, j*cols_b + l).
template <typename Scalar>
ComplexMatrix<Scalar> kronecker(const ComplexMatrix<Scalar>& a,
                                const ComplexMatrix<Scalar>& b) {
  ComplexMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qent
