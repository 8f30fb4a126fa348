#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qent/errors.hpp"
#include "qent/types.hpp"

namespace qent {

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiResidualFactor = 1e-12;
inline constexpr double kDefaultTol = 1e-9;

/// Real eigenvalues of a Hermitian matrix, sorted descending, together with
/// the convergence footprint of the solve.
template <typename Scalar = double>
struct Spectrum {
  RealVector<Scalar> eigenvalues;
  int sweeps = 0;
  Scalar residual = 0;

  Scalar sum() const { return eigenvalues.sum(); }
  Scalar min() const { return eigenvalues(eigenvalues.size() - 1); }
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const ComplexMatrix<Scalar>& a) {
  Scalar acc = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// Two-sided unitary Givens rotation zeroing a(p,q) of a Hermitian matrix,
// applied in place. Diagonal entries stay real; the (p,q)/(q,p) pair is set
// to exactly zero.
template <typename Scalar>
void jacobi_rotate(ComplexMatrix<Scalar>& a, Eigen::Index p, Eigen::Index q) {
  const std::complex<Scalar> gamma = a(p, q);
  const Scalar abs_g = std::abs(gamma);
  if (abs_g == Scalar(0)) return;

  const Scalar alpha = a(p, p).real();
  const Scalar beta = a(q, q).real();
  const std::complex<Scalar> phase = gamma / abs_g;
  const Scalar theta = (beta - alpha) / (Scalar(2) * abs_g);
  const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                   (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
  const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
  const std::complex<Scalar> s = phase * (t * c);

  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r == p || r == q) continue;
    const std::complex<Scalar> arp = a(r, p);
    const std::complex<Scalar> arq = a(r, q);
    a(r, p) = c * arp - std::conj(s) * arq;
    a(r, q) = s * arp + c * arq;
    a(p, r) = std::conj(a(r, p));
    a(q, r) = std::conj(a(r, q));
  }
  a(p, p) = alpha - t * abs_g;
  a(q, q) = beta + t * abs_g;
  a(p, q) = std::complex<Scalar>(0);
  a(q, p) = std::complex<Scalar>(0);
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps. The input is
/// symmetrized first; iteration stops once the off-diagonal Frobenius norm
/// drops below 1e-12 times the Frobenius norm of the input, with a hard cap
/// of 100 sweeps.
template <typename Scalar>
Spectrum<Scalar> eigvals_hermitian(const ComplexMatrix<Scalar>& m) {
  if (!is_square(m)) throw DimensionMismatch("eigvals_hermitian: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) throw DimensionMismatch("eigvals_hermitian: empty matrix");

  ComplexMatrix<Scalar> a = hermitian_part(m);
  const Scalar target = Scalar(kJacobiResidualFactor) * m.norm();

  Scalar off = detail::off_diagonal_norm(a);
  int sweeps = 0;
  while (off > target && sweeps < kMaxJacobiSweeps) {
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) detail::jacobi_rotate(a, p, q);
    ++sweeps;
    off = detail::off_diagonal_norm(a);
  }
  if (off > target) throw NoConvergence(static_cast<double>(off), sweeps);

  std::vector<Scalar> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<Scalar>());

  Spectrum<Scalar> sp;
  sp.eigenvalues = Eigen::Map<const RealVector<Scalar>>(ev.data(), n);
  sp.sweeps = sweeps;
  sp.residual = off;
  return sp;
}

/// Worst-case deviations of a candidate state, with no tolerance applied.
template <typename Scalar = double>
struct ValidationDiagnostics {
  Scalar herm_deviation = 0;   // max |M(i,j) - conj(M(j,i))| of the raw input
  Scalar trace_deviation = 0;  // |Tr - 1| of the symmetrized matrix
  Scalar min_eigenvalue = 0;
};

/// A ComplexMatrix vetted as a physical state: Hermitian, unit trace and
/// positive semidefinite within recorded tolerances. Holds the symmetrized
/// working matrix and the spectrum computed during validation.
template <typename Scalar = double>
class DensityMatrix {
 public:
  const ComplexMatrix<Scalar>& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  Scalar herm_tol() const { return herm_tol_; }
  Scalar trace_tol() const { return trace_tol_; }
  Scalar psd_tol() const { return psd_tol_; }
  const ValidationDiagnostics<Scalar>& diagnostics() const { return diag_; }
  const Spectrum<Scalar>& spectrum() const { return spectrum_; }

  template <typename S>
  friend DensityMatrix<S> validate_density(const ComplexMatrix<S>&, S, S, S);

 private:
  DensityMatrix() = default;

  ComplexMatrix<Scalar> mat_;
  Scalar herm_tol_ = 0, trace_tol_ = 0, psd_tol_ = 0;
  ValidationDiagnostics<Scalar> diag_;
  Spectrum<Scalar> spectrum_;
};

/// Probe a candidate matrix without applying any tolerance.
template <typename Scalar>
ValidationDiagnostics<Scalar> diagnose_density(const ComplexMatrix<Scalar>& m) {
  if (!is_square(m)) throw DimensionMismatch("diagnose_density: matrix not square");
  if (!all_finite(m)) throw Error("diagnose_density: non-finite entry");
  ValidationDiagnostics<Scalar> d;
  d.herm_deviation = hermiticity_deviation(m);
  const ComplexMatrix<Scalar> h = hermitian_part(m);
  d.trace_deviation = std::abs(h.trace().real() - Scalar(1));
  d.min_eigenvalue = eigvals_hermitian(h).min();
  return d;
}

/// Validate a matrix as a density matrix. The returned state stores the
/// symmetrized Hermitian part (m + m^dag)/2 as its working matrix.
/// Throws NotHermitian / TraceNotUnit / NotPositive naming the offending
/// magnitude.
template <typename Scalar>
DensityMatrix<Scalar> validate_density(const ComplexMatrix<Scalar>& m,
                                       Scalar herm_tol = Scalar(kDefaultTol),
                                       Scalar trace_tol = Scalar(kDefaultTol),
                                       Scalar psd_tol = Scalar(kDefaultTol)) {
  if (herm_tol < Scalar(0) || trace_tol < Scalar(0) || psd_tol < Scalar(0))
    throw Error("validate_density: tolerances must be >= 0");
  if (!is_square(m)) throw DimensionMismatch("validate_density: matrix not square");
  if (!all_finite(m)) throw Error("validate_density: non-finite entry");

  DensityMatrix<Scalar> rho;
  rho.diag_.herm_deviation = hermiticity_deviation(m);
  if (rho.diag_.herm_deviation > herm_tol)
    throw NotHermitian(static_cast<double>(rho.diag_.herm_deviation));

  rho.mat_ = hermitian_part(m);
  rho.diag_.trace_deviation = std::abs(rho.mat_.trace().real() - Scalar(1));
  if (rho.diag_.trace_deviation > trace_tol)
    throw TraceNotUnit(static_cast<double>(rho.diag_.trace_deviation));

  rho.spectrum_ = eigvals_hermitian(rho.mat_);
  rho.diag_.min_eigenvalue = rho.spectrum_.min();
  if (rho.diag_.min_eigenvalue < -psd_tol)
    throw NotPositive(static_cast<double>(rho.diag_.min_eigenvalue));

  rho.herm_tol_ = herm_tol;
  rho.trace_tol_ = trace_tol;
  rho.psd_tol_ = psd_tol;
  return rho;
}

/// Entropy value plus what was clamped to reach it. Eigenvalues in
/// [-psd_tol, 0) count as clamped; anything below -psd_tol throws.
template <typename Scalar = double>
struct EntropyResult {
  Scalar value = 0;
  int clamped = 0;
  Scalar min_eigenvalue = 0;
};

template <typename Scalar>
EntropyResult<Scalar> entropy_of_spectrum(const Spectrum<Scalar>& sp, Scalar psd_tol) {
  EntropyResult<Scalar> r;
  r.min_eigenvalue = sp.min();
  Scalar s = 0;
  for (Eigen::Index i = 0; i < sp.eigenvalues.size(); ++i) {
    const Scalar lam = sp.eigenvalues(i);
    if (lam < -psd_tol) throw NotPositive(static_cast<double>(lam));
    if (lam < Scalar(0)) {
      ++r.clamped;  // clamped to zero: contributes nothing
    } else if (lam > Scalar(0)) {
      s -= lam * std::log(lam);
    }
  }
  r.value = std::max(s, Scalar(0));
  return r;
}

/// S = -Tr rho ln rho in nats, by the convention 0 ln 0 = 0.
template <typename Scalar>
Scalar von_neumann_entropy(const DensityMatrix<Scalar>& rho) {
  return entropy_of_spectrum(rho.spectrum(), rho.psd_tol()).value;
}

/// Entropy of a plain Hermitian matrix (symmetrized internally), reporting
/// clamped eigenvalues. Used for the reduced matrices inside inequality
/// checks, which are not revalidated as states.
template <typename Scalar>
EntropyResult<Scalar> entropy_with_diagnostics(const ComplexMatrix<Scalar>& m,
                                               Scalar psd_tol) {
  return entropy_of_spectrum(eigvals_hermitian(m), psd_tol);
}

}  // namespace qent
