#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qent/errors.hpp"
#include "qent/hermlin.hpp"
#include "qent/types.hpp"

namespace qent {

/// Deterministic source of uniform and Gaussian draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard, so identical seeds give identical draws on every platform.
/// Uniforms take the top 53 bits of each 64-bit word; Gaussians come from
/// the Marsaglia polar transform of uniform pairs. No platform-default
/// generator or distribution object is involved anywhere.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal N(0, 1).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  /// Complex Gaussian with independent N(0,1) real and imaginary parts.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum class StateKind { GinibreMixed, HaarPure, Product, DiagonalDirichlet };

/// Everything needed to reproduce one random state bit-for-bit.
struct StateRecipe {
  StateKind kind = StateKind::GinibreMixed;
  int dim = 0;                             // unused for Product
  std::vector<int> factor_dims;            // Product only
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> factor_seeds; // Product; defaults to seed + i

  static StateRecipe ginibre(int dim, std::uint64_t seed) {
    return {StateKind::GinibreMixed, dim, {}, seed, {}};
  }
  static StateRecipe pure(int dim, std::uint64_t seed) {
    return {StateKind::HaarPure, dim, {}, seed, {}};
  }
  static StateRecipe dirichlet(int dim, std::uint64_t seed) {
    return {StateKind::DiagonalDirichlet, dim, {}, seed, {}};
  }
  static StateRecipe product(std::vector<int> dims, std::vector<std::uint64_t> seeds) {
    StateRecipe r;
    r.kind = StateKind::Product;
    r.factor_dims = std::move(dims);
    r.factor_seeds = std::move(seeds);
    if (!r.factor_seeds.empty()) r.seed = r.factor_seeds[0];
    return r;
  }
};

namespace detail {

template <typename Scalar>
ComplexMatrix<Scalar> ginibre_matrix(int dim, std::uint64_t seed) {
  GaussianSource src(seed);
  ComplexMatrix<Scalar> g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const std::complex<double> z = src.complex_gaussian();
      g(i, j) = std::complex<Scalar>(static_cast<Scalar>(z.real()),
                                     static_cast<Scalar>(z.imag()));
    }
  ComplexMatrix<Scalar> a = hermitian_part<Scalar>(g * g.adjoint());
  const Scalar tr = a.trace().real();
  a *= std::complex<Scalar>(Scalar(1) / tr, Scalar(0));
  return a;
}

template <typename Scalar>
ComplexMatrix<Scalar> pure_matrix(int dim, std::uint64_t seed) {
  GaussianSource src(seed);
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> psi(dim);
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> z = src.complex_gaussian();
    psi(i) = std::complex<Scalar>(static_cast<Scalar>(z.real()),
                                  static_cast<Scalar>(z.imag()));
  }
  ComplexMatrix<Scalar> a = hermitian_part<Scalar>((psi * psi.adjoint()).eval());
  const Scalar tr = a.trace().real();
  a *= std::complex<Scalar>(Scalar(1) / tr, Scalar(0));
  return a;
}

template <typename Scalar>
ComplexMatrix<Scalar> dirichlet_matrix(int dim, std::uint64_t seed) {
  GaussianSource src(seed);
  RealVector<Scalar> w(dim);
  Scalar sum = 0;
  for (int i = 0; i < dim; ++i) {
    // -ln(1 - U) with U in [0,1) is a unit exponential; normalized
    // exponentials are a flat Dirichlet draw.
    w(i) = static_cast<Scalar>(-std::log(1.0 - src.uniform()));
    sum += w(i);
  }
  ComplexMatrix<Scalar> a = ComplexMatrix<Scalar>::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) a(i, i) = std::complex<Scalar>(w(i) / sum, 0);
  return a;
}

}  // namespace detail

/// Build the state described by a recipe. Same recipe, same bits.
/// The result always passes validate_density at 1e-9 tolerances.
template <typename Scalar = double>
DensityMatrix<Scalar> generate(const StateRecipe& recipe) {
  ComplexMatrix<Scalar> m;
  switch (recipe.kind) {
    case StateKind::GinibreMixed:
      if (recipe.dim < 2) throw InvalidDimension("generate: dim must be >= 2");
      m = detail::ginibre_matrix<Scalar>(recipe.dim, recipe.seed);
      break;
    case StateKind::HaarPure:
      if (recipe.dim < 2) throw InvalidDimension("generate: dim must be >= 2");
      m = detail::pure_matrix<Scalar>(recipe.dim, recipe.seed);
      break;
    case StateKind::DiagonalDirichlet:
      if (recipe.dim < 2) throw InvalidDimension("generate: dim must be >= 2");
      m = detail::dirichlet_matrix<Scalar>(recipe.dim, recipe.seed);
      break;
    case StateKind::Product: {
      if (recipe.factor_dims.size() < 2)
        throw InvalidDimension("generate: product needs at least two factors");
      for (std::size_t i = 0; i < recipe.factor_dims.size(); ++i) {
        const int d = recipe.factor_dims[i];
        if (d < 2) throw InvalidDimension("generate: factor dims must be >= 2");
        const std::uint64_t seed = i < recipe.factor_seeds.size()
                                       ? recipe.factor_seeds[i]
                                       : recipe.seed + static_cast<std::uint64_t>(i);
        ComplexMatrix<Scalar> f = detail::ginibre_matrix<Scalar>(d, seed);
        m = (i == 0) ? f : kronecker(m, f);
      }
      break;
    }
  }
  return validate_density<Scalar>(m, Scalar(kDefaultTol), Scalar(kDefaultTol),
                                  Scalar(kDefaultTol));
}

}  // namespace qent
