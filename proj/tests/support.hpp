#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "qent/randstates.hpp"
#include "qent/types.hpp"

namespace testsup {

using Cmat = qent::ComplexMatrix<double>;

inline std::string fixture(const std::string& name) {
  return std::string(QENT_FIXTURE_DIR "/") + name;
}

// Brute-force partial trace, written independently of the library routine:
// scan every entry of m, decode both full multi-indices digit by digit, and
// accumulate the entries whose traced digits agree on both sides.
inline Cmat oracle_partial_trace(const Cmat& m, const std::vector<int>& dims,
                                 const std::vector<int>& keep1) {
  const int nfac = static_cast<int>(dims.size());
  std::vector<bool> kept(static_cast<std::size_t>(nfac), false);
  for (int k : keep1) kept[static_cast<std::size_t>(k - 1)] = true;

  auto digits_of = [&](long idx) {
    std::vector<int> d(static_cast<std::size_t>(nfac));
    for (int f = nfac - 1; f >= 0; --f) {
      d[static_cast<std::size_t>(f)] = static_cast<int>(idx % dims[static_cast<std::size_t>(f)]);
      idx /= dims[static_cast<std::size_t>(f)];
    }
    return d;
  };
  auto kept_linear = [&](const std::vector<int>& d) {
    long lin = 0;
    for (int f = 0; f < nfac; ++f)
      if (kept[static_cast<std::size_t>(f)])
        lin = lin * dims[static_cast<std::size_t>(f)] + d[static_cast<std::size_t>(f)];
    return lin;
  };

  long dim_out = 1;
  for (int f = 0; f < nfac; ++f)
    if (kept[static_cast<std::size_t>(f)]) dim_out *= dims[static_cast<std::size_t>(f)];

  Cmat out = Cmat::Zero(dim_out, dim_out);
  for (long r = 0; r < m.rows(); ++r) {
    const std::vector<int> rd = digits_of(r);
    for (long c = 0; c < m.cols(); ++c) {
      const std::vector<int> cd = digits_of(c);
      bool match = true;
      for (int f = 0; f < nfac; ++f)
        if (!kept[static_cast<std::size_t>(f)] &&
            rd[static_cast<std::size_t>(f)] != cd[static_cast<std::size_t>(f)])
          match = false;
      if (match) out(kept_linear(rd), kept_linear(cd)) += m(r, c);
    }
  }
  return out;
}

// Unitary from modified Gram-Schmidt over a seeded complex Gaussian matrix.
inline Cmat random_unitary(int n, std::uint64_t seed) {
  qent::GaussianSource src(seed);
  Cmat u(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) u(i, j) = src.complex_gaussian();
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) u.col(j) -= u.col(k).dot(u.col(j)) * u.col(k);
    u.col(j) /= u.col(j).norm();
  }
  return u;
}

inline double max_abs_diff(const Cmat& a, const Cmat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool bit_equal(const Cmat& a, const Cmat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return std::memcmp(a.data(), b.data(),
                     sizeof(std::complex<double>) * static_cast<std::size_t>(a.size())) == 0;
}

}  // namespace testsup
