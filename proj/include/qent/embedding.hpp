#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qent/errors.hpp"
#include "qent/hermlin.hpp"
#include "qent/types.hpp"

namespace qent {

/// Placement of zero rows/columns when lifting a state into a larger space.
/// Positions are 1-based indices into the target, matching how the embedded
/// layouts are written out in the docs and fixtures.
class ZeroEmbedding {
 public:
  ZeroEmbedding(int source_dim, int target_dim, std::vector<int> zero_positions)
      : source_(source_dim), target_(target_dim), zeros_(std::move(zeros_sorted(zero_positions))) {
    if (source_ < 1 || target_ <= source_)
      throw DimensionMismatch("ZeroEmbedding: need target_dim > source_dim >= 1");
    if (static_cast<int>(zeros_.size()) != target_ - source_)
      throw DimensionMismatch("ZeroEmbedding: need exactly target_dim - source_dim zero positions");
    for (std::size_t i = 0; i < zeros_.size(); ++i) {
      if (zeros_[i] < 1 || zeros_[i] > target_)
        throw DimensionMismatch("ZeroEmbedding: zero position out of range");
      if (i > 0 && zeros_[i] == zeros_[i - 1])
        throw DimensionMismatch("ZeroEmbedding: duplicate zero position");
    }
  }

  /// source_dim -> source_dim+1 with a single zero row/column at `zero_position`.
  static ZeroEmbedding pad_one(int source_dim, int zero_position) {
    return ZeroEmbedding(source_dim, source_dim + 1, {zero_position});
  }

  /// The 5 -> 8 lift with zero rows/columns at {1, 5, 8}.
  static ZeroEmbedding tripartite_default() { return ZeroEmbedding(5, 8, {1, 5, 8}); }

  int source_dim() const { return source_; }
  int target_dim() const { return target_; }
  const std::vector<int>& zero_positions() const { return zeros_; }

  /// Target positions (1-based, ascending) that carry the source rows in
  /// original order.
  std::vector<int> kept_positions() const {
    std::vector<int> kept;
    kept.reserve(static_cast<std::size_t>(source_));
    std::size_t z = 0;
    for (int pos = 1; pos <= target_; ++pos) {
      if (z < zeros_.size() && zeros_[z] == pos) {
        ++z;
        continue;
      }
      kept.push_back(pos);
    }
    return kept;
  }

 private:
  static std::vector<int> zeros_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  int source_;
  int target_;
  std::vector<int> zeros_;
};

/// Lift a matrix into the target space; rows/columns at the zero positions
/// are identically zero and the remaining minor equals the source in its
/// original order.
template <typename Scalar>
ComplexMatrix<Scalar> embed_with_zeros(const ComplexMatrix<Scalar>& m,
                                       const ZeroEmbedding& emb) {
  if (!is_square(m) || m.rows() != emb.source_dim())
    throw DimensionMismatch("embed_with_zeros: matrix does not match source_dim");
  const std::vector<int> kept = emb.kept_positions();
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(emb.target_dim(), emb.target_dim());
  for (int j = 0; j < emb.source_dim(); ++j)
    for (int i = 0; i < emb.source_dim(); ++i)
      out(kept[static_cast<std::size_t>(i)] - 1, kept[static_cast<std::size_t>(j)] - 1) = m(i, j);
  return out;
}

template <typename Scalar>
ComplexMatrix<Scalar> embed_with_zeros(const DensityMatrix<Scalar>& rho,
                                       const ZeroEmbedding& emb) {
  return embed_with_zeros(rho.matrix(), emb);
}

/// Inverse of embed_with_zeros: extract the kept minor, bit-exactly.
template <typename Scalar>
ComplexMatrix<Scalar> strip_zeros(const ComplexMatrix<Scalar>& m,
                                  const ZeroEmbedding& emb) {
  if (!is_square(m) || m.rows() != emb.target_dim())
    throw DimensionMismatch("strip_zeros: matrix does not match target_dim");
  const std::vector<int> kept = emb.kept_positions();
  ComplexMatrix<Scalar> out(emb.source_dim(), emb.source_dim());
  for (int j = 0; j < emb.source_dim(); ++j)
    for (int i = 0; i < emb.source_dim(); ++i)
      out(i, j) = m(kept[static_cast<std::size_t>(i)] - 1, kept[static_cast<std::size_t>(j)] - 1);
  return out;
}

enum class PartitionKind { QubitQutrit, QutritQubit, ThreeQubit };

/// Which artificial composite structure is imposed on the embedded space.
struct PartitionScheme {
  PartitionKind kind;
  std::vector<int> factor_dims;

  static PartitionScheme qubit_qutrit() { return {PartitionKind::QubitQutrit, {2, 3}}; }
  static PartitionScheme qutrit_qubit() { return {PartitionKind::QutritQubit, {3, 2}}; }
  static PartitionScheme three_qubit() { return {PartitionKind::ThreeQubit, {2, 2, 2}}; }

  int embedded_dim() const {
    return std::accumulate(factor_dims.begin(), factor_dims.end(), 1,
                           [](int a, int b) { return a * b; });
  }
};

/// Canonical partial trace over tensor factors by explicit multi-index
/// summation. `keep` lists the 1-based factor indices to retain; row-major
/// composite index convention (factor 1 is the slowest digit).
template <typename Scalar>
ComplexMatrix<Scalar> partial_trace(const ComplexMatrix<Scalar>& m,
                                    const std::vector<int>& factor_dims,
                                    const std::vector<int>& keep) {
  if (!is_square(m)) throw DimensionMismatch("partial_trace: matrix not square");
  const int nfac = static_cast<int>(factor_dims.size());
  long total = 1;
  for (int d : factor_dims) {
    if (d < 1) throw DimensionMismatch("partial_trace: factor dims must be >= 1");
    total *= d;
  }
  if (total != m.rows())
    throw DimensionMismatch("partial_trace: factor dims do not multiply to the matrix dimension");
  if (keep.empty()) throw EmptyKeepSet();

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw DimensionMismatch("partial_trace: duplicate keep index");
  for (int k : kept)
    if (k < 1 || k > nfac) throw DimensionMismatch("partial_trace: keep index out of range");

  // Row-major strides of each factor within the composite index.
  std::vector<long> stride(static_cast<std::size_t>(nfac), 1);
  for (int f = nfac - 2; f >= 0; --f)
    stride[static_cast<std::size_t>(f)] =
        stride[static_cast<std::size_t>(f + 1)] * factor_dims[static_cast<std::size_t>(f + 1)];

  std::vector<int> traced;
  for (int f = 1; f <= nfac; ++f)
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);

  // Composite-index offsets for every kept and traced digit combination.
  auto offsets_for = [&](const std::vector<int>& factors) {
    long count = 1;
    for (int f : factors) count *= factor_dims[static_cast<std::size_t>(f - 1)];
    std::vector<long> offs(static_cast<std::size_t>(count), 0);
    for (long v = 0; v < count; ++v) {
      long rem = v;
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const int d = factor_dims[static_cast<std::size_t>(*it - 1)];
        offs[static_cast<std::size_t>(v)] += (rem % d) * stride[static_cast<std::size_t>(*it - 1)];
        rem /= d;
      }
    }
    return offs;
  };

  const std::vector<long> kept_off = offsets_for(kept);
  const std::vector<long> traced_off =
      traced.empty() ? std::vector<long>{0} : offsets_for(traced);

  const long dim_out = static_cast<long>(kept_off.size());
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(dim_out, dim_out);
  for (long c = 0; c < dim_out; ++c)
    for (long r = 0; r < dim_out; ++r)
      for (long t : traced_off) out(r, c) += m(kept_off[static_cast<std::size_t>(r)] + t,
                                               kept_off[static_cast<std::size_t>(c)] + t);
  return out;
}

namespace detail {

inline void require_bipartite6(const PartitionScheme& scheme, Eigen::Index dim,
                               const char* where) {
  if (dim != 6) throw DimensionMismatch(std::string(where) + ": expected a 6x6 matrix");
  if (scheme.kind == PartitionKind::ThreeQubit)
    throw DimensionMismatch(std::string(where) + ": bipartite scheme required");
}

}  // namespace detail

/// First-factor reduction of a 6x6 state by block traces: a 2x2 of 3x3 block
/// traces for the qubit(x)qutrit split, a 3x3 of 2x2 block traces for the
/// qutrit(x)qubit split.
template <typename Scalar>
ComplexMatrix<Scalar> reduce_first_factor(const ComplexMatrix<Scalar>& rho6,
                                          const PartitionScheme& scheme) {
  if (!is_square(rho6)) throw DimensionMismatch("reduce_first_factor: matrix not square");
  detail::require_bipartite6(scheme, rho6.rows(), "reduce_first_factor");
  const int da = scheme.factor_dims[0];
  const int db = scheme.factor_dims[1];
  ComplexMatrix<Scalar> out(da, da);
  for (int b = 0; b < da; ++b)
    for (int a = 0; a < da; ++a) out(a, b) = rho6.block(a * db, b * db, db, db).trace();
  return out;
}

/// Second-factor reduction of a 6x6 state: the sum of its diagonal blocks.
template <typename Scalar>
ComplexMatrix<Scalar> reduce_second_factor(const ComplexMatrix<Scalar>& rho6,
                                           const PartitionScheme& scheme) {
  if (!is_square(rho6)) throw DimensionMismatch("reduce_second_factor: matrix not square");
  detail::require_bipartite6(scheme, rho6.rows(), "reduce_second_factor");
  const int da = scheme.factor_dims[0];
  const int db = scheme.factor_dims[1];
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(db, db);
  for (int a = 0; a < da; ++a) out += rho6.block(a * db, a * db, db, db);
  return out;
}

enum class ReductionMode { PaperFaithful, Canonical };

/// The three reductions used by the strong-subadditivity check on the 8x8
/// embedded state: the 4x4 joint states of factors (1,2) and (2,3) and the
/// 2x2 state of factor 2.
///
/// Canonical mode is the partial trace. PaperFaithful reproduces the literal
/// block-sum formulas used for the published numbers; for rho23 and r2 those
/// formulas pick up extra cross terms of the source matrix and in general
/// have non-unit trace, which is surfaced by the reports rather than
/// corrected.
template <typename Scalar = double>
struct TripartiteReductions {
  ComplexMatrix<Scalar> rho12;
  ComplexMatrix<Scalar> rho23;
  ComplexMatrix<Scalar> r2;
  ReductionMode mode = ReductionMode::Canonical;
};

template <typename Scalar>
TripartiteReductions<Scalar> tripartite_reduce(
    const ComplexMatrix<Scalar>& rho8, ReductionMode mode,
    const ZeroEmbedding& emb = ZeroEmbedding::tripartite_default()) {
  if (!is_square(rho8) || rho8.rows() != 8)
    throw DimensionMismatch("tripartite_reduce: expected an 8x8 matrix");

  TripartiteReductions<Scalar> red;
  red.mode = mode;
  if (mode == ReductionMode::Canonical) {
    red.rho12 = partial_trace(rho8, {2, 2, 2}, {1, 2});
    red.rho23 = partial_trace(rho8, {2, 2, 2}, {2, 3});
    red.r2 = partial_trace(rho8, {2, 2, 2}, {2});
    return red;
  }

  if (emb.target_dim() != 8 || emb.source_dim() != 5)
    throw DimensionMismatch("tripartite_reduce: paper-faithful mode needs a 5 -> 8 embedding");
  const std::vector<int> kept = emb.kept_positions();
  // Entry (i,j) of the source matrix inside the embedded layout; 1-based.
  auto s = [&](int i, int j) {
    return rho8(kept[static_cast<std::size_t>(i - 1)] - 1,
                kept[static_cast<std::size_t>(j - 1)] - 1);
  };
  const std::complex<Scalar> zero(0);

  ComplexMatrix<Scalar>& r12 = red.rho12;
  r12.resize(4, 4);
  r12(0, 0) = s(1, 1);          r12(0, 1) = s(1, 3);                  r12(0, 2) = s(1, 4); r12(0, 3) = zero;
  r12(1, 0) = s(3, 1);          r12(1, 1) = s(2, 2) + s(3, 3);        r12(1, 2) = s(3, 4); r12(1, 3) = s(2, 5);
  r12(2, 0) = s(4, 1);          r12(2, 1) = s(4, 3);                  r12(2, 2) = s(4, 4); r12(2, 3) = zero;
  r12(3, 0) = zero;             r12(3, 1) = s(5, 2);                  r12(3, 2) = zero;    r12(3, 3) = s(5, 5);

  ComplexMatrix<Scalar>& r23 = red.rho23;
  r23 = ComplexMatrix<Scalar>::Zero(4, 4);
  r23(1, 1) = s(1, 1) + s(1, 4) + s(4, 1) + s(4, 4);
  r23(1, 2) = s(1, 2) + s(1, 5) + s(4, 2) + s(4, 5);
  r23(1, 3) = s(1, 3) + s(4, 3);
  r23(2, 1) = s(2, 1) + s(2, 4) + s(5, 1) + s(5, 4);
  r23(2, 2) = s(2, 2) + s(2, 5) + s(5, 2) + s(5, 5);
  r23(2, 3) = s(2, 3) + s(5, 3);
  r23(3, 1) = s(3, 1) + s(3, 4);
  r23(3, 2) = s(3, 2) + s(3, 5);
  r23(3, 3) = s(3, 3);

  ComplexMatrix<Scalar>& r2m = red.r2;
  r2m.resize(2, 2);
  r2m(0, 0) = s(1, 1) + s(1, 4) + s(4, 1) + s(4, 4);
  r2m(0, 1) = s(1, 3) + s(4, 3);
  r2m(1, 0) = s(3, 1) + s(3, 4);
  r2m(1, 1) = s(2, 2) + s(3, 3) + s(2, 5) + s(5, 2) + s(5, 5);
  return red;
}

}  // namespace qent
