#pragma once

// Endomorphism model <-> Bloch (correlation tensor) model.
//
// A BlochState stores, for every nonempty subset I of {1..n}, the raw
// correlations ρ_I[φ] = tr(σ_{I,φ} ρ) for all φ: I -> {x,y,z}. The tensor for I
// is flattened with the smallest site slowest-varying and per-site axis order
// x, y, z. Subsets are laid out by cardinality, then lexicographically; this
// is also the column order of invariant Jacobians.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qubitinv/algebra.hpp"
#include "qubitinv/error.hpp"

namespace qubitinv {

/// Largest site count for the 2^n x 2^n matrix model.
inline constexpr int kMaxMatrixSites = 8;
/// Largest site count for the Bloch-only path.
inline constexpr int kMaxBlochSites = 10;

inline constexpr double kTraceTolerance = 1e-9;

/// Nonempty, strictly increasing list of 1-based site indices.
class SubsetId {
 public:
  explicit SubsetId(std::vector<int> sites);

  static SubsetId from_mask(unsigned mask);
  /// Parses "1,2,4".
  static SubsetId parse(std::string_view key);

  const std::vector<int>& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  int max_site() const noexcept { return sites_.back(); }
  /// Bit (j-1) set for each site j.
  unsigned mask() const noexcept;
  /// Comma-joined ascending indices, e.g. "1,2".
  std::string key() const;

  friend bool operator==(const SubsetId&, const SubsetId&) = default;

 private:
  std::vector<int> sites_;
};

class SubsetLayout {
 public:
  explicit SubsetLayout(int n);

  int n() const noexcept { return n_; }
  /// Subset masks in canonical order.
  const std::vector<unsigned>& masks() const noexcept { return masks_; }
  std::size_t offset(unsigned mask) const { return offset_[mask]; }
  std::size_t length(unsigned mask) const { return length_[mask]; }
  /// 4^n − 1.
  std::size_t total() const noexcept { return total_; }

 private:
  int n_;
  std::vector<unsigned> masks_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> length_;
  std::size_t total_ = 0;
};

/// Shared layout for n in [1, kMaxBlochSites].
const SubsetLayout& layout_for(int n);

std::size_t pow3(std::size_t k);

template <typename T>
class BasicBlochState {
 public:
  /// All components zero (the maximally mixed state).
  explicit BasicBlochState(int n) : layout_(&layout_for(n)), data_(layout_->total()) {}

  BasicBlochState(int n, std::vector<T> coordinates)
      : layout_(&layout_for(n)), data_(std::move(coordinates)) {
    if (data_.size() != layout_->total())
      throw Error(ErrorCode::SizeMismatch,
                  "expected " + std::to_string(layout_->total()) +
                      " Bloch coordinates, got " + std::to_string(data_.size()));
  }

  int n() const noexcept { return layout_->n(); }
  const SubsetLayout& layout() const noexcept { return *layout_; }

  /// All 4^n − 1 scalars in canonical order.
  std::span<const T> coordinates() const noexcept { return data_; }
  std::span<T> coordinates() noexcept { return data_; }

  std::span<const T> component(unsigned mask) const {
    return {data_.data() + layout_->offset(mask), layout_->length(mask)};
  }
  std::span<T> component(unsigned mask) {
    return {data_.data() + layout_->offset(mask), layout_->length(mask)};
  }

  std::span<const T> component(const SubsetId& subset) const {
    check(subset);
    return component(subset.mask());
  }
  std::span<T> component(const SubsetId& subset) {
    check(subset);
    return component(subset.mask());
  }

  /// ρ_j.
  Vec3T<T> one_point(int j) const {
    auto c = component(1u << (j - 1));
    return {{c[0], c[1], c[2]}};
  }

  /// ρ_{ij} read with i as the first slot; transposes the stored tensor when
  /// i > j.
  Mat3T<T> two_point(int i, int j) const {
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    auto c = component((1u << (lo - 1)) | (1u << (hi - 1)));
    Mat3T<T> m;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) m(a, b) = c[3 * a + b];
    return i < j ? m : m.transpose();
  }

  friend bool operator==(const BasicBlochState& x, const BasicBlochState& y) {
    return x.n() == y.n() && x.data_ == y.data_;
  }

 private:
  void check(const SubsetId& subset) const {
    if (subset.max_site() > n())
      throw Error(ErrorCode::BadSubset, "subset {" + subset.key() +
                                            "} out of range for n=" +
                                            std::to_string(n()));
  }

  const SubsetLayout* layout_;
  std::vector<T> data_;
};

using BlochState = BasicBlochState<cplx>;

/// Trace-one 2^n x 2^n matrix; qubit 1 is the most significant bit.
class DensityOperator {
 public:
  DensityOperator(int n, Eigen::MatrixXcd matrix);

  int n() const noexcept { return n_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  cplx trace() const { return matrix_.trace(); }

 private:
  int n_;
  Eigen::MatrixXcd matrix_;
};

/// ρ_I[φ] = tr(σ_{I,φ} ρ). Throws TraceNotOne if |tr ρ − 1| > kTraceTolerance.
BlochState to_bloch(const DensityOperator& rho);

/// 2^{−n}(I + Σ_I Σ_φ b_I[φ] σ_{I,φ}).
DensityOperator from_bloch(const BlochState& b);

std::vector<cplx> component(const BlochState& b, const SubsetId& subset);

}  // namespace qubitinv
