#pragma once

// G = ∏_j PGL(V_j) ≅ ∏_j SO(𝒱_j). Two pictures are kept side by side: unimodular
// 2x2 lifts acting on density operators by conjugation, and complex
// orthogonal 3x3 factors acting slot-wise on Bloch tensors. adjoint() maps the
// first to the second.

#include <cstdint>
#include <vector>

#include "qubitinv/algebra.hpp"
#include "qubitinv/bloch.hpp"

namespace qubitinv {

inline constexpr double kGroupTolerance = 1e-10;

/// n factors R_j with R_jᵀR_j = I and det R_j = 1 (transpose, not adjoint).
class LocalRotation {
 public:
  /// Validates every factor against kGroupTolerance; throws NotOrthogonal.
  explicit LocalRotation(std::vector<Mat3C> factors);

  static LocalRotation identity(int n);

  int n() const noexcept { return static_cast<int>(factors_.size()); }
  const Mat3C& factor(int j) const { return factors_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Mat3C>& factors() const noexcept { return factors_; }

  /// Factor-wise product (g·h)_j = g_j h_j.
  friend LocalRotation operator*(const LocalRotation& g, const LocalRotation& h);

  LocalRotation inverse() const;

  friend bool operator==(const LocalRotation&, const LocalRotation&) = default;

 private:
  struct Unchecked {};
  LocalRotation(std::vector<Mat3C> factors, Unchecked) : factors_(std::move(factors)) {}

  std::vector<Mat3C> factors_;
};

/// n factors g_j ∈ SL(2, ℂ), the lift used for conjugation on density operators.
class LocalSpecial {
 public:
  /// Throws NotUnimodular if some |det g_j − 1| > kGroupTolerance.
  explicit LocalSpecial(std::vector<Mat2C> factors);

  int n() const noexcept { return static_cast<int>(factors_.size()); }
  const Mat2C& factor(int j) const { return factors_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Mat2C>& factors() const noexcept { return factors_; }

 private:
  std::vector<Mat2C> factors_;
};

/// R[a][b] = ½tr(σ_a g σ_b g⁻¹). Throws NotUnimodular.
Mat3C adjoint(const Mat2C& g);

LocalRotation adjoint(const LocalSpecial& g);

/// Orthogonality defect max|RᵀR − I| and |det R − 1|.
double orthogonality_defect(const Mat3C& r);
cplx determinant(const Mat3C& r);

enum class SampleMode { Compact, Complex };

/// Deterministic in (n, seed, mode). Compact: real SO(3) factors as adjoints
/// of Haar-distributed SU(2) elements. Complex: exp(K) with K complex
/// antisymmetric, entries of modulus ≤ 1.
LocalRotation sample(int n, std::uint64_t seed, SampleMode mode);

/// exp(k·σ) per site with k complex, |k_a| ≤ 1; unimodular since σ is traceless.
LocalSpecial sample_special(int n, std::uint64_t seed);

/// ρ'_I = (⊗_{j∈I} R_j) ρ_I. Throws SizeMismatch.
BlochState act_bloch(const LocalRotation& g, const BlochState& b);

/// (⊗g_j) ρ (⊗g_j)⁻¹. Throws SizeMismatch.
DensityOperator act_density(const LocalSpecial& g, const DensityOperator& rho);

/// Exponential of the antisymmetric matrix [k]_× (so exp(K)v = rotation of v).
Mat3C exp_antisymmetric(const Vec3C& k);

/// Applies the 3x3 matrix `m` to slot `slot` of a rank-`rank` tensor in place.
template <typename T, typename M>
void apply_slot(std::span<T> tensor, std::size_t rank, std::size_t slot, const M& m) {
  const std::size_t inner = pow3(rank - 1 - slot);
  const std::size_t outer = tensor.size() / (3 * inner);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t base = o * 3 * inner + i;
      const T x0 = tensor[base], x1 = tensor[base + inner], x2 = tensor[base + 2 * inner];
      for (std::size_t a = 0; a < 3; ++a)
        tensor[base + a * inner] = m(a, 0) * x0 + m(a, 1) * x1 + m(a, 2) * x2;
    }
}

}  // namespace qubitinv
