#pragma once

// Scalar-generic evaluation of the invariant basis. Instantiated with cplx for
// values and with Dual for Jacobian columns; both share this single code path.

#include <vector>

#include "qubitinv/algebra.hpp"
#include "qubitinv/bloch.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/local_group.hpp"
#include "qubitinv/vector_field.hpp"

namespace qubitinv::detail {

template <typename T>
struct FrameT {
  std::vector<Vec3T<T>> a, b, c;

  /// Rows a_j, b_j, c_j; F(r, p) = f_{j,r}[p].
  Mat3T<T> matrix(int j) const {
    const auto k = static_cast<std::size_t>(j - 1);
    Mat3T<T> m;
    for (std::size_t p = 0; p < 3; ++p) {
      m(0, p) = a[k][p];
      m(1, p) = b[k][p];
      m(2, p) = c[k][p];
    }
    return m;
  }
};

template <typename T>
FrameT<T> build_frame(const BasicBlochState<T>& s, const VectorField& gamma) {
  const int n = s.n();
  FrameT<T> f;
  f.a.reserve(n);
  f.b.reserve(n);
  f.c.reserve(n);
  for (int j = 1; j <= n; ++j) {
    const int k = gamma.out(j);
    const Vec3T<T> a = s.one_point(j);
    const Vec3T<T> b = bracket(contract_right(s.two_point(j, k), s.one_point(k)), a);
    f.a.push_back(a);
    f.b.push_back(b);
    f.c.push_back(bracket(a, b));
  }
  return f;
}

/// Appends the basis values for `s` in canonical label order.
template <typename T>
void evaluate_basis(const BasicBlochState<T>& s, const VectorField& gamma, const FrameT<T>& f,
                    std::vector<T>& out) {
  const int n = s.n();
  for (int j = 0; j < n; ++j) {
    out.push_back(norm2(f.a[j]));
    out.push_back(norm2(f.b[j]));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Mat3T<T> c = s.two_point(i, j);
      const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
      const Vec3T<T> cb = contract_left(c, f.b[ii]);
      const Vec3T<T> cc = contract_left(c, f.c[ii]);
      out.push_back(killing(cb, f.b[jj]));
      out.push_back(killing(cb, f.c[jj]));
      out.push_back(killing(cc, f.b[jj]));
      out.push_back(killing(cc, f.c[jj]));
      out.push_back(killing(contract_left(c, f.a[ii]), f.a[jj]));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || gamma.out(j) == i) continue;
      const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
      const Vec3T<T> x = contract_left(s.two_point(i, j), f.a[ii]);
      out.push_back(killing(x, f.b[jj]));
      out.push_back(killing(x, f.c[jj]));
    }
  // θ_{I,·} for all φ at once: (⊗_{j∈I} F_j) ρ_I, slot by slot.
  std::vector<T> work;
  for (unsigned mask : s.layout().masks()) {
    const SubsetId subset = SubsetId::from_mask(mask);
    if (subset.size() < 3) continue;
    const auto comp = s.component(mask);
    work.assign(comp.begin(), comp.end());
    for (std::size_t slot = 0; slot < subset.size(); ++slot)
      apply_slot(std::span<T>(work), subset.size(), slot, f.matrix(subset.sites()[slot]));
    out.insert(out.end(), work.begin(), work.end());
  }
}

}  // namespace qubitinv::detail
