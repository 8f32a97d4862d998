#pragma once

// The Lie algebra sl(2) in Pauli coordinates.
//
// A traceless 2x2 operator A = x·σx + y·σy + z·σz is stored as the coordinate
// triple (x, y, z). The scalar product is the bilinear form ½tr(AB), which in
// these coordinates is the plain dot product: no complex conjugation anywhere.
// The bracket [A,B] = AB − BA becomes 2i·(u × v).
//
// Vec3T / Mat3T are templated on the scalar so the same formulas run on
// std::complex<double> and on forward-mode dual numbers.

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Core>

namespace qubitinv {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

template <typename T>
struct Vec3T {
  std::array<T, 3> c{};

  constexpr T& operator[](std::size_t k) { return c[k]; }
  constexpr const T& operator[](std::size_t k) const { return c[k]; }

  friend Vec3T operator+(const Vec3T& u, const Vec3T& v) {
    return {{u[0] + v[0], u[1] + v[1], u[2] + v[2]}};
  }
  friend Vec3T operator-(const Vec3T& u, const Vec3T& v) {
    return {{u[0] - v[0], u[1] - v[1], u[2] - v[2]}};
  }
  friend Vec3T operator-(const Vec3T& u) { return {{-u[0], -u[1], -u[2]}}; }

  template <typename S>
  friend Vec3T operator*(const S& s, const Vec3T& u) {
    return {{s * u[0], s * u[1], s * u[2]}};
  }

  friend bool operator==(const Vec3T&, const Vec3T&) = default;
};

/// Element of 𝒱_i ⊗ 𝒱_j; entry (a, b) is the coefficient of σ_a ⊗ σ_b.
template <typename T>
struct Mat3T {
  std::array<std::array<T, 3>, 3> m{};

  constexpr T& operator()(std::size_t a, std::size_t b) { return m[a][b]; }
  constexpr const T& operator()(std::size_t a, std::size_t b) const {
    return m[a][b];
  }

  static Mat3T identity() {
    Mat3T r;
    for (std::size_t k = 0; k < 3; ++k) r(k, k) = T(1.0);
    return r;
  }

  Mat3T transpose() const {
    Mat3T r;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) r(a, b) = m[b][a];
    return r;
  }

  friend Mat3T operator*(const Mat3T& x, const Mat3T& y) {
    Mat3T r;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        T s = x(a, 0) * y(0, b);
        s = s + x(a, 1) * y(1, b);
        s = s + x(a, 2) * y(2, b);
        r(a, b) = s;
      }
    return r;
  }

  friend Vec3T<T> operator*(const Mat3T& x, const Vec3T<T>& v) {
    Vec3T<T> r;
    for (std::size_t a = 0; a < 3; ++a)
      r[a] = x(a, 0) * v[0] + x(a, 1) * v[1] + x(a, 2) * v[2];
    return r;
  }

  friend bool operator==(const Mat3T&, const Mat3T&) = default;
};

using Vec3C = Vec3T<cplx>;
using Mat3C = Mat3T<cplx>;

inline Vec3C unit_vector(std::size_t axis) {
  Vec3C v;
  v[axis] = 1.0;
  return v;
}

/// Analytical scalar product ½tr(UV) = u·v (bilinear).
template <typename T>
T killing(const Vec3T<T>& u, const Vec3T<T>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <typename T>
T norm2(const Vec3T<T>& u) {
  return killing(u, u);
}

/// Formal cross product of coordinate triples.
template <typename T>
Vec3T<T> cross(const Vec3T<T>& u, const Vec3T<T>& v) {
  return {{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
           u[0] * v[1] - u[1] * v[0]}};
}

/// Commutator [U, V] = 2i·(u × v).
template <typename T>
Vec3T<T> bracket(const Vec3T<T>& u, const Vec3T<T>& v) {
  return (2.0 * kI) * cross(u, v);
}

/// ⟨[u, v], w⟩, alternating in its arguments.
template <typename T>
T triple(const Vec3T<T>& u, const Vec3T<T>& v, const Vec3T<T>& w) {
  return killing(bracket(u, v), w);
}

/// Contracts the first slot: w[b] = Σ_a C[a][b]·v[a].
template <typename T>
Vec3T<T> contract_left(const Mat3T<T>& c, const Vec3T<T>& v) {
  Vec3T<T> w;
  for (std::size_t b = 0; b < 3; ++b)
    w[b] = c(0, b) * v[0] + c(1, b) * v[1] + c(2, b) * v[2];
  return w;
}

/// Contracts the second slot: w[a] = Σ_b C[a][b]·v[b].
template <typename T>
Vec3T<T> contract_right(const Mat3T<T>& c, const Vec3T<T>& v) {
  Vec3T<T> w;
  for (std::size_t a = 0; a < 3; ++a)
    w[a] = c(a, 0) * v[0] + c(a, 1) * v[1] + c(a, 2) * v[2];
  return w;
}

/// Rank-one tensor u ⊗ v.
template <typename T>
Mat3T<T> outer(const Vec3T<T>& u, const Vec3T<T>& v) {
  Mat3T<T> r;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) r(a, b) = u[a] * v[b];
  return r;
}

// 2x2 conversion boundary.

using Mat2C = Eigen::Matrix2cd;

/// σ_x, σ_y, σ_z for axis 0, 1, 2.
const Mat2C& pauli(std::size_t axis);

struct PauliParts {
  cplx trace_part;
  Vec3C traceless;
};

/// m = t·I + v·σ with t = ½tr(m) and v_a = ½tr(σ_a m).
PauliParts pauli_decompose(const Mat2C& m);

Mat2C pauli_compose(cplx t, const Vec3C& v);

double max_abs(const Vec3C& v);
double max_abs(const Mat3C& m);

}  // namespace qubitinv
