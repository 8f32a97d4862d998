#pragma once

// Forward-mode dual numbers over the complex field.
//
//   (a + bε)(c + dε) = ac + (ad + bc)ε,   ε² = 0
//
// Every invariant is a polynomial in the Bloch components, so only the ring
// operations are needed and the derivative carried along is the holomorphic
// one.

#include <complex>

namespace qubitinv {

struct Dual {
  std::complex<double> value{};
  std::complex<double> derivative{};

  constexpr Dual() = default;
  constexpr Dual(std::complex<double> v) : value(v) {}  // NOLINT: constants
  constexpr Dual(double v) : value(v) {}                // NOLINT: constants
  constexpr Dual(std::complex<double> v, std::complex<double> d)
      : value(v), derivative(d) {}

  static constexpr Dual variable(std::complex<double> v) { return {v, 1.0}; }

  friend Dual operator+(const Dual& u, const Dual& v) {
    return {u.value + v.value, u.derivative + v.derivative};
  }
  friend Dual operator-(const Dual& u, const Dual& v) {
    return {u.value - v.value, u.derivative - v.derivative};
  }
  friend Dual operator-(const Dual& u) { return {-u.value, -u.derivative}; }
  friend Dual operator*(const Dual& u, const Dual& v) {
    return {u.value * v.value, u.derivative * v.value + u.value * v.derivative};
  }
  friend Dual operator*(std::complex<double> s, const Dual& u) {
    return {s * u.value, s * u.derivative};
  }
  friend Dual operator*(const Dual& u, std::complex<double> s) {
    return {u.value * s, u.derivative * s};
  }
  friend Dual operator*(double s, const Dual& u) {
    return {s * u.value, s * u.derivative};
  }
  friend Dual operator*(const Dual& u, double s) { return s * u; }

  Dual& operator+=(const Dual& v) { return *this = *this + v; }
  Dual& operator*=(const Dual& v) { return *this = *this * v; }

  friend bool operator==(const Dual&, const Dual&) = default;
};

/// Value part of a scalar; identity on plain complex numbers.
inline std::complex<double> value_of(std::complex<double> x) { return x; }
inline std::complex<double> value_of(const Dual& x) { return x.value; }

}  // namespace qubitinv
