#include "qubitinv/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "qubitinv/error.hpp"

namespace qubitinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAVectorField: return "NotAVectorField";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::IsGammaEdge: return "IsGammaEdge";
    case ErrorCode::DegenerateState: return "DegenerateState";
    case ErrorCode::DegenerateFlag: return "DegenerateFlag";
    case ErrorCode::BranchFailure: return "BranchFailure";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::BadKind: return "BadKind";
    case ErrorCode::BadN: return "BadN";
  }
  return "Unknown";
}

namespace {

std::string site_list(const std::vector<int>& sites) {
  std::string s;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(sites[k]);
  }
  return s;
}

}  // namespace

DegenerateStateError::DegenerateStateError(std::vector<int> sites)
    : Error(ErrorCode::DegenerateState,
            "degenerate state at sites {" + site_list(sites) + "}"),
      sites_(std::move(sites)) {}

const Mat2C& pauli(std::size_t axis) {
  static const std::array<Mat2C, 3> sigma = [] {
    std::array<Mat2C, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -kI, kI, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma.at(axis);
}

PauliParts pauli_decompose(const Mat2C& m) {
  // Closed forms of ½tr(σ_a m); exact for dyadic entries.
  PauliParts p;
  p.trace_part = 0.5 * (m(0, 0) + m(1, 1));
  p.traceless[0] = 0.5 * (m(0, 1) + m(1, 0));
  p.traceless[1] = 0.5 * kI * (m(0, 1) - m(1, 0));
  p.traceless[2] = 0.5 * (m(0, 0) - m(1, 1));
  return p;
}

Mat2C pauli_compose(cplx t, const Vec3C& v) {
  Mat2C m;
  m(0, 0) = t + v[2];
  m(1, 1) = t - v[2];
  m(0, 1) = v[0] - kI * v[1];
  m(1, 0) = v[0] + kI * v[1];
  return m;
}

double max_abs(const Vec3C& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

double max_abs(const Mat3C& m) {
  double r = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) r = std::max(r, std::abs(m(a, b)));
  return r;
}

}  // namespace qubitinv
