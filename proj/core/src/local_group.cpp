#include "qubitinv/local_group.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qubitinv/random.hpp"

namespace qubitinv {

namespace {

Mat3C from_eigen(const Eigen::Matrix3cd& m) {
  Mat3C r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r(a, b) = m(a, b);
  return r;
}

void check_same_n(int gn, int bn) {
  if (gn != bn)
    throw Error(ErrorCode::SizeMismatch, "group element has " + std::to_string(gn) +
                                             " sites, state has " + std::to_string(bn));
}

}  // namespace

cplx determinant(const Mat3C& r) {
  return r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
         r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
         r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
}

double orthogonality_defect(const Mat3C& r) {
  const Mat3C g = r.transpose() * r;
  double d = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      d = std::max(d, std::abs(g(a, b) - (a == b ? 1.0 : 0.0)));
  return std::max(d, std::abs(determinant(r) - 1.0));
}

LocalRotation::LocalRotation(std::vector<Mat3C> factors) : factors_(std::move(factors)) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const double scale = std::max(1.0, max_abs(factors_[j]));
    if (orthogonality_defect(factors_[j]) > kGroupTolerance * scale * scale * scale)
      throw Error(ErrorCode::NotOrthogonal,
                  "factor " + std::to_string(j + 1) + " is not in SO(3, C)");
  }
}

LocalRotation LocalRotation::identity(int n) {
  return LocalRotation(std::vector<Mat3C>(static_cast<std::size_t>(n), Mat3C::identity()),
                       Unchecked{});
}

LocalRotation operator*(const LocalRotation& g, const LocalRotation& h) {
  check_same_n(g.n(), h.n());
  std::vector<Mat3C> f(g.factors_.size());
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = g.factors_[j] * h.factors_[j];
  return LocalRotation(std::move(f), LocalRotation::Unchecked{});
}

LocalRotation LocalRotation::inverse() const {
  std::vector<Mat3C> f(factors_.size());
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = factors_[j].transpose();
  return LocalRotation(std::move(f), Unchecked{});
}

LocalSpecial::LocalSpecial(std::vector<Mat2C> factors) : factors_(std::move(factors)) {
  for (std::size_t j = 0; j < factors_.size(); ++j)
    if (std::abs(factors_[j].determinant() - 1.0) > kGroupTolerance)
      throw Error(ErrorCode::NotUnimodular,
                  "factor " + std::to_string(j + 1) + " has determinant != 1");
}

Mat3C adjoint(const Mat2C& g) {
  if (std::abs(g.determinant() - 1.0) > kGroupTolerance)
    throw Error(ErrorCode::NotUnimodular, "adjoint requires det(g) = 1");
  const Mat2C inv = g.inverse();
  Mat3C r;
  for (std::size_t b = 0; b < 3; ++b) {
    const Mat2C conj = g * pauli(b) * inv;
    for (std::size_t a = 0; a < 3; ++a) r(a, b) = 0.5 * (pauli(a) * conj).trace();
  }
  return r;
}

LocalRotation adjoint(const LocalSpecial& g) {
  std::vector<Mat3C> f;
  f.reserve(g.factors().size());
  for (const auto& x : g.factors()) f.push_back(adjoint(x));
  return LocalRotation(std::move(f));
}

Mat3C exp_antisymmetric(const Vec3C& k) {
  Eigen::Matrix3cd m;
  m << 0.0, -k[2], k[1],
       k[2], 0.0, -k[0],
       -k[1], k[0], 0.0;
  return from_eigen(m.exp());
}

LocalRotation sample(int n, std::uint64_t seed, SampleMode mode) {
  Rng rng(derive_seed(seed, mode == SampleMode::Compact ? 0x51 : 0xC0));
  std::vector<Mat3C> f;
  f.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (mode == SampleMode::Compact) {
      // Haar on SU(2) = uniform unit quaternion.
      std::normal_distribution<double> gauss;
      double q[4];
      double norm = 0.0;
      do {
        norm = 0.0;
        for (double& x : q) {
          x = gauss(rng);
          norm += x * x;
        }
      } while (norm < 1e-12);
      norm = std::sqrt(norm);
      for (double& x : q) x /= norm;
      const Mat2C g = q[0] * Mat2C::Identity() -
                      kI * (q[1] * pauli(0) + q[2] * pauli(1) + q[3] * pauli(2));
      Mat3C r = adjoint(g);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) r(a, b) = r(a, b).real();
      f.push_back(r);
    } else {
      Vec3C k;
      for (std::size_t a = 0; a < 3; ++a) k[a] = uniform_disk(rng);
      f.push_back(exp_antisymmetric(k));
    }
  }
  return LocalRotation(std::move(f));
}

LocalSpecial sample_special(int n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x52));
  std::vector<Mat2C> f;
  f.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Mat2C x = Mat2C::Zero();
    for (std::size_t a = 0; a < 3; ++a) x += uniform_disk(rng) * pauli(a);
    f.push_back(x.exp());
  }
  return LocalSpecial(std::move(f));
}

BlochState act_bloch(const LocalRotation& g, const BlochState& b) {
  check_same_n(g.n(), b.n());
  BlochState out = b;
  for (unsigned mask : b.layout().masks()) {
    const SubsetId subset = SubsetId::from_mask(mask);
    auto tensor = out.component(mask);
    for (std::size_t slot = 0; slot < subset.size(); ++slot)
      apply_slot(tensor, subset.size(), slot, g.factor(subset.sites()[slot]));
  }
  return out;
}

DensityOperator act_density(const LocalSpecial& g, const DensityOperator& rho) {
  check_same_n(g.n(), rho.n());
  Eigen::MatrixXcd big = g.factor(1);
  Eigen::MatrixXcd big_inv = g.factor(1).inverse();
  for (int j = 2; j <= g.n(); ++j) {
    big = Eigen::kroneckerProduct(big, g.factor(j)).eval();
    big_inv = Eigen::kroneckerProduct(big_inv, Eigen::MatrixXcd(g.factor(j).inverse())).eval();
  }
  return DensityOperator(rho.n(), big * rho.matrix() * big_inv);
}

}  // namespace qubitinv
