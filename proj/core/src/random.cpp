#include "qubitinv/random.hpp"

namespace qubitinv {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

cplx uniform_square(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

cplx uniform_disk(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double re = u(rng);
    const double im = u(rng);
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

BlochState random_bloch(int n, Rng& rng) {
  BlochState b(n);
  for (auto& x : b.coordinates()) x = uniform_square(rng);
  return b;
}

DensityOperator random_trace_one(int n, Rng& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) m(r, c) = uniform_disk(rng);
  const cplx shift = (1.0 - m.trace()) / static_cast<double>(dim);
  m.diagonal().array() += shift;
  return DensityOperator(n, std::move(m));
}

DensityOperator random_hermitian_density(int n, Rng& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) a(r, c) = uniform_disk(rng);
  Eigen::MatrixXcd m = a * a.adjoint();
  m /= m.trace().real();
  return DensityOperator(n, std::move(m));
}

}  // namespace qubitinv
