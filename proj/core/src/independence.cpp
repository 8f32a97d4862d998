#include "qubitinv/independence.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "qubitinv/basis_eval.hpp"
#include "qubitinv/dual.hpp"
#include "qubitinv/error.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/random.hpp"

namespace qubitinv {

Eigen::MatrixXcd jacobian(const BlochState& b, const VectorField& gamma) {
  // Degeneracy is checked on the value path first.
  const std::size_t rows = assemble(b, gamma).size();
  const auto coords = b.coordinates();
  const std::size_t cols = coords.size();

  std::vector<Dual> seeded(coords.begin(), coords.end());
  BasicBlochState<Dual> s(b.n(), std::move(seeded));
  Eigen::MatrixXcd j(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::vector<Dual> out;
  out.reserve(rows);
  for (std::size_t x = 0; x < cols; ++x) {
    s.coordinates()[x].derivative = 1.0;
    out.clear();
    detail::evaluate_basis(s, gamma, detail::build_frame(s, gamma), out);
    for (std::size_t r = 0; r < rows; ++r)
      j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) = out[r].derivative;
    s.coordinates()[x].derivative = 0.0;
  }
  return j;
}

RankReport rank(const Eigen::MatrixXcd& j, double rel_tol) {
  RankReport r;
  r.rows = static_cast<std::size_t>(j.rows());
  r.cols = static_cast<std::size_t>(j.cols());
  r.threshold = rel_tol;
  if (j.size() == 0) return r;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(j);
  const auto& sv = svd.singularValues();
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double top = r.singular_values.empty() ? 0.0 : r.singular_values.front();
  if (top == 0.0) return r;
  for (double s : r.singular_values)
    if (s > rel_tol * top) ++r.rank;
  r.rank_ratio = r.rank ? r.singular_values[r.rank - 1] / top : 0.0;
  if (r.rank < r.rows)
    r.next_ratio = r.rank < r.singular_values.size() ? r.singular_values[r.rank] / top : 0.0;
  return r;
}

Eigen::MatrixXcd equilibrate_rows(const Eigen::MatrixXcd& j) {
  Eigen::MatrixXcd out = j;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    const double norm = out.row(r).norm();
    if (norm > 0.0) out.row(r) /= norm;
  }
  return out;
}

IndependenceResult verify_independence(int n, const VectorField& gamma, int trials,
                                       std::uint64_t seed, const IndependenceOptions& opts) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "independence check needs n >= 2");
  if (n > 4) throw Error(ErrorCode::TooLarge, "independence check supports n <= 4");
  if (gamma.n() != n) throw Error(ErrorCode::SizeMismatch, "vector field and n differ");

  IndependenceResult result;
  result.expected_rank = static_cast<std::size_t>(count(n).total_basis);
  result.passed = true;
  std::uint64_t stream = 0;
  for (int t = 0; t < trials; ++t) {
    std::optional<RankReport> accepted;
    for (int attempt = 0; attempt <= opts.max_redraws && !accepted; ++attempt) {
      const std::uint64_t point_seed = derive_seed(seed, stream++);
      Rng rng(point_seed);
      const BlochState b = random_bloch(n, rng);
      Eigen::MatrixXcd j;
      try {
        j = jacobian(b, gamma);
      } catch (const DegenerateStateError&) {
        ++result.redraws;
        continue;
      }
      RankReport report = rank(opts.equilibrate ? equilibrate_rows(j) : j, opts.rel_tol);
      report.n = n;
      report.gamma = gamma.describe();
      report.seed = point_seed;
      const bool well_separated =
          report.rank == result.expected_rank && report.rank_ratio >= opts.margin;
      if (well_separated || attempt == opts.max_redraws) {
        accepted = std::move(report);
      } else {
        ++result.redraws;
      }
    }
    if (!accepted || accepted->rank != result.expected_rank) result.passed = false;
    if (accepted) result.reports.push_back(std::move(*accepted));
  }
  return result;
}

double max_relative_deviation(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::SizeMismatch, "invariant vectors differ in length");
  double worst = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    worst = std::max(worst, std::abs(y[k] - x[k]) / (1.0 + std::abs(x[k])));
  return worst;
}

namespace {

void compare_under_group(const BlochState& b, const std::vector<cplx>& base,
                         const VectorField& gamma, std::uint64_t group_seed,
                         const InvarianceOptions& opts, InvarianceResult& result) {
  if (opts.identity_only) {
    const auto moved = assemble(act_bloch(LocalRotation::identity(b.n()), b), gamma);
    result.max_deviation = std::max(result.max_deviation, max_relative_deviation(base, moved.values));
    ++result.comparisons;
    return;
  }
  for (SampleMode mode : opts.modes) {
    const LocalRotation g = sample(b.n(), group_seed, mode);
    const auto moved = assemble(act_bloch(g, b), gamma, 0.0);
    result.max_deviation = std::max(result.max_deviation, max_relative_deviation(base, moved.values));
    ++result.comparisons;
  }
}

}  // namespace

InvarianceResult verify_invariance(int n, const VectorField& gamma, int trials,
                                   std::uint64_t seed, double tol, const InvarianceOptions& opts) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "invariance check needs n >= 2");
  if (n > 5) throw Error(ErrorCode::TooLarge, "invariance check supports n <= 5");
  if (gamma.n() != n) throw Error(ErrorCode::SizeMismatch, "vector field and n differ");
  InvarianceResult result;
  std::uint64_t stream = 0;
  for (int t = 0; t < trials; ++t) {
    for (;;) {
      Rng rng(derive_seed(seed, stream++));
      const BlochState b = random_bloch(n, rng);
      std::vector<cplx> base;
      try {
        base = assemble(b, gamma).values;
      } catch (const DegenerateStateError&) {
        continue;
      }
      compare_under_group(b, base, gamma, derive_seed(seed, stream++), opts, result);
      break;
    }
  }
  result.passed = result.max_deviation <= tol;
  return result;
}

InvarianceResult verify_invariance(const BlochState& b, const VectorField& gamma, int trials,
                                   std::uint64_t seed, double tol, const InvarianceOptions& opts) {
  InvarianceResult result;
  const auto base = assemble(b, gamma).values;
  for (int t = 0; t < trials; ++t)
    compare_under_group(b, base, gamma, derive_seed(seed, static_cast<std::uint64_t>(t)), opts,
                        result);
  result.passed = result.max_deviation <= tol;
  return result;
}

}  // namespace qubitinv
