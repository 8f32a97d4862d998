#pragma once

// Numerical certification of algebraic independence. A family of polynomials
// is algebraically independent iff its Jacobian has full row rank at some
// point, so the rank at random points certifies the transcendence degree
// 4^n − 3n − 1. Invariance under G is checked directly alongside.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qubitinv/bloch.hpp"
#include "qubitinv/local_group.hpp"
#include "qubitinv/vector_field.hpp"

namespace qubitinv {

/// ∂(invariant ℓ)/∂(coordinate x), rows in canonical label order and columns
/// in Bloch coordinate order. Forward mode, one pass per column. Throws
/// DegenerateStateError.
Eigen::MatrixXcd jacobian(const BlochState& b, const VectorField& gamma);

struct RankReport {
  int n = 0;
  std::string gamma;
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> singular_values;  // descending
  std::size_t rank = 0;
  double threshold = 0.0;  // relative
  double rank_ratio = 0.0;                // σ_rank / σ_1 (0 if rank == 0)
  std::optional<double> next_ratio;       // σ_{rank+1} / σ_1 when rank < rows
};

/// rank = #{σ_k > rel_tol · σ_1} from a complex SVD.
RankReport rank(const Eigen::MatrixXcd& j, double rel_tol = 1e-8);

/// Scales each nonzero row to unit 2-norm. Leaves the rank unchanged.
Eigen::MatrixXcd equilibrate_rows(const Eigen::MatrixXcd& j);

struct IndependenceOptions {
  double rel_tol = 1e-8;
  /// Points with σ_rank/σ_1 below this are treated as non-generic and redrawn.
  double margin = 1e-6;
  int max_redraws = 20;
  bool equilibrate = true;
};

struct IndependenceResult {
  bool passed = false;
  std::size_t expected_rank = 0;
  std::vector<RankReport> reports;
  int redraws = 0;
};

/// Rank at `trials` random non-degenerate points; passes iff every point has
/// rank 4^n − 3n − 1. Requires 2 <= n <= 4.
IndependenceResult verify_independence(int n, const VectorField& gamma, int trials,
                                       std::uint64_t seed, const IndependenceOptions& opts = {});

struct InvarianceOptions {
  bool identity_only = false;
  std::vector<SampleMode> modes{SampleMode::Compact, SampleMode::Complex};
};

struct InvarianceResult {
  double max_deviation = 0.0;  // max |v' − v| / (1 + |v|)
  int comparisons = 0;
  bool passed = false;
};

/// Max relative change of any invariant under random group elements, over
/// random states. Requires 2 <= n <= 5.
InvarianceResult verify_invariance(int n, const VectorField& gamma, int trials,
                                   std::uint64_t seed, double tol,
                                   const InvarianceOptions& opts = {});

/// Same check for one given state.
InvarianceResult verify_invariance(const BlochState& b, const VectorField& gamma, int trials,
                                   std::uint64_t seed, double tol,
                                   const InvarianceOptions& opts = {});

/// max over labels of |x − y| / (1 + |x|).
double max_relative_deviation(const std::vector<cplx>& x, const std::vector<cplx>& y);

}  // namespace qubitinv
