#pragma once

// Flag pairs, the flag-bundle isomorphism, the torsor norm map, and the
// rational section.
//
// Bundle side. For a permutation-type Γ every vertex j has a unique incoming
// edge i→j, and a longitudinal-transversal tensor C_ij ∈ Span(a_i) ⊗ a_j^⊥
// determines b_j = [C_ij⌟a_i, a_j]. The map (a, C) ↦ ((a_j, b_j))_j is
// invertible: c = C_ij⌟a_i is recovered from b_j as the unique c ⊥ a_j with
// [c, a_j] = b_j.
//
// Section side. With fixed lines L_j = Span(e_z) and the fixed transversal
// split Span(e_x) ⊕ Span(e_y), the section S consists of states with
//   (1) ρ_j ∈ Span(e_z) for all j, and
//   (2) [ρ_ij⌟a_i, a_j] ∈ Span(e_x) for the Γ-edge i→j into each j.
// On the generic part, condition (2) is the linear condition ρ_ij[z][x] = 0,
// so S is a linear space of dimension 4^n − 3n − 1.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qubitinv/algebra.hpp"
#include "qubitinv/bloch.hpp"
#include "qubitinv/local_group.hpp"
#include "qubitinv/random.hpp"
#include "qubitinv/vector_field.hpp"

namespace qubitinv {

inline constexpr double kFlagOrthogonalityTolerance = 1e-10;
inline constexpr double kFlagNormTolerance = 1e-12;
inline constexpr double kSectionTolerance = 1e-8;

/// (v, w) with ⟨v, w⟩ = 0 and ‖v‖², ‖w‖² ≠ 0.
struct FlagPair {
  Vec3C v;
  Vec3C w;
};

/// Throws DegenerateFlag if the pair is not orthogonal or has an isotropic
/// member.
void validate_flag(const FlagPair& f);

/// Basis (t1, t2 = [a, t1]) of the transversal a^⊥ with ‖t1‖² ≠ 0. Throws
/// DegenerateFlag if ‖a‖² = 0.
std::pair<Vec3C, Vec3C> transversal_basis(const Vec3C& a);

/// The unique c ⊥ a with [c, a] = b, namely c = −[a, b] / (4‖a‖²). Requires
/// b ⊥ a and ‖a‖² ≠ 0.
Vec3C solve_transversal(const Vec3C& a, const Vec3C& b);

/// Point of the bundle over ∏ 𝒱̆_j: per-site a_j and, for each Γ-edge i→j
/// (indexed by its source i), the two coordinates of C_ij in the basis
/// (a_i/‖a_i‖²) ⊗ t_{j,1}, (a_i/‖a_i‖²) ⊗ t_{j,2}.
struct BundlePoint {
  VectorField gamma;
  std::vector<Vec3C> a;
  std::vector<std::array<cplx, 2>> edge;

  /// C for the edge leaving `source`.
  Mat3C edge_tensor(int source) const;
};

BundlePoint random_bundle_point(const VectorField& gamma, Rng& rng);

struct FlagImage {
  std::vector<FlagPair> flags;   // (a_j, b_j) per vertex j
  std::vector<bool> in_open_set; // ‖b_j‖² ≠ 0
};

/// Throws NotPermutation.
FlagImage flags_from_bundle(const BundlePoint& p);

/// Inverse of flags_from_bundle. Throws NotPermutation, DegenerateFlag.
BundlePoint bundle_from_flags(const VectorField& gamma, const std::vector<FlagPair>& flags);

/// (‖v‖², ‖w‖²).
std::pair<cplx, cplx> torsor_norms(const FlagPair& f);

struct OrbitCheck {
  bool same_orbit = false;
  Mat3C witness;         // R ∈ SO(3, ℂ) with R·f1 ≈ f2
  double residual = 0.0; // max|R v1 − v2|, |R w1 − w2|
};

/// Same orbit iff the torsor norms agree to 1e−8 relative. Throws
/// DegenerateFlag.
OrbitCheck torsor_orbit_check(const FlagPair& f1, const FlagPair& f2);

struct SectionReport {
  bool member = false;
  std::vector<int> degenerate_sites;  // ‖ρ_j‖² = 0
  std::vector<int> off_line_sites;    // ρ_j ∉ Span(e_z)
  std::vector<int> edge_violations;   // target j of a Γ-edge breaking (2)
};

/// Throws NotPermutation.
SectionReport section_membership(const BlochState& b, const VectorField& gamma,
                                 double tol = kSectionTolerance);

struct SectionState {
  BlochState state;
  VectorField gamma;
};

struct Canonicalized {
  SectionState section;
  LocalRotation rotation;  // section.state = act_bloch(rotation, input)
};

/// Moves b into S. Throws NotPermutation, DegenerateStateError (‖ρ_j‖² = 0),
/// BranchFailure (an isotropic intermediate vector).
Canonicalized canonicalize(const BlochState& b, const VectorField& gamma);

struct WeylResult {
  /// Per element, per site: 0 = I, 1 = diag(−1,−1,1), 2 = diag(−1,1,−1),
  /// 3 = diag(1,−1,−1).
  std::vector<std::vector<int>> codes;
  std::vector<LocalRotation> elements;
  std::size_t order = 0;
  bool is_subgroup = false;
};

/// The four sign-diagonal elements of SO(3) by code.
Mat3C sign_diagonal(int code);

/// Sign-diagonal local rotations mapping `trials` canonicalized random states
/// back into S. Requires 2 <= n <= 4.
WeylResult weyl_enumerate(int n, const VectorField& gamma, int trials, std::uint64_t seed);

struct SectionDimension {
  std::size_t ambient = 0;          // 4^n − 1
  std::size_t constraint_rank = 0;  // rank of the constraint Jacobian on S
  std::size_t dimension = 0;        // ambient − constraint_rank
  std::size_t expected = 0;         // 4^n − 3n − 1
};

/// Free-parameter count of S at a random canonicalized point.
SectionDimension section_dimension(const VectorField& gamma, std::uint64_t seed);

}  // namespace qubitinv
