#pragma once

// Explicit transcendence basis of the field of local-symmetry invariants.
//
// Fix a nowhere-zero vector field Γ. For each site j with outgoing edge j→k:
//
//   a_j = ρ_j,   b_j = [ρ_{jk}⌟ρ_k, ρ_j],   c_j = [a_j, b_j]
//
// where ρ_{jk} is read with j as its first slot and ⌟ρ_k contracts the second.
// The frame is pairwise orthogonal and transforms covariantly, so every full
// contraction of a correlation tensor against frame vectors is invariant.
// The basis, in canonical order, is
//
//   NormA(j), NormB(j)            ‖a_j‖², ‖b_j‖²                   per site
//   PairTT(i,j,r,s), PairLL(i,j)  ⟨ρ_ij⌟f_{i,r}, f_{j,s}⟩          per i<j
//   EdgeLT(i,j,s)                 ⟨ρ_ij⌟a_i, f_{j,s}⟩, s = 1, 2     per i≠j
//   Theta(I,φ)                    ⟨ρ_I, ⊗ f_{j,φ(j)}⟩               |I| ≥ 3
//
// with f_{j,0..2} = a_j, b_j, c_j. EdgeLT skips the directed pairs (i,j) with
// out(j) = i: there b_j = [ρ_ij⌟a_i, a_j] is built from the same contraction,
// and the pair collapses to (0, ‖b_j‖²).

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "qubitinv/algebra.hpp"
#include "qubitinv/bloch.hpp"
#include "qubitinv/vector_field.hpp"

namespace qubitinv {

inline constexpr double kDegeneracyTolerance = 1e-12;

struct MovingFrame {
  std::vector<Vec3C> a, b, c;

  int n() const noexcept { return static_cast<int>(a.size()); }
  /// f_{j,r}: r = 0, 1, 2 selects a_j, b_j, c_j.
  const Vec3C& vector(int j, int r) const;
};

MovingFrame frame(const BlochState& b, const VectorField& gamma);

namespace label {
struct NormA { int site; };
struct NormB { int site; };
struct PairTT { int i, j, r, s; };
struct PairLL { int i, j; };
struct EdgeLT { int i, j, s; };
struct Theta {
  SubsetId subset;
  std::vector<int> phi;  // one entry in {0,1,2} per site of `subset`
};
}  // namespace label

using InvariantLabel = std::variant<label::NormA, label::NormB, label::PairTT, label::PairLL,
                                    label::EdgeLT, label::Theta>;

/// e.g. "normA(1)", "tt12(1,2)", "ll(1,2)", "lt11(1,3)", "theta(1,2,3;0,1,2)".
std::string to_string(const InvariantLabel& l);

/// Homogeneous degree in the Bloch components.
int degree(const InvariantLabel& l);

struct LabeledValue {
  InvariantLabel label;
  cplx value;
};

/// killing(a_j,a_j), killing(b_j,b_j) per site in site order (2n values).
std::vector<LabeledValue> norm_invariants(const MovingFrame& f);

/// Full contraction of ρ_I against ⊗_{j∈I} f_{j,φ(j)}. Throws BadSubset if
/// |I| < 3.
cplx theta(const BlochState& b, const MovingFrame& f, const SubsetId& subset,
           const std::vector<int>& phi);

/// tt11, tt12, tt21, tt22, ll for C = ρ_ij. Throws BadPair unless i < j.
std::array<LabeledValue, 5> pair_invariants(const BlochState& b, const MovingFrame& f, int i,
                                            int j);

/// True for the directed pairs the basis skips: out(j) = i.
bool is_frame_edge(const VectorField& gamma, int i, int j);

/// lt11, lt12 for C = ρ_ij (first slot i). Throws IsGammaEdge on a frame edge
/// and BadPair when i == j.
std::array<LabeledValue, 2> edge_lt_invariants(const BlochState& b, const MovingFrame& f,
                                               const VectorField& gamma, int i, int j);

/// Same formulas without the frame-edge guard.
std::array<LabeledValue, 2> edge_lt_unchecked(const BlochState& b, const MovingFrame& f, int i,
                                              int j);

struct InvariantVector {
  int n = 0;
  std::string gamma;
  std::vector<InvariantLabel> labels;
  std::vector<cplx> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Sites whose ‖a_j‖² or ‖b_j‖² has modulus ≤ tol, ascending.
std::vector<int> degenerate_sites(const MovingFrame& f, double tol = kDegeneracyTolerance);

/// Labels of the basis for (n, Γ) in canonical order.
std::vector<InvariantLabel> basis_labels(const VectorField& gamma);

/// All 4^n − 3n − 1 invariants in canonical order. Throws DegenerateStateError.
InvariantVector assemble(const BlochState& b, const VectorField& gamma,
                         double degeneracy_tol = kDegeneracyTolerance);

struct CountBreakdown {
  long long norms = 0;
  long long pairs = 0;
  long long edges = 0;
  long long thetas = 0;
  long long total_sections = 0;  // 4^n − 5n − 1
  long long total_basis = 0;     // 4^n − 3n − 1
};

/// Throws TooSmall for n < 2.
CountBreakdown count(int n);

}  // namespace qubitinv
