#pragma once

// Nowhere-zero vector fields on n vertices: loopless subgraphs of the complete
// digraph K_n with exactly one outgoing edge per vertex. Edges are stored
// source-indexed, so out(j) is a lookup.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qubitinv {

class VectorField {
 public:
  int n() const noexcept { return static_cast<int>(out_.size()); }
  /// Target of the unique edge leaving j (1-based).
  int out(int j) const { return out_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& targets() const noexcept { return out_; }

  int in_degree(int j) const;
  /// Source of the unique edge entering j; throws NotPermutation unless j has
  /// in-degree exactly 1.
  int incoming(int j) const;

  /// Edge-list form "1>2,2>3,3>1".
  std::string describe() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;
  friend auto operator<=>(const VectorField&, const VectorField&) = default;

 private:
  friend VectorField validate(int n, const std::vector<std::pair<int, int>>& edges);
  explicit VectorField(std::vector<int> out) : out_(std::move(out)) {}

  std::vector<int> out_;
};

/// 1 → 2 → ⋯ → n → 1. Throws TooSmall for n < 2.
VectorField cycle(int n);

/// Accepts iff every vertex is a source exactly once and no edge is a loop.
/// Throws NotAVectorField naming the offending vertex.
VectorField validate(int n, const std::vector<std::pair<int, int>>& edges);

/// All (n−1)^n fields, lexicographic in (out(1), …, out(n)). Throws TooLarge
/// for n > 8.
std::vector<VectorField> enumerate(int n);

/// Every vertex also has in-degree 1 (a disjoint union of cycles).
bool is_permutation(const VectorField& vf);

/// "cycle" or an edge list "1>2,2>3,3>1".
VectorField parse_gamma(std::string_view spec, int n);

}  // namespace qubitinv
