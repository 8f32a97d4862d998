#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qubitinv {

enum class ErrorCode {
  TraceNotOne,
  BadSubset,
  BadPair,
  SizeMismatch,
  NotUnimodular,
  NotOrthogonal,
  TooSmall,
  TooLarge,
  NotAVectorField,
  NotPermutation,
  IsGammaEdge,
  DegenerateState,
  DegenerateFlag,
  BranchFailure,
  Parse,
  BadKind,
  BadN,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A state outside the locus where every ‖a_j‖² and ‖b_j‖² is nonzero.
/// `sites()` lists the offending sites (1-based, ascending).
class DegenerateStateError : public Error {
 public:
  explicit DegenerateStateError(std::vector<int> sites);

  const std::vector<int>& sites() const noexcept { return sites_; }

 private:
  std::vector<int> sites_;
};

}  // namespace qubitinv
