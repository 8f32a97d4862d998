#pragma once

// File formats. Complex numbers are [re, im] pairs everywhere.
//
//   density    {"format":"density","n":N,"matrix":[[[re,im],...],...]}
//   bloch      {"format":"bloch","n":N,"components":{"1":[...], "1,2":[...], ...}}
//   rotation   {"format":"rotation","n":N,"factors":[[[[re,im]×3]×3], ...]}
//   section    {"format":"section","n":N,"gamma":"...","state":<bloch>,"rotation":<rotation>}
//   invariants {"n":N,"gamma":"...","labels":[...],"values":[[re,im],...]}
//
// Readers reject unknown keys and wrong lengths with ErrorCode::Parse.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qubitinv/bloch.hpp"
#include "qubitinv/independence.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/local_group.hpp"
#include "qubitinv/section.hpp"

namespace qubitinv::io {

using json = nlohmann::ordered_json;

/// Throws Error(Parse) on malformed text.
json parse(std::string_view text);
/// Two-space indent with a trailing newline.
std::string dump(const json& j);

json to_json(cplx z);
cplx complex_from_json(const json& j, std::string_view what);

json to_json(const DensityOperator& rho);
json to_json(const BlochState& b);
json to_json(const LocalRotation& g);
json to_json(const InvariantVector& v);
json to_json(const RankReport& r);
json to_json(const Canonicalized& c);

DensityOperator density_from_json(const json& j);
BlochState bloch_from_json(const json& j);
LocalRotation rotation_from_json(const json& j);

/// Any state-bearing file (density, bloch or section) as a Bloch state.
BlochState read_state(const json& j);

struct InvariantFile {
  int n = 0;
  std::string gamma;
  std::vector<std::string> labels;
  std::vector<cplx> values;
};
InvariantFile invariants_from_json(const json& j);

/// Header "label,re,im", one row per invariant.
std::string to_csv(const InvariantVector& v);

/// Whole file contents; throws Error(Parse) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace qubitinv::io
