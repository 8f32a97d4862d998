#include "qubitinv/vector_field.hpp"

#include <charconv>

#include "qubitinv/error.hpp"

namespace qubitinv {

int VectorField::in_degree(int j) const {
  int d = 0;
  for (int t : out_) d += (t == j);
  return d;
}

int VectorField::incoming(int j) const {
  int source = 0;
  int count = 0;
  for (std::size_t i = 0; i < out_.size(); ++i)
    if (out_[i] == j) {
      source = static_cast<int>(i) + 1;
      ++count;
    }
  if (count != 1)
    throw Error(ErrorCode::NotPermutation, "vertex " + std::to_string(j) + " has in-degree " +
                                               std::to_string(count));
  return source;
}

std::string VectorField::describe() const {
  std::string s;
  for (std::size_t i = 0; i < out_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(i + 1) + '>' + std::to_string(out_[i]);
  }
  return s;
}

VectorField cycle(int n) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "a vector field needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= n; ++j) edges.emplace_back(j, j == n ? 1 : j + 1);
  return validate(n, edges);
}

VectorField validate(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "a vector field needs n >= 2");
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error(ErrorCode::NotAVectorField, "edge " + std::to_string(i) + ">" +
                                                  std::to_string(j) + " out of range");
    if (i == j)
      throw Error(ErrorCode::NotAVectorField, "loop at vertex " + std::to_string(i));
    auto& slot = out[static_cast<std::size_t>(i - 1)];
    if (slot != 0)
      throw Error(ErrorCode::NotAVectorField,
                  "vertex " + std::to_string(i) + " has more than one outgoing edge");
    slot = j;
  }
  for (int i = 1; i <= n; ++i)
    if (out[static_cast<std::size_t>(i - 1)] == 0)
      throw Error(ErrorCode::NotAVectorField,
                  "vertex " + std::to_string(i) + " has no outgoing edge");
  return VectorField(std::move(out));
}

std::vector<VectorField> enumerate(int n) {
  if (n > 8) throw Error(ErrorCode::TooLarge, "enumeration supports n <= 8");
  if (n < 2) return {};
  // Odometer over out(j) ∈ {1..n} \ {j}; the last vertex varies fastest.
  std::vector<int> out(static_cast<std::size_t>(n));
  auto first_choice = [](int j) { return j == 1 ? 2 : 1; };
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = first_choice(j);
  std::vector<VectorField> fields;
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j <= n; ++j) edges.emplace_back(j, out[static_cast<std::size_t>(j - 1)]);
    fields.push_back(validate(n, edges));
    int j = n;
    for (; j >= 1; --j) {
      int& t = out[static_cast<std::size_t>(j - 1)];
      ++t;
      if (t == j) ++t;
      if (t <= n) break;
      t = first_choice(j);
    }
    if (j < 1) break;
  }
  return fields;
}

bool is_permutation(const VectorField& vf) {
  for (int j = 1; j <= vf.n(); ++j)
    if (vf.in_degree(j) != 1) return false;
  return true;
}

VectorField parse_gamma(std::string_view spec, int n) {
  if (spec == "cycle") return cycle(n);
  std::vector<std::pair<int, int>> edges;
  auto parse_int = [&](std::string_view token) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw Error(ErrorCode::Parse, "bad vertex '" + std::string(token) + "' in gamma spec");
    return v;
  };
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto arrow = item.find('>');
    if (arrow == std::string_view::npos)
      throw Error(ErrorCode::Parse, "expected 'i>j' in gamma spec, got '" + std::string(item) + "'");
    edges.emplace_back(parse_int(item.substr(0, arrow)), parse_int(item.substr(arrow + 1)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return validate(n, edges);
}

}  // namespace qubitinv
