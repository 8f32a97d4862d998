#include "qubitinv/invariants.hpp"

#include <cmath>

#include "qubitinv/basis_eval.hpp"
#include "qubitinv/error.hpp"

namespace qubitinv {

namespace {

template <typename... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

int frame_degree(int r) { return r == 0 ? 1 : (r == 1 ? 3 : 4); }

void check_site(int n, int j) {
  if (j < 1 || j > n)
    throw Error(ErrorCode::BadPair, "site " + std::to_string(j) + " out of range");
}

}  // namespace

const Vec3C& MovingFrame::vector(int j, int r) const {
  const auto k = static_cast<std::size_t>(j - 1);
  switch (r) {
    case 0: return a.at(k);
    case 1: return b.at(k);
    default: return c.at(k);
  }
}

MovingFrame frame(const BlochState& b, const VectorField& gamma) {
  if (gamma.n() != b.n())
    throw Error(ErrorCode::SizeMismatch, "vector field and state differ in n");
  auto f = detail::build_frame(b, gamma);
  return {std::move(f.a), std::move(f.b), std::move(f.c)};
}

std::string to_string(const InvariantLabel& l) {
  auto pair = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  return std::visit(
      overloaded{
          [](const label::NormA& x) { return "normA(" + std::to_string(x.site) + ")"; },
          [](const label::NormB& x) { return "normB(" + std::to_string(x.site) + ")"; },
          [&](const label::PairTT& x) {
            return "tt" + std::to_string(x.r) + std::to_string(x.s) + pair(x.i, x.j);
          },
          [&](const label::PairLL& x) { return "ll" + pair(x.i, x.j); },
          [&](const label::EdgeLT& x) { return "lt1" + std::to_string(x.s) + pair(x.i, x.j); },
          [](const label::Theta& x) {
            std::string s = "theta(" + x.subset.key() + ";";
            for (std::size_t k = 0; k < x.phi.size(); ++k) {
              if (k) s += ',';
              s += std::to_string(x.phi[k]);
            }
            return s + ")";
          },
      },
      l);
}

int degree(const InvariantLabel& l) {
  return std::visit(
      overloaded{
          [](const label::NormA&) { return 2; },
          [](const label::NormB&) { return 6; },
          [](const label::PairTT& x) { return 1 + frame_degree(x.r) + frame_degree(x.s); },
          [](const label::PairLL&) { return 3; },
          [](const label::EdgeLT& x) { return 2 + frame_degree(x.s); },
          [](const label::Theta& x) {
            int d = 1;  // the correlation tensor is linear in the state
            for (int r : x.phi) d += frame_degree(r);
            return d;
          },
      },
      l);
}

std::vector<LabeledValue> norm_invariants(const MovingFrame& f) {
  std::vector<LabeledValue> out;
  for (int j = 1; j <= f.n(); ++j) {
    out.push_back({label::NormA{j}, norm2(f.vector(j, 0))});
    out.push_back({label::NormB{j}, norm2(f.vector(j, 1))});
  }
  return out;
}

cplx theta(const BlochState& b, const MovingFrame& f, const SubsetId& subset,
           const std::vector<int>& phi) {
  if (subset.size() < 3)
    throw Error(ErrorCode::BadSubset, "theta needs |I| >= 3, got {" + subset.key() + "}");
  if (phi.size() != subset.size())
    throw Error(ErrorCode::SizeMismatch, "phi must assign one frame index per site");
  const auto tensor = b.component(subset);
  const std::size_t k = subset.size();
  cplx sum = 0.0;
  for (std::size_t flat = 0; flat < tensor.size(); ++flat) {
    cplx term = tensor[flat];
    std::size_t rest = flat;
    for (std::size_t slot = k; slot-- > 0;) {
      term *= f.vector(subset.sites()[slot], phi[slot])[rest % 3];
      rest /= 3;
    }
    sum += term;
  }
  return sum;
}

std::array<LabeledValue, 5> pair_invariants(const BlochState& b, const MovingFrame& f, int i,
                                            int j) {
  check_site(b.n(), i);
  check_site(b.n(), j);
  if (i >= j) throw Error(ErrorCode::BadPair, "pair invariants need i < j");
  const Mat3C c = b.two_point(i, j);
  auto tt = [&](int r, int s) {
    return LabeledValue{label::PairTT{i, j, r, s},
                        killing(contract_left(c, f.vector(i, r)), f.vector(j, s))};
  };
  return {tt(1, 1), tt(1, 2), tt(2, 1), tt(2, 2),
          LabeledValue{label::PairLL{i, j},
                       killing(contract_left(c, f.vector(i, 0)), f.vector(j, 0))}};
}

bool is_frame_edge(const VectorField& gamma, int i, int j) { return gamma.out(j) == i; }

std::array<LabeledValue, 2> edge_lt_unchecked(const BlochState& b, const MovingFrame& f, int i,
                                              int j) {
  check_site(b.n(), i);
  check_site(b.n(), j);
  if (i == j) throw Error(ErrorCode::BadPair, "edge invariants need i != j");
  const Vec3C x = contract_left(b.two_point(i, j), f.vector(i, 0));
  return {LabeledValue{label::EdgeLT{i, j, 1}, killing(x, f.vector(j, 1))},
          LabeledValue{label::EdgeLT{i, j, 2}, killing(x, f.vector(j, 2))}};
}

std::array<LabeledValue, 2> edge_lt_invariants(const BlochState& b, const MovingFrame& f,
                                               const VectorField& gamma, int i, int j) {
  check_site(b.n(), i);
  check_site(b.n(), j);
  if (i != j && is_frame_edge(gamma, i, j))
    throw Error(ErrorCode::IsGammaEdge, "b_" + std::to_string(j) + " is built from the pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
  return edge_lt_unchecked(b, f, i, j);
}

std::vector<int> degenerate_sites(const MovingFrame& f, double tol) {
  std::vector<int> sites;
  for (int j = 1; j <= f.n(); ++j)
    if (std::abs(norm2(f.vector(j, 0))) <= tol || std::abs(norm2(f.vector(j, 1))) <= tol)
      sites.push_back(j);
  return sites;
}

std::vector<InvariantLabel> basis_labels(const VectorField& gamma) {
  const int n = gamma.n();
  std::vector<InvariantLabel> labels;
  for (int j = 1; j <= n; ++j) {
    labels.emplace_back(label::NormA{j});
    labels.emplace_back(label::NormB{j});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s) labels.emplace_back(label::PairTT{i, j, r, s});
      labels.emplace_back(label::PairLL{i, j});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || is_frame_edge(gamma, i, j)) continue;
      labels.emplace_back(label::EdgeLT{i, j, 1});
      labels.emplace_back(label::EdgeLT{i, j, 2});
    }
  for (unsigned mask : layout_for(n).masks()) {
    const SubsetId subset = SubsetId::from_mask(mask);
    if (subset.size() < 3) continue;
    const std::size_t count = pow3(subset.size());
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::vector<int> phi(subset.size());
      std::size_t rest = flat;
      for (std::size_t slot = subset.size(); slot-- > 0;) {
        phi[slot] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      labels.emplace_back(label::Theta{subset, std::move(phi)});
    }
  }
  return labels;
}

InvariantVector assemble(const BlochState& b, const VectorField& gamma, double degeneracy_tol) {
  if (gamma.n() != b.n())
    throw Error(ErrorCode::SizeMismatch, "vector field and state differ in n");
  const auto f = detail::build_frame(b, gamma);
  const MovingFrame mf{f.a, f.b, f.c};
  if (auto bad = degenerate_sites(mf, degeneracy_tol); !bad.empty())
    throw DegenerateStateError(std::move(bad));
  InvariantVector v;
  v.n = b.n();
  v.gamma = gamma.describe();
  v.labels = basis_labels(gamma);
  v.values.reserve(v.labels.size());
  detail::evaluate_basis(b, gamma, f, v.values);
  return v;
}

CountBreakdown count(int n) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "invariant count needs n >= 2");
  if (n > 30) throw Error(ErrorCode::TooLarge, "invariant count overflows for n > 30");
  auto binom = [](long long m, long long k) {
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (m - k + t) / t;
    return r;
  };
  CountBreakdown c;
  const long long nn = n;
  c.norms = 2 * nn;
  c.pairs = 5 * binom(nn, 2);
  c.edges = 2 * nn * nn - 4 * nn;
  long long p3 = 1;
  for (int k = 1; k <= n; ++k) {
    p3 *= 3;
    if (k >= 3) c.thetas += binom(nn, k) * p3;
  }
  c.total_sections = c.pairs + c.edges + c.thetas;
  c.total_basis = c.total_sections + c.norms;
  return c;
}

}  // namespace qubitinv
