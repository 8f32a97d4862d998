#include "qubitinv/section.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "qubitinv/dual.hpp"
#include "qubitinv/error.hpp"
#include "qubitinv/independence.hpp"
#include "qubitinv/invariants.hpp"

namespace qubitinv {

namespace {

void require_permutation(const VectorField& gamma) {
  if (!is_permutation(gamma))
    throw Error(ErrorCode::NotPermutation,
                "vector field " + gamma.describe() + " is not a permutation");
}

double scale(const Vec3C& v) { return std::max(1.0, max_abs(v)); }

// Principal square root, flipped to the branch nearest `reference`.
cplx root_near(cplx x, cplx reference) {
  const cplx r = std::sqrt(x);
  return std::abs(r - reference) <= std::abs(-r - reference) ? r : -r;
}

// Columns v/sv, w/sw, (v/sv) × (w/sw): orthonormal with determinant 1.
Mat3C frame_matrix(const Vec3C& v, const Vec3C& w, cplx sv, cplx sw) {
  const Vec3C x = (1.0 / sv) * v;
  const Vec3C y = (1.0 / sw) * w;
  const Vec3C z = cross(x, y);
  Mat3C m;
  for (std::size_t k = 0; k < 3; ++k) {
    m(k, 0) = x[k];
    m(k, 1) = y[k];
    m(k, 2) = z[k];
  }
  return m;
}

// y-component of [ρ_ij⌟a_i, a_j] for the Γ-edge into each j, after the two
// line conditions per site.
template <typename T>
void section_constraints(const BasicBlochState<T>& s, const VectorField& gamma,
                         std::vector<T>& out) {
  for (int j = 1; j <= s.n(); ++j) {
    const auto a = s.one_point(j);
    out.push_back(a[0]);
    out.push_back(a[1]);
  }
  for (int j = 1; j <= s.n(); ++j) {
    const int i = gamma.incoming(j);
    const auto beta = bracket(contract_left(s.two_point(i, j), s.one_point(i)), s.one_point(j));
    out.push_back(beta[1]);
  }
}

}  // namespace

void validate_flag(const FlagPair& f) {
  const double sv = scale(f.v), sw = scale(f.w);
  if (std::abs(killing(f.v, f.w)) > kFlagOrthogonalityTolerance * sv * sw)
    throw Error(ErrorCode::DegenerateFlag, "flag vectors are not orthogonal");
  if (std::abs(norm2(f.v)) <= kFlagNormTolerance || std::abs(norm2(f.w)) <= kFlagNormTolerance)
    throw Error(ErrorCode::DegenerateFlag, "flag vector has zero squared norm");
}

std::pair<Vec3C, Vec3C> transversal_basis(const Vec3C& a) {
  const cplx na = norm2(a);
  if (std::abs(na) <= kFlagNormTolerance)
    throw Error(ErrorCode::DegenerateFlag, "longitudinal vector is isotropic");
  // Project each coordinate axis onto a^⊥; keep the best-conditioned one.
  Vec3C best;
  double best_quality = -1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec3C u = unit_vector(k) - (a[k] / na) * a;
    const double m = max_abs(u);
    if (m == 0.0) continue;
    const double quality = std::abs(norm2(u)) / (m * m);
    if (quality > best_quality + 1e-12) {
      best_quality = quality;
      best = u;
    }
  }
  return {best, bracket(a, best)};
}

Vec3C solve_transversal(const Vec3C& a, const Vec3C& b) {
  return (-1.0 / (4.0 * norm2(a))) * bracket(a, b);
}

Mat3C BundlePoint::edge_tensor(int source) const {
  const int target = gamma.out(source);
  const Vec3C& ai = a.at(static_cast<std::size_t>(source - 1));
  const auto [t1, t2] = transversal_basis(a.at(static_cast<std::size_t>(target - 1)));
  const auto& k = edge.at(static_cast<std::size_t>(source - 1));
  return outer((1.0 / norm2(ai)) * ai, k[0] * t1 + k[1] * t2);
}

BundlePoint random_bundle_point(const VectorField& gamma, Rng& rng) {
  BundlePoint p{gamma, {}, {}};
  for (int j = 1; j <= gamma.n(); ++j) {
    Vec3C a;
    do {
      for (std::size_t k = 0; k < 3; ++k) a[k] = uniform_square(rng);
    } while (std::abs(norm2(a)) < 0.1);
    p.a.push_back(a);
    p.edge.push_back({uniform_square(rng), uniform_square(rng)});
  }
  return p;
}

FlagImage flags_from_bundle(const BundlePoint& p) {
  require_permutation(p.gamma);
  FlagImage img;
  for (int j = 1; j <= p.gamma.n(); ++j) {
    const int i = p.gamma.incoming(j);
    const Vec3C& aj = p.a[static_cast<std::size_t>(j - 1)];
    const Vec3C bj =
        bracket(contract_left(p.edge_tensor(i), p.a[static_cast<std::size_t>(i - 1)]), aj);
    img.flags.push_back({aj, bj});
    img.in_open_set.push_back(std::abs(norm2(bj)) > kFlagNormTolerance);
  }
  return img;
}

BundlePoint bundle_from_flags(const VectorField& gamma, const std::vector<FlagPair>& flags) {
  require_permutation(gamma);
  if (flags.size() != static_cast<std::size_t>(gamma.n()))
    throw Error(ErrorCode::SizeMismatch, "one flag per vertex required");
  BundlePoint p{gamma, {}, std::vector<std::array<cplx, 2>>(flags.size())};
  for (const auto& f : flags) {
    validate_flag(f);
    p.a.push_back(f.v);
  }
  for (int j = 1; j <= gamma.n(); ++j) {
    const auto& f = flags[static_cast<std::size_t>(j - 1)];
    const Vec3C c = solve_transversal(f.v, f.w);
    const auto [t1, t2] = transversal_basis(f.v);
    // t1 ⊥ t2, so the coordinates are plain projections.
    p.edge[static_cast<std::size_t>(gamma.incoming(j) - 1)] = {killing(c, t1) / norm2(t1),
                                                               killing(c, t2) / norm2(t2)};
  }
  return p;
}

std::pair<cplx, cplx> torsor_norms(const FlagPair& f) { return {norm2(f.v), norm2(f.w)}; }

OrbitCheck torsor_orbit_check(const FlagPair& f1, const FlagPair& f2) {
  validate_flag(f1);
  validate_flag(f2);
  const auto [v1, w1] = torsor_norms(f1);
  const auto [v2, w2] = torsor_norms(f2);
  auto close = [](cplx x, cplx y) {
    return std::abs(x - y) <= 1e-8 * std::max(std::abs(x), std::abs(y));
  };
  OrbitCheck out;
  out.same_orbit = close(v1, v2) && close(w1, w2);
  const cplx sv1 = std::sqrt(v1), sw1 = std::sqrt(w1);
  const Mat3C f1m = frame_matrix(f1.v, f1.w, sv1, sw1);
  const Mat3C f2m = frame_matrix(f2.v, f2.w, root_near(v2, sv1), root_near(w2, sw1));
  out.witness = f2m * f1m.transpose();
  out.residual = std::max(max_abs(out.witness * f1.v - f2.v), max_abs(out.witness * f1.w - f2.w));
  return out;
}

SectionReport section_membership(const BlochState& b, const VectorField& gamma, double tol) {
  require_permutation(gamma);
  SectionReport r;
  for (int j = 1; j <= b.n(); ++j) {
    const Vec3C a = b.one_point(j);
    if (std::abs(norm2(a)) <= kDegeneracyTolerance) r.degenerate_sites.push_back(j);
    if (std::max(std::abs(a[0]), std::abs(a[1])) > tol * scale(a)) r.off_line_sites.push_back(j);
  }
  for (int j = 1; j <= b.n(); ++j) {
    const int i = gamma.incoming(j);
    const Vec3C beta = bracket(contract_left(b.two_point(i, j), b.one_point(i)), b.one_point(j));
    if (std::abs(beta[1]) > tol * scale(beta)) r.edge_violations.push_back(j);
  }
  r.member = r.degenerate_sites.empty() && r.off_line_sites.empty() && r.edge_violations.empty();
  return r;
}

Canonicalized canonicalize(const BlochState& b, const VectorField& gamma) {
  require_permutation(gamma);
  if (gamma.n() != b.n())
    throw Error(ErrorCode::SizeMismatch, "vector field and state differ in n");
  const int n = b.n();

  std::vector<int> degenerate;
  for (int j = 1; j <= n; ++j)
    if (std::abs(norm2(b.one_point(j))) <= kDegeneracyTolerance) degenerate.push_back(j);
  if (!degenerate.empty()) throw DegenerateStateError(std::move(degenerate));

  // Step 1: send a_j / √‖a_j‖² to e_z.
  std::vector<Mat3C> first;
  for (int j = 1; j <= n; ++j) {
    const Vec3C a = b.one_point(j);
    const auto [t1, t2] = transversal_basis(a);
    const cplx nt = norm2(t1);
    if (std::abs(nt) <= kDegeneracyTolerance * max_abs(t1) * max_abs(t1))
      throw Error(ErrorCode::BranchFailure, "isotropic transversal at site " + std::to_string(j));
    const Vec3C f3 = (1.0 / std::sqrt(norm2(a))) * a;
    const Vec3C f1 = (1.0 / std::sqrt(nt)) * t1;
    const Vec3C f2 = cross(f3, f1);
    Mat3C r;
    for (std::size_t k = 0; k < 3; ++k) {
      r(0, k) = f1[k];
      r(1, k) = f2[k];
      r(2, k) = f3[k];
    }
    first.push_back(r);
  }
  const LocalRotation g1(std::move(first));
  const BlochState b1 = act_bloch(g1, b);

  // Step 2: rotate about e_z so the incoming-edge transversal vector lies on e_x.
  std::vector<Mat3C> second;
  for (int j = 1; j <= n; ++j) {
    const int i = gamma.incoming(j);
    const Vec3C beta =
        bracket(contract_left(b1.two_point(i, j), b1.one_point(i)), b1.one_point(j));
    const cplx q = beta[0] * beta[0] + beta[1] * beta[1];
    const double s = scale(beta);
    if (std::abs(q) <= kDegeneracyTolerance * s * s)
      throw Error(ErrorCode::BranchFailure,
                  "isotropic transversal vector at site " + std::to_string(j));
    const cplx root = std::sqrt(q);
    const cplx cs = beta[0] / root, sn = -beta[1] / root;
    Mat3C r = Mat3C::identity();
    r(0, 0) = cs;
    r(0, 1) = -sn;
    r(1, 0) = sn;
    r(1, 1) = cs;
    second.push_back(r);
  }
  const LocalRotation g2(std::move(second));
  LocalRotation g = g2 * g1;
  BlochState out = act_bloch(g, b);
  return {SectionState{std::move(out), gamma}, std::move(g)};
}

Mat3C sign_diagonal(int code) {
  static constexpr double signs[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
  Mat3C m;
  for (std::size_t k = 0; k < 3; ++k) m(k, k) = signs[code][k];
  return m;
}

WeylResult weyl_enumerate(int n, const VectorField& gamma, int trials, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "Weyl enumeration needs n >= 2");
  if (n > 4) throw Error(ErrorCode::TooLarge, "Weyl enumeration supports n <= 4");
  if (gamma.n() != n) throw Error(ErrorCode::SizeMismatch, "vector field and n differ");
  require_permutation(gamma);

  std::vector<BlochState> states;
  for (std::uint64_t stream = 0; static_cast<int>(states.size()) < trials; ++stream) {
    Rng rng(derive_seed(seed, stream));
    try {
      states.push_back(canonicalize(random_bloch(n, rng), gamma).section.state);
    } catch (const Error&) {
      // Non-generic draw; take the next one.
    }
  }

  WeylResult result;
  std::set<std::vector<int>> kept;
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t word = 0; word < total; ++word) {
    std::vector<int> code(static_cast<std::size_t>(n));
    std::vector<Mat3C> factors;
    for (int j = 0; j < n; ++j) {
      code[static_cast<std::size_t>(j)] = static_cast<int>((word >> (2 * j)) & 3u);
      factors.push_back(sign_diagonal(code[static_cast<std::size_t>(j)]));
    }
    const LocalRotation g(std::move(factors));
    const bool preserves = std::all_of(states.begin(), states.end(), [&](const BlochState& s) {
      return section_membership(act_bloch(g, s), gamma).member;
    });
    if (!preserves) continue;
    kept.insert(code);
    result.codes.push_back(code);
    result.elements.push_back(g);
  }
  result.order = result.codes.size();

  // Sign-diagonal codes form a Klein group per site: product is XOR, every
  // element is its own inverse.
  result.is_subgroup = kept.count(std::vector<int>(static_cast<std::size_t>(n), 0)) == 1;
  for (const auto& x : result.codes)
    for (const auto& y : result.codes) {
      std::vector<int> z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] ^ y[k];
      if (!kept.count(z)) result.is_subgroup = false;
    }
  return result;
}

SectionDimension section_dimension(const VectorField& gamma, std::uint64_t seed) {
  require_permutation(gamma);
  const int n = gamma.n();
  std::optional<BlochState> point;
  for (std::uint64_t stream = 0; !point; ++stream) {
    Rng rng(derive_seed(seed, stream));
    try {
      point = canonicalize(random_bloch(n, rng), gamma).section.state;
    } catch (const Error&) {
    }
  }
  const auto coords = point->coordinates();
  BasicBlochState<Dual> s(n, std::vector<Dual>(coords.begin(), coords.end()));
  std::vector<Dual> out;
  section_constraints(s, gamma, out);
  Eigen::MatrixXcd j(static_cast<Eigen::Index>(out.size()),
                     static_cast<Eigen::Index>(coords.size()));
  for (std::size_t x = 0; x < coords.size(); ++x) {
    s.coordinates()[x].derivative = 1.0;
    out.clear();
    section_constraints(s, gamma, out);
    for (std::size_t r = 0; r < out.size(); ++r)
      j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) = out[r].derivative;
    s.coordinates()[x].derivative = 0.0;
  }
  SectionDimension d;
  d.ambient = coords.size();
  d.constraint_rank = rank(equilibrate_rows(j)).rank;
  d.dimension = d.ambient - d.constraint_rank;
  d.expected = static_cast<std::size_t>(count(n).total_basis);
  return d;
}

}  // namespace qubitinv
