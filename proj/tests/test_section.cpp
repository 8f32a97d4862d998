#include <gtest/gtest.h>

#include "qubitinv/independence.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/section.hpp"
#include "support.hpp"

using namespace qubitinv;
using testing_support::random_vec;

namespace {

FlagPair random_flag(Rng& rng) {
  const Vec3C v = random_vec(rng);
  const Vec3C u = random_vec(rng);
  // Project u off v.
  return {v, u - (killing(u, v) / norm2(v)) * v};
}

double bundle_distance(const BundlePoint& p, const BundlePoint& q) {
  double d = 0.0;
  for (std::size_t k = 0; k < p.a.size(); ++k) {
    d = std::max(d, max_abs(p.a[k] - q.a[k]));
    d = std::max(d, std::abs(p.edge[k][0] - q.edge[k][0]));
    d = std::max(d, std::abs(p.edge[k][1] - q.edge[k][1]));
  }
  return d;
}

bool is_sign_diagonal(const Mat3C& r) {
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const cplx x = r(a, b);
      if (a != b && std::abs(x) > 1e-12) return false;
      if (a == b && std::abs(std::abs(x) - 1.0) > 1e-12) return false;
      if (a == b && std::abs(x.imag()) > 1e-12) return false;
    }
  return true;
}

}  // namespace

TEST(Transversal, SolveAndBasis) {
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    const Vec3C a = random_vec(rng);
    const auto [t1, t2] = transversal_basis(a);
    EXPECT_LT(std::abs(killing(a, t1)), 1e-12);
    EXPECT_LT(std::abs(killing(a, t2)), 1e-12);
    EXPECT_LT(std::abs(killing(t1, t2)), 1e-12);
    EXPECT_GT(std::abs(norm2(t1)), 1e-3);
    const Vec3C b = 0.7 * t1 - cplx(0.2, 1.1) * t2;
    const Vec3C c = solve_transversal(a, b);
    EXPECT_LT(std::abs(killing(a, c)), 1e-12);
    EXPECT_LT(max_abs(bracket(c, a) - b), 1e-11);
  }
  EXPECT_ERROR_CODE(transversal_basis(Vec3C{{1.0, kI, 0.0}}), ErrorCode::DegenerateFlag);
}

TEST(FlagBundle, RoundTrip) {
  for (int n = 2; n <= 4; ++n) {
    Rng rng(62 + n);
    for (int t = 0; t < 20; ++t) {
      const BundlePoint p = random_bundle_point(cycle(n), rng);
      const FlagImage img = flags_from_bundle(p);
      for (std::size_t j = 0; j < img.flags.size(); ++j) {
        const auto& f = img.flags[j];
        EXPECT_LT(std::abs(killing(f.v, f.w)), 1e-10);
        EXPECT_TRUE(img.in_open_set[j]);
      }
      EXPECT_LT(bundle_distance(bundle_from_flags(cycle(n), img.flags), p), 1e-10);
    }
  }
}

TEST(FlagBundle, EdgeTensorShape) {
  Rng rng(66);
  const BundlePoint p = random_bundle_point(cycle(3), rng);
  for (int i = 1; i <= 3; ++i) {
    const Mat3C c = p.edge_tensor(i);
    const int j = p.gamma.out(i);
    // Longitudinal in the first slot, transversal in the second.
    const auto [t1, t2] = transversal_basis(p.a[std::size_t(i - 1)]);
    EXPECT_LT(max_abs(contract_left(c, t1)), 1e-12);
    EXPECT_LT(max_abs(contract_left(c, t2)), 1e-12);
    EXPECT_LT(std::abs(killing(contract_left(c, p.a[std::size_t(i - 1)]), p.a[std::size_t(j - 1)])),
              1e-12);
  }
}

TEST(FlagBundle, RequiresPermutation) {
  Rng rng(67);
  const VectorField star = validate(3, {{1, 2}, {2, 1}, {3, 1}});
  const std::vector<FlagPair> flags{random_flag(rng), random_flag(rng), random_flag(rng)};
  EXPECT_ERROR_CODE(bundle_from_flags(star, flags), ErrorCode::NotPermutation);
  EXPECT_ERROR_CODE(bundle_from_flags(cycle(3), {flags[0]}), ErrorCode::SizeMismatch);
  EXPECT_ERROR_CODE(validate_flag({Vec3C{{1.0, kI, 0.0}}, Vec3C{{0.0, 0.0, 1.0}}}),
                    ErrorCode::DegenerateFlag);
  EXPECT_ERROR_CODE(validate_flag({unit_vector(0), unit_vector(0)}), ErrorCode::DegenerateFlag);
}

TEST(Torsor, NormsAreConstantOnOrbits) {
  Rng rng(68);
  for (int t = 0; t < 40; ++t) {
    const FlagPair f = random_flag(rng);
    const auto mode = t % 2 ? SampleMode::Complex : SampleMode::Compact;
    const Mat3C r = sample(1, std::uint64_t(t), mode).factor(1);
    const FlagPair g{r * f.v, r * f.w};
    const auto [n1, m1] = torsor_norms(f);
    const auto [n2, m2] = torsor_norms(g);
    EXPECT_LT(std::abs(n1 - n2), 1e-10 * (1.0 + std::abs(n1)));
    EXPECT_LT(std::abs(m1 - m2), 1e-10 * (1.0 + std::abs(m1)));
    const OrbitCheck check = torsor_orbit_check(f, g);
    EXPECT_TRUE(check.same_orbit);
    EXPECT_LT(check.residual, 1e-8);
    EXPECT_LT(orthogonality_defect(check.witness), 1e-8);
    EXPECT_LT(std::abs(determinant(check.witness) - 1.0), 1e-8);
  }
}

TEST(Torsor, DifferentNormsAreDifferentOrbits) {
  Rng rng(69);
  const FlagPair f = random_flag(rng);
  const FlagPair g{2.0 * f.v, f.w};
  EXPECT_FALSE(torsor_orbit_check(f, g).same_orbit);
}

TEST(Section, CanonicalizeLandsInSectionAndKeepsInvariants) {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(70 + n);
    for (int t = 0; t < 10; ++t) {
      const BlochState b = random_bloch(n, rng);
      const Canonicalized c = canonicalize(b, cycle(n));
      EXPECT_TRUE(section_membership(c.section.state, cycle(n)).member);
      EXPECT_FALSE(section_membership(b, cycle(n)).member);
      EXPECT_EQ(act_bloch(c.rotation, b), c.section.state);
      const double dev =
          max_relative_deviation(assemble(b, cycle(n)).values, assemble(c.section.state, cycle(n)).values);
      EXPECT_LT(dev, 1e-8);
    }
  }
}

TEST(Section, CanonicalizingASectionPointUsesSigns) {
  Rng rng(74);
  const BlochState s = canonicalize(random_bloch(3, rng), cycle(3)).section.state;
  const Canonicalized again = canonicalize(s, cycle(3));
  for (const Mat3C& r : again.rotation.factors()) EXPECT_TRUE(is_sign_diagonal(r));
  EXPECT_TRUE(section_membership(again.section.state, cycle(3)).member);
}

TEST(Section, MembershipReportsEachCondition) {
  Rng rng(75);
  BlochState s = canonicalize(random_bloch(3, rng), cycle(3)).section.state;
  s.component(0b010u)[0] = 0.5;  // push a_2 off the line
  const SectionReport r = section_membership(s, cycle(3));
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.off_line_sites, std::vector<int>{2});
  EXPECT_TRUE(r.degenerate_sites.empty());

  BlochState z = canonicalize(random_bloch(2, rng), cycle(2)).section.state;
  z.component(0b11u)[2 * 3 + 0] += 0.3;  // ρ_12[z][x] feeds the y-part of β_2
  const SectionReport e = section_membership(z, cycle(2));
  EXPECT_FALSE(e.member);
  EXPECT_FALSE(e.edge_violations.empty());
}

TEST(Section, CanonicalizeFailures) {
  EXPECT_THROW(canonicalize(BlochState(2), cycle(2)), DegenerateStateError);
  BlochState iso(2);
  iso.component(0b01u)[0] = 1.0;
  iso.component(0b01u)[1] = kI;
  iso.component(0b10u)[2] = 1.0;
  try {
    canonicalize(iso, cycle(2));
    ADD_FAILURE() << "isotropic a_1 accepted";
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::DegenerateState || e.code() == ErrorCode::BranchFailure);
  }
  Rng rng(76);
  EXPECT_ERROR_CODE(canonicalize(random_bloch(3, rng), validate(3, {{1, 2}, {2, 1}, {3, 1}})),
                    ErrorCode::NotPermutation);
}

TEST(Section, FreeParameterCount) {
  for (int n = 2; n <= 3; ++n) {
    const SectionDimension d = section_dimension(cycle(n), 5);
    // Two line conditions per site and one edge condition per vertex.
    EXPECT_EQ(d.constraint_rank, std::size_t(3 * n));
    EXPECT_EQ(d.dimension, std::size_t(oracle::ipow(4, n) - 3 * n - 1));
    EXPECT_EQ(d.dimension, d.expected);
  }
}

TEST(Section, SignStabilizerIsASubgroup) {
  for (int n = 2; n <= 3; ++n) {
    const WeylResult w = weyl_enumerate(n, cycle(n), 10, 3);
    EXPECT_TRUE(w.is_subgroup);
    ASSERT_GE(w.order, 1u);
    EXPECT_EQ(w.codes.front(), std::vector<int>(std::size_t(n), 0));
    EXPECT_EQ(std::size_t(oracle::ipow(4, n)) % w.order, 0u);
    Rng rng(77);
    const BlochState s = canonicalize(random_bloch(n, rng), cycle(n)).section.state;
    for (const auto& g : w.elements) EXPECT_TRUE(section_membership(act_bloch(g, s), cycle(n)).member);
  }
  EXPECT_ERROR_CODE(weyl_enumerate(1, cycle(2), 1, 1), ErrorCode::TooSmall);
  EXPECT_ERROR_CODE(weyl_enumerate(5, cycle(5), 1, 1), ErrorCode::TooLarge);
}
