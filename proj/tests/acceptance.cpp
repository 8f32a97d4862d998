// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "qubitinv/independence.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/io.hpp"
#include "qubitinv/local_group.hpp"
#include "qubitinv/random.hpp"
#include "qubitinv/section.hpp"
#include "qubitinv/vector_field.hpp"

using namespace qubitinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qubitinv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double max_coord_diff(const BlochState& x, const BlochState& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < x.coordinates().size(); ++k)
    d = std::max(d, std::abs(x.coordinates()[k] - y.coordinates()[k]));
  return d;
}

Outcome invariant_count() {
  Outcome o;
  const long long stated[] = {9, 54, 243};
  for (int n = 2; n <= 6; ++n) {
    const CliRun r = cli_run({"count", "--n", std::to_string(n), "--format", "json"});
    const auto j = io::parse(r.out);
    const long long sections = j["sections"], basis = j["basis"];
    const bool ok = r.code == 0 && sections == oracle::ipow(4, n) - 5 * n - 1 &&
                    basis == oracle::ipow(4, n) - 3 * n - 1;
    o.pass = o.pass && ok && (n > 4 || basis == stated[n - 2]);
    o.detail += "n=" + std::to_string(n) + ":" + std::to_string(basis) + " ";
  }
  return o;
}

Outcome g_invariance() {
  Outcome o;
  const struct { int n, trials; double tol; } cases[] = {{2, 100, 1e-8}, {3, 100, 1e-8}, {4, 25, 1e-7}};
  for (const auto& c : cases) {
    const auto r = verify_invariance(c.n, cycle(c.n), c.trials, 2024 + c.n, c.tol);
    o.pass = o.pass && r.passed && r.comparisons == 2 * c.trials;
    o.detail += "n=" + std::to_string(c.n) + " max " + sci(r.max_deviation) + " (" +
                std::to_string(r.comparisons) + " pairs) ";
  }
  return o;
}

Outcome transcendence_degree() {
  Outcome o;
  const std::size_t expected[] = {9, 54, 243};
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_independence(n, cycle(n), 5, 4096 + n);
    double worst = 1.0;
    bool ok = r.passed && r.reports.size() == 5 && r.expected_rank == expected[n - 2];
    for (const auto& rep : r.reports) {
      ok = ok && rep.rank == expected[n - 2] && rep.rank_ratio >= 1e-6;
      worst = std::min(worst, rep.rank_ratio);
    }
    o.pass = o.pass && ok;
    o.detail += "n=" + std::to_string(n) + " rank " +
                std::to_string(r.reports.empty() ? 0 : r.reports.front().rank) + "/" +
                std::to_string(expected[n - 2]) + " min ratio " + sci(worst) + " ";
  }
  return o;
}

Outcome bloch_round_trip() {
  Outcome o;
  double worst_round = 0.0, worst_compat = 0.0;
  Rng rng(31337);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 50; ++t) {
      const DensityOperator rho = random_trace_one(n, rng);
      worst_round = std::max(worst_round,
                             (from_bloch(to_bloch(rho)).matrix() - rho.matrix()).cwiseAbs().maxCoeff());
    }
  for (int n = 2; n <= 3; ++n)
    for (int t = 0; t < 50; ++t) {
      const DensityOperator rho = random_trace_one(n, rng);
      const LocalSpecial g = sample_special(n, derive_seed(99, std::uint64_t(100 * n + t)));
      worst_compat = std::max(worst_compat, max_coord_diff(to_bloch(act_density(g, rho)),
                                                           act_bloch(adjoint(g), to_bloch(rho))));
    }
  o.pass = worst_round <= 1e-12 && worst_compat <= 1e-10;
  o.detail = "round trip " + sci(worst_round) + ", conjugation " + sci(worst_compat);
  return o;
}

Outcome flag_bundle() {
  Outcome o;
  double worst_round = 0.0, worst_norm = 0.0;
  for (int n = 2; n <= 4; ++n) {
    Rng rng(derive_seed(555, std::uint64_t(n)));
    for (int t = 0; t < 100; ++t) {
      const BundlePoint p = random_bundle_point(cycle(n), rng);
      const BundlePoint q = bundle_from_flags(cycle(n), flags_from_bundle(p).flags);
      for (std::size_t k = 0; k < p.a.size(); ++k) {
        worst_round = std::max(worst_round, max_abs(p.a[k] - q.a[k]));
        worst_round = std::max(worst_round, std::abs(p.edge[k][0] - q.edge[k][0]));
        worst_round = std::max(worst_round, std::abs(p.edge[k][1] - q.edge[k][1]));
      }
    }
  }
  Rng rng(777);
  for (int t = 0; t < 100; ++t) {
    Vec3C v, u;
    for (std::size_t k = 0; k < 3; ++k) {
      v[k] = uniform_square(rng);
      u[k] = uniform_square(rng);
    }
    const FlagPair f{v, u - (killing(u, v) / norm2(v)) * v};
    const Mat3C r =
        sample(1, derive_seed(778, std::uint64_t(t)), t % 2 ? SampleMode::Complex : SampleMode::Compact)
            .factor(1);
    const auto [n1, m1] = torsor_norms(f);
    const auto [n2, m2] = torsor_norms({r * f.v, r * f.w});
    worst_norm = std::max({worst_norm, std::abs(n1 - n2), std::abs(m1 - m2)});
  }
  o.pass = worst_round <= 1e-10 && worst_norm <= 1e-10;
  o.detail = "round trip " + sci(worst_round) + ", norm drift " + sci(worst_norm);
  return o;
}

Outcome vector_field_count() {
  Outcome o;
  const std::size_t expected[] = {1, 8, 81, 1024};
  for (int n = 2; n <= 5; ++n) {
    const std::size_t got = enumerate(n).size();
    o.pass = o.pass && got == expected[n - 2];
    o.detail += "n=" + std::to_string(n) + ":" + std::to_string(got) + " ";
  }
  return o;
}

Outcome section() {
  Outcome o;
  double worst = 0.0;
  int members = 0, total = 0;
  for (int n = 2; n <= 3; ++n) {
    Rng rng(derive_seed(808, std::uint64_t(n)));
    for (int t = 0; t < 50; ++t) {
      const BlochState b = random_bloch(n, rng);
      const Canonicalized c = canonicalize(b, cycle(n));
      members += section_membership(c.section.state, cycle(n), 1e-8).member;
      ++total;
      worst = std::max(worst, max_relative_deviation(assemble(b, cycle(n)).values,
                                                     assemble(c.section.state, cycle(n)).values));
    }
  }
  o.pass = members == total && worst <= 1e-8;
  o.detail = std::to_string(members) + "/" + std::to_string(total) + " in S, invariant drift " + sci(worst);
  for (int n = 2; n <= 3; ++n) {
    const SectionDimension d = section_dimension(cycle(n), 9);
    o.pass = o.pass && d.dimension == std::size_t(oracle::ipow(4, n) - 3 * n - 1);
    o.detail += ", dim S(n=" + std::to_string(n) + ")=" + std::to_string(d.dimension);
  }
  return o;
}

Outcome degeneracy() {
  Outcome o;
  const struct { const char* kind; int n; const char* sites; } cases[] = {
      {"product-z", 2, "{1,2}"}, {"product-z", 3, "{1,2,3}"}, {"mixed", 2, "{1,2}"},
      {"mixed", 3, "{1,2,3}"},   {"bell", 2, "{1,2}"}};
  for (const auto& c : cases) {
    const CliRun g = cli_run({"gen", "--kind", c.kind, "--n", std::to_string(c.n)});
    const std::string path = "acceptance_" + std::string(c.kind) + std::to_string(c.n) + ".json";
    { std::ofstream(path) << g.out; }
    const CliRun r = cli_run({"invariants", "--in", path});
    std::remove(path.c_str());
    const bool ok = r.code == 2 && r.err.find(std::string("sites ") + c.sites) != std::string::npos;
    o.pass = o.pass && ok;
    o.detail += std::string(c.kind) + "(" + std::to_string(c.n) + ")->" + std::to_string(r.code) +
                " " + c.sites + " ";
  }
  return o;
}

Outcome frame_edge_degeneration() {
  Outcome o;
  double worst_zero = 0.0, worst_norm = 0.0;
  Rng rng(909);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 3;
    const BlochState b = random_bloch(n, rng);
    const MovingFrame f = frame(b, cycle(n));
    for (int j = 1; j <= n; ++j) {
      const int i = cycle(n).out(j);
      const auto pair = edge_lt_unchecked(b, f, i, j);
      worst_zero = std::max(worst_zero, std::abs(pair[0].value));
      worst_norm = std::max(worst_norm, std::abs(pair[1].value - norm2(f.vector(j, 1))));
    }
  }
  o.pass = worst_zero <= 1e-10 && worst_norm <= 1e-10;
  o.detail = "|lt11| " + sci(worst_zero) + ", |lt12 - |b|^2| " + sci(worst_norm);
  return o;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  } criteria[] = {
      {"invariant count", invariant_count, 1.0},
      {"G-invariance", g_invariance, 30.0},
      {"transcendence degree", transcendence_degree, 120.0},
      {"Bloch round trip", bloch_round_trip, 0.0},
      {"flag-bundle round trip and torsor norms", flag_bundle, 0.0},
      {"vector-field count", vector_field_count, 0.0},
      {"section", section, 0.0},
      {"degeneracy handling", degeneracy, 0.0},
      {"frame-edge degeneration", frame_edge_degeneration, 0.0},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += " over time budget";
    }
    failures += !o.pass;
    std::printf("[%d] %-42s %s  (%.2fs) %s\n", index, c.name, o.pass ? "PASS" : "FAIL", seconds,
                o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
