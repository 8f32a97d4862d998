#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qubitinv/error.hpp"
#include "qubitinv/independence.hpp"
#include "qubitinv/invariants.hpp"
#include "qubitinv/random.hpp"
#include "qubitinv/section.hpp"
#include "qubitinv/vector_field.hpp"

namespace qubitinv::cli {

namespace {

struct Globals {
  std::uint64_t seed = 1;
  double tol = 0.0;
  bool tol_given = false;
  std::string gamma = "cycle";
  std::string format;
  std::string out_path;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fixed(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "% .12f", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

Eigen::MatrixXcd pure(const Eigen::VectorXcd& psi) { return psi * psi.adjoint(); }

void require_range(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw Error(ErrorCode::BadN, what + " needs " + std::to_string(lo) + " <= n <= " +
                                     std::to_string(hi) + ", got " + std::to_string(n));
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DegenerateState:
    case ErrorCode::DegenerateFlag:
    case ErrorCode::BranchFailure:
      return kDegenerate;
    default:
      return kUsage;
  }
}

std::string degenerate_message(const DegenerateStateError& e) { return e.what(); }

BlochState load_state(const std::string& path) {
  return io::read_state(io::parse(io::read_file(path)));
}

std::string invariants_table(const InvariantVector& v) {
  std::ostringstream s;
  s << "# n=" << v.n << " gamma=" << v.gamma << " count=" << v.size() << "\n";
  for (std::size_t k = 0; k < v.size(); ++k)
    s << pad(to_string(v.labels[k]), 28) << fixed(v.values[k].real()) << "  "
      << fixed(v.values[k].imag()) << "\n";
  return s.str();
}

}  // namespace

io::json generate(const std::string& kind, int n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  if (kind == "random") {
    require_range(n, 1, kMaxMatrixSites, "random");
    return io::to_json(random_trace_one(n, rng));
  }
  if (kind == "random-hermitian") {
    require_range(n, 1, kMaxMatrixSites, "random-hermitian");
    return io::to_json(random_hermitian_density(n, rng));
  }
  if (kind == "product-z") {
    require_range(n, 1, kMaxBlochSites, "product-z");
    BlochState b(n);
    for (unsigned mask : b.layout().masks()) b.component(mask).back() = 1.0;
    return io::to_json(b);
  }
  if (kind == "mixed") {
    require_range(n, 1, kMaxMatrixSites, "mixed");
    const auto dim = Eigen::Index{1} << n;
    return io::to_json(DensityOperator(
        n, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim)));
  }
  const auto dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  if (kind == "bell") {
    require_range(n, 2, 2, "bell");
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  } else if (kind == "ghz") {
    require_range(n, 2, kMaxMatrixSites, "ghz");
    psi(0) = psi(dim - 1) = 1.0 / std::sqrt(2.0);
  } else if (kind == "w") {
    require_range(n, 2, kMaxMatrixSites, "w");
    for (int k = 0; k < n; ++k) psi(Eigen::Index{1} << k) = 1.0 / std::sqrt(double(n));
  } else {
    throw Error(ErrorCode::BadKind, "unknown kind \"" + kind + "\"");
  }
  return io::to_json(DensityOperator(n, pure(psi)));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-symmetry invariants of n-qubit states in the Bloch model", "qubitinv"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  auto* tol_opt = app.add_option("--tol", g.tol, "Tolerance override")
                      ->check(CLI::PositiveNumber);
  app.add_option("--gamma", g.gamma, "Vector field: cycle or an edge list like 1>2,2>1");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", g.out_path, "Write output to this file");

  std::string result;
  std::function<int()> action;

  // gen
  std::string kind;
  int n = 0;
  auto* gen = app.add_subcommand("gen", "Generate a state file");
  gen->add_option("--kind", kind, "random, random-hermitian, product-z, mixed, bell, ghz, w")
      ->required();
  gen->add_option("--n", n, "Number of qubits")->required();
  gen->callback([&] {
    action = [&] {
      result = io::dump(generate(kind, n, g.seed));
      return int(kOk);
    };
  });

  std::string in_path;
  auto* bloch = app.add_subcommand("bloch", "Convert a state file to Bloch components");
  bloch->add_option("--in", in_path)->required();
  bloch->callback([&] {
    action = [&] {
      result = io::dump(io::to_json(load_state(in_path)));
      return int(kOk);
    };
  });

  auto* unbloch = app.add_subcommand("unbloch", "Convert a state file to a density matrix");
  unbloch->add_option("--in", in_path)->required();
  unbloch->callback([&] {
    action = [&] {
      result = io::dump(io::to_json(from_bloch(load_state(in_path))));
      return int(kOk);
    };
  });

  auto* inv = app.add_subcommand("invariants", "Evaluate the invariant basis");
  inv->add_option("--in", in_path)->required();
  inv->callback([&] {
    action = [&] {
      const BlochState b = load_state(in_path);
      const InvariantVector v = assemble(b, parse_gamma(g.gamma, b.n()));
      if (g.format == "csv")
        result = io::to_csv(v);
      else if (g.format == "table")
        result = invariants_table(v);
      else
        result = io::dump(io::to_json(v));
      return int(kOk);
    };
  });

  int check_trials = 0;
  bool identity_only = false;
  std::string mode = "both";
  auto* check = app.add_subcommand("check", "Check invariance under random group elements");
  auto* check_in = check->add_option("--in", in_path, "State file; random states if omitted");
  auto* check_n = check->add_option("--n", n, "Number of qubits for random states");
  check_in->excludes(check_n);
  check->add_option("--trials", check_trials, "Number of trials")->default_val(100);
  check->add_flag("--identity-only", identity_only, "Act by the identity only");
  check->add_option("--mode", mode)->check(CLI::IsMember({"compact", "complex", "both"}));
  check->callback([&] {
    action = [&] {
      InvarianceOptions opts;
      opts.identity_only = identity_only;
      if (mode == "compact") opts.modes = {SampleMode::Compact};
      if (mode == "complex") opts.modes = {SampleMode::Complex};
      if (in_path.empty() && !*check_n) throw Error(ErrorCode::BadN, "check needs --in or --n");
      std::optional<BlochState> state;
      if (!in_path.empty()) state = load_state(in_path);
      const int sites = state ? state->n() : n;
      const VectorField gamma = parse_gamma(g.gamma, sites);
      const double tol = g.tol_given ? g.tol : (sites >= 4 ? 1e-7 : 1e-8);
      const InvarianceResult r =
          state ? verify_invariance(*state, gamma, check_trials, g.seed, tol, opts)
                : verify_invariance(sites, gamma, check_trials, g.seed, tol, opts);
      if (g.format == "json") {
        io::json j;
        j["n"] = sites;
        j["gamma"] = gamma.describe();
        j["comparisons"] = r.comparisons;
        j["max_deviation"] = r.max_deviation;
        j["tol"] = tol;
        j["passed"] = r.passed;
        result = io::dump(j);
      } else {
        result = "max relative deviation " + sci(r.max_deviation) + " over " +
                 std::to_string(r.comparisons) + " comparisons (tol " + sci(tol) + "): " +
                 (r.passed ? "PASS" : "FAIL") + "\n";
      }
      return int(r.passed ? kOk : kVerificationFailed);
    };
  });

  auto* rank_cmd = app.add_subcommand("rank", "Jacobian rank of the invariant map");
  rank_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 4));
  int rank_trials = 0;
  rank_cmd->add_option("--trials", rank_trials)->default_val(5);
  rank_cmd->callback([&] {
    action = [&] {
      IndependenceOptions opts;
      if (g.tol_given) opts.rel_tol = g.tol;
      const auto r = verify_independence(n, parse_gamma(g.gamma, n), rank_trials, g.seed, opts);
      if (g.format == "json") {
        io::json j;
        j["expected_rank"] = r.expected_rank;
        j["passed"] = r.passed;
        j["redraws"] = r.redraws;
        io::json reports = io::json::array();
        for (const auto& rep : r.reports) reports.push_back(io::to_json(rep));
        j["reports"] = std::move(reports);
        result = io::dump(j);
      } else {
        std::ostringstream s;
        s << "n  expected  computed  sigma_rank/sigma_1  status\n";
        for (const auto& rep : r.reports)
          s << pad(std::to_string(n), 3) << pad(std::to_string(r.expected_rank), 10)
            << pad(std::to_string(rep.rank), 10) << pad(sci(rep.rank_ratio), 20)
            << (rep.rank == r.expected_rank ? "PASS" : "FAIL") << "\n";
        result = s.str();
      }
      return int(r.passed ? kOk : kVerificationFailed);
    };
  });

  std::vector<std::string> pair_paths;
  auto* equiv = app.add_subcommand("equiv", "Compare the invariants of two states");
  equiv->add_option("files", pair_paths, "Two state files")->expected(2)->required();
  equiv->callback([&] {
    action = [&] {
      const BlochState x = load_state(pair_paths[0]);
      const BlochState y = load_state(pair_paths[1]);
      if (x.n() != y.n()) throw Error(ErrorCode::SizeMismatch, "states differ in n");
      const VectorField gamma = parse_gamma(g.gamma, x.n());
      const double tol = g.tol_given ? g.tol : 1e-7;
      std::string verdict, detail;
      int code = kOk;
      double deviation = 0.0;
      try {
        deviation = max_relative_deviation(assemble(x, gamma).values, assemble(y, gamma).values);
        verdict = deviation <= tol ? "equivalent" : "distinct";
        detail = deviation <= tol
                     ? "invariants agree; this is necessary for lying in one orbit and "
                       "sufficient only for generic states"
                     : "invariants differ; the states lie in different orbits";
      } catch (const DegenerateStateError& e) {
        verdict = "inconclusive-degenerate";
        detail = degenerate_message(e);
        code = kDegenerate;
      }
      if (g.format == "json") {
        io::json j;
        j["verdict"] = verdict;
        j["max_deviation"] = deviation;
        j["tol"] = tol;
        j["gamma"] = gamma.describe();
        j["note"] = detail;
        result = io::dump(j);
      } else {
        result = verdict + "\n" + detail + "\n";
      }
      return code;
    };
  });

  auto* canon = app.add_subcommand("canonicalize", "Move a state into the section");
  canon->add_option("--in", in_path)->required();
  canon->callback([&] {
    action = [&] {
      const BlochState b = load_state(in_path);
      result = io::dump(io::to_json(canonicalize(b, parse_gamma(g.gamma, b.n()))));
      return int(kOk);
    };
  });

  auto* weyl = app.add_subcommand("weyl", "Sign-diagonal stabilizer of the section");
  weyl->add_option("--n", n)->required();
  int weyl_trials = 0;
  weyl->add_option("--trials", weyl_trials)->default_val(50);
  weyl->callback([&] {
    action = [&] {
      const auto w = weyl_enumerate(n, parse_gamma(g.gamma, n), weyl_trials, g.seed);
      if (g.format == "json") {
        io::json j;
        j["n"] = n;
        j["gamma"] = parse_gamma(g.gamma, n).describe();
        j["order"] = w.order;
        j["is_subgroup"] = w.is_subgroup;
        j["codes"] = w.codes;
        io::json elems = io::json::array();
        for (const auto& e : w.elements) elems.push_back(io::to_json(e));
        j["elements"] = std::move(elems);
        result = io::dump(j);
      } else {
        std::ostringstream s;
        s << "order " << w.order << (w.is_subgroup ? " (subgroup)" : " (not closed)") << "\n";
        static const char* names[4] = {"I", "diag(-1,-1,1)", "diag(-1,1,-1)", "diag(1,-1,-1)"};
        for (const auto& c : w.codes) {
          for (std::size_t k = 0; k < c.size(); ++k) s << (k ? " x " : "") << names[c[k]];
          s << "\n";
        }
        result = s.str();
      }
      return int(w.is_subgroup ? kOk : kVerificationFailed);
    };
  });

  auto* count_cmd = app.add_subcommand("count", "Invariant count breakdown");
  count_cmd->add_option("--n", n)->required();
  count_cmd->callback([&] {
    action = [&] {
      if (n > 8) throw Error(ErrorCode::TooLarge, "count supports n <= 8");
      const auto c = count(n);
      if (g.format == "json") {
        io::json j;
        j["n"] = n;
        j["norms"] = c.norms;
        j["pairs"] = c.pairs;
        j["edges"] = c.edges;
        j["thetas"] = c.thetas;
        j["sections"] = c.total_sections;
        j["basis"] = c.total_basis;
        result = io::dump(j);
      } else {
        std::ostringstream s;
        s << "n " << n << "\nnorms " << c.norms << "\npairs " << c.pairs << "\nedges " << c.edges
          << "\nthetas " << c.thetas << "\nsections " << c.total_sections << "\nbasis "
          << c.total_basis << "\n";
        result = s.str();
      }
      return int(kOk);
    };
  });

  auto* vf = app.add_subcommand("vf", "Enumerate nowhere-zero vector fields");
  vf->add_option("--n", n)->required();
  vf->callback([&] {
    action = [&] {
      if (n > 5) throw Error(ErrorCode::TooLarge, "vf enumeration supports n <= 5");
      const auto fields = enumerate(n);
      if (g.format == "json") {
        io::json j = io::json::array();
        for (const auto& f : fields) j.push_back(f.describe());
        result = io::dump(j);
      } else {
        std::ostringstream s;
        for (const auto& f : fields)
          s << f.describe() << (is_permutation(f) ? "  permutation" : "") << "\n";
        result = s.str();
      }
      return int(kOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }
  g.tol_given = tol_opt->count() > 0;

  int code = kOk;
  try {
    code = action();
  } catch (const DegenerateStateError& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  if (g.out_path.empty()) {
    out << result;
  } else {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << g.out_path << "\n";
      return kUsage;
    }
    f << result;
  }
  return code;
}

}  // namespace qubitinv::cli
