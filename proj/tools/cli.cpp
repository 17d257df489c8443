#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <string>
#include <vector>

#include "hyperlag/errors.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/solver.hpp"
#include "hyperlag/suites.hpp"
#include "hyperlag/verifier.hpp"

namespace hyperlag::cli {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph Lagrangians: compute, certify and verify colex extremality"};
  app.require_subcommand(1);

  const std::uint64_t default_seed = env_or("HYPERLAG_SEED", 0x5eed);
  const int default_jobs = static_cast<int>(env_or("HYPERLAG_JOBS", 1));

  // colex
  std::uint64_t colex_m = 0;
  int colex_r = 0;
  std::string colex_out;
  auto* colex = app.add_subcommand("colex", "Write the first m r-sets in colex order");
  colex->add_option("--m", colex_m, "Number of edges")->required();
  colex->add_option("--r", colex_r, "Uniformity")->required()->check(CLI::PositiveNumber);
  colex->add_option("--output", colex_out, "Output path (default stdout)");

  // lambda
  std::string lambda_in;
  std::string lambda_out;
  SolverConfig solver;
  solver.seed = default_seed;
  double tol = 1e-7;
  int oracle_n = 0;
  auto* lambda = app.add_subcommand("lambda", "Compute and certify the Lagrangian of a hypergraph");
  lambda->add_option("--input", lambda_in, "Edge-list or JSON hypergraph")->required();
  lambda->add_option("--output", lambda_out, "Output path (default stdout)");
  lambda->add_option("--starts", solver.starts, "Multistart count")->check(CLI::PositiveNumber);
  lambda->add_option("--tol", tol, "KKT tolerance for certification")->check(CLI::PositiveNumber);
  lambda->add_option("--seed", solver.seed, "Random seed");
  lambda->add_option("--oracle-n", oracle_n, "Also run the grid oracle with this denominator");

  // verify
  int verify_r = 0;
  int verify_t = 0;
  std::vector<std::uint64_t> verify_m;
  bool restricted = false;
  std::string verify_out = "verify_report";
  VerifyConfig vcfg;
  vcfg.solver.seed = default_seed;
  vcfg.jobs = default_jobs;
  auto* verify = app.add_subcommand("verify", "Exhaustively compare colex segments against all candidates");
  verify->add_option("--r", verify_r, "Uniformity")->required()->check(CLI::PositiveNumber);
  auto* t_opt = verify->add_option("--t", verify_t, "Verify the whole R1 window of t");
  auto* m_opt = verify->add_option("--m", verify_m, "Edge counts (comma separated)")->delimiter(',');
  verify->add_flag("--restricted", restricted, "Restrict candidates to support [t] (needs --t and --m)");
  verify->add_option("--support-slack", vcfg.support_slack, "Extra support beyond the minimal one")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vcfg.solver.seed, "Random seed");
  verify->add_option("--jobs", vcfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--starts", vcfg.solver.starts, "Multistart count per candidate")->check(CLI::PositiveNumber);
  verify->add_option("--oracle-n", vcfg.oracle_n, "Grid oracle denominator for near-ties");
  verify->add_option("--output", verify_out, "Report prefix: writes <prefix>.json and <prefix>.csv");

  // check
  std::string suite;
  std::uint64_t check_seed = default_seed;
  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("--suite", suite, "Suite name or 'all'")->required();
  check->add_option("--seed", check_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*colex) {
      emit(format_edge_list(colex_segment(colex_m, colex_r)), colex_out, out);
      return Exit::ok;
    }

    if (*lambda) {
      const Hypergraph h = parse_hypergraph(read_file(lambda_in));
      const auto res = maximize(h, solver);
      json j;
      j["input"] = to_json(h);
      j["result"] = to_json(res);
      if (oracle_n > 0) j["oracle"] = to_json(grid_oracle(h, oracle_n));
      const bool certified = res.kkt.on_support <= tol && res.kkt.off_support <= tol;
      j["certified"] = certified;
      emit(j.dump(2) + "\n", lambda_out, out);
      return certified ? Exit::ok : Exit::uncertified;
    }

    if (*verify) {
      std::vector<VerificationReport> reps;
      if (restricted) {
        if (t_opt->count() == 0 || m_opt->count() == 0) {
          err << "verify --restricted needs --t and --m\n";
          return Exit::usage;
        }
        for (auto m : verify_m) reps.push_back(restricted_support_verify(m, verify_r, verify_t, vcfg));
      } else if (t_opt->count() > 0 && m_opt->count() == 0) {
        reps = verify_range(verify_r, verify_t, vcfg);
      } else if (m_opt->count() > 0 && t_opt->count() == 0) {
        for (auto m : verify_m) reps.push_back(verify_conjecture(m, verify_r, vcfg));
      } else {
        err << "verify needs exactly one of --t or --m (both only with --restricted)\n";
        return Exit::usage;
      }
      const std::string csv = reports_to_csv(reps);
      write_file(verify_out + ".json", to_json(reps).dump(2) + "\n");
      write_file(verify_out + ".csv", csv);
      out << csv;
      bool any_counter = false;
      bool any_saturated = false;
      for (const auto& rep : reps) {
        any_counter |= rep.counterexample;
        any_saturated |= rep.saturated;
      }
      if (any_counter) return Exit::counterexample;
      if (any_saturated) {
        err << "warning: best value attained at the support cap; raise --support-slack\n";
        return Exit::saturated;
      }
      return Exit::ok;
    }

    if (*check) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end()) {
          err << "unknown suite '" << suite << "'\n";
          return Exit::usage;
        }
        names.push_back(suite);
      }
      bool all_pass = true;
      out << std::left << std::setw(14) << "suite" << std::setw(10) << "trials" << std::setw(10) << "failures"
          << "status\n";
      for (const auto& name : names) {
        const auto res = run_suite(name, check_seed);
        all_pass &= res.passed();
        out << std::left << std::setw(14) << res.name << std::setw(10) << res.trials << std::setw(10)
            << res.failures << (res.passed() ? "pass" : "FAIL");
        if (!res.passed() && !res.first_failure.empty()) out << "  first: " << res.first_failure;
        out << '\n';
      }
      return all_pass ? Exit::ok : Exit::counterexample;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return Exit::usage;
  }
  return Exit::usage;
}

}  // namespace hyperlag::cli
