// occ: command-line front end over the occ C API.
//
//   occ gen <generator> [key=value ...] [--out file]
//   occ run <greedy|dense|mixed> <instance.occ | report> [--config file] [--out file]
//   occ verify <suite|all> [--count N] [--max-n N]
//   occ search <algorithm> [--n N] [--trials N] [--objective profit|cost]
//   occ search --family two-clique|yao [--m-max N | --m N]
//   occ report <dir> [--out file]
//   occ constants --alpha A --tau T --eta E
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "occ/occ.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Globals {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  std::string config_path;
  std::size_t exact_cap = 0;
  unsigned jobs = 0;
};

// Thrown after a C call fails; carries the exit code to use.
struct Failure {
  int code;
};

using InstancePtr = std::unique_ptr<occ_instance, decltype(&occ_instance_free)>;
using ConfigPtr = std::unique_ptr<occ_config, decltype(&occ_config_free)>;
using ReportPtr = std::unique_ptr<occ_report, decltype(&occ_report_free)>;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { occ_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

void check(occ_status status) {
  if (status == OCC_OK) return;
  std::cerr << "occ: " << occ_status_name(status) << ": " << occ_last_error() << '\n';
  throw Failure{status == OCC_ERR_INVARIANT || status == OCC_ERR_CAPACITY || status == OCC_ERR_INTERNAL
                    ? exit_failed
                    : exit_usage};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "occ: cannot write " << path << '\n';
    throw Failure{exit_usage};
  }
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "occ: cannot open " << path << '\n';
    throw Failure{exit_usage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ConfigPtr load_config(const Globals& g) {
  occ_config* raw = nullptr;
  check(g.config_path.empty() ? occ_config_parse(nullptr, &raw)
                              : occ_config_read_file(g.config_path.c_str(), &raw));
  ConfigPtr config(raw, occ_config_free);
  if (g.seed_set) occ_config_set_seed(config.get(), g.seed);
  if (g.exact_cap) occ_config_set_exact_cap(config.get(), g.exact_cap);
  return config;
}

void print_summary(const occ_report* r) {
  std::fprintf(stderr, "profit %lld / opt %lld (ratio %.6f%s), cost %lld / opt %lld (ratio %.6f)",
               static_cast<long long>(occ_report_profit(r)), static_cast<long long>(occ_report_opt_profit(r)),
               occ_report_ratio(r), occ_report_opt_exact(r) ? ", exact" : ", heuristic",
               static_cast<long long>(occ_report_cost(r)), static_cast<long long>(occ_report_opt_cost(r)),
               occ_report_cost_ratio(r));
  if (std::string(occ_report_branch(r)) != "-") std::fprintf(stderr, ", branch %s", occ_report_branch(r));
  std::fprintf(stderr, "\n");
}

int cmd_gen(const Globals& g, const std::string& generator, const std::vector<std::string>& params) {
  std::vector<const char*> argv;
  for (const auto& p : params) argv.push_back(p.c_str());
  occ_instance* raw = nullptr;
  check(occ_instance_generate(generator.c_str(), argv.data(), argv.size(), g.seed, &raw));
  InstancePtr inst(raw, occ_instance_free);
  OwnedString text;
  check(occ_instance_to_text(inst.get(), &text.s));
  emit(text.str(), g.out);
  const std::size_t n = occ_instance_size(inst.get());
  const std::size_t pos = occ_instance_positive_count(inst.get());
  (g.out.empty() ? std::cerr : std::cout) << "n=" << n << " positive=" << pos
                                          << " negative=" << n * (n - 1) / 2 - pos << '\n';
  return exit_ok;
}

int cmd_run(const Globals& g, const std::string& algorithm, const std::string& path) {
  occ_report* raw = nullptr;
  const std::string text = slurp(path);
  if (text.rfind("occ-report 1\n", 0) == 0) {
    check(occ_rerun_report_text(text.data(), text.size(), &raw));
  } else {
    occ_instance* inst_raw = nullptr;
    check(occ_instance_parse_named(text.data(), text.size(), path.c_str(), &inst_raw));
    InstancePtr inst(inst_raw, occ_instance_free);
    auto config = load_config(g);
    check(occ_run(inst.get(), algorithm.c_str(), config.get(), &raw));
  }
  ReportPtr report(raw, occ_report_free);
  OwnedString out;
  check(occ_report_to_text(report.get(), &out.s));
  emit(out.str(), g.out);
  print_summary(report.get());
  return exit_ok;
}

int cmd_verify(const Globals& g, const std::string& suite, std::size_t count, std::size_t max_n) {
  std::vector<std::string> suites;
  if (suite == "all") {
    for (std::size_t i = 0; i < occ_suite_count(); ++i) suites.emplace_back(occ_suite_name(i));
  } else {
    suites.push_back(suite);
  }
  occ_verify_options options{count, max_n, g.seed_set ? g.seed : 1, g.jobs, g.exact_cap};
  bool all_passed = true;
  for (const auto& s : suites) {
    int passed = 0;
    OwnedString summary, counterexample;
    check(occ_verify(s.c_str(), &options, &passed, &summary.s, &counterexample.s));
    std::cout << summary.str();
    if (!passed) {
      all_passed = false;
      if (counterexample.s) std::cout << "counterexample (.occ):\n" << counterexample.str();
    }
  }
  return all_passed ? exit_ok : exit_failed;
}

struct SearchArgs {
  std::string algorithm = "greedy";
  std::size_t n = 8;
  std::size_t trials = 2000;
  std::string objective = "profit";
  std::string family;
  std::size_t m_max = 6;
  std::size_t m = 2;
  std::string instance_out;
};

int cmd_search(const Globals& g, const SearchArgs& a) {
  auto config = load_config(g);
  if (a.family == "two-clique" || a.family == "yao") {
    OwnedString table;
    check(a.family == "two-clique" ? occ_sweep_two_clique(a.m_max, config.get(), &table.s)
                                   : occ_yao_experiment(a.m, config.get(), &table.s));
    emit(table.str(), g.out);
    return exit_ok;
  }
  if (!a.family.empty() && a.family != "random") {
    std::cerr << "occ: unknown family '" << a.family << "'\n";
    return exit_usage;
  }
  occ_search_options options{a.algorithm.c_str(), a.n,      a.trials,
                             g.seed_set ? g.seed : 1, g.jobs, a.objective.c_str()};
  occ_report* raw = nullptr;
  occ_instance* inst_raw = nullptr;
  check(occ_search(&options, config.get(), &raw, &inst_raw));
  ReportPtr report(raw, occ_report_free);
  InstancePtr inst(inst_raw, occ_instance_free);
  OwnedString text;
  check(occ_report_to_text(report.get(), &text.s));
  emit(text.str(), g.out);
  if (!a.instance_out.empty()) check(occ_instance_write_file(inst.get(), a.instance_out.c_str()));
  std::cerr << "worst of " << a.trials << " trials: ";
  print_summary(report.get());
  return exit_ok;
}

int cmd_report(const Globals& g, const std::string& dir) {
  OwnedString csv, warnings;
  check(occ_report_csv(dir.c_str(), &csv.s, &warnings.s));
  std::cerr << warnings.str();
  emit(csv.str(), g.out);
  return exit_ok;
}

int cmd_constants(double alpha, double tau, double eta) {
  int holds = 0;
  double bound = 0, p = 0, excess = 0;
  check(occ_check_constants(alpha, tau, eta, &holds));
  check(occ_constants_bound(alpha, tau, &bound));
  check(occ_recommended_p(alpha, eta, &p));
  check(occ_mixed_ratio_excess(alpha, eta, &excess));
  std::printf("constants condition: %s (eta %.6g <= %.6g)\n", holds ? "holds" : "fails", eta, bound);
  std::printf("recommended p: %.6e\n", p);
  std::printf("mixed ratio: 1/2 + %.6e\n", excess);
  return holds ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online correlation clustering: generators, algorithms, oracles and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for generators, corpora and randomized runs")
      ->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--out", g.out, "Write the primary output here instead of stdout");
  app.add_option("--config", g.config_path, "Key-value config block");
  app.add_option("--exact-cap", g.exact_cap, "Largest prefix the exact oracle enumerates (default 12)");
  app.add_option("--jobs", g.jobs, "Worker threads for verify/search (default: all cores)");

  std::string generator;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "Generate an instance in .occ format");
  gen->add_option("generator", generator, "all-positive | yao | two-clique | planted | random")->required();
  gen->add_option("params", params, "key=value parameters");

  std::string algorithm, instance_path;
  auto* run = app.add_subcommand("run", "Run an algorithm and print a report");
  run->add_option("algorithm", algorithm, "greedy | dense | mixed")->required();
  run->add_option("instance", instance_path, ".occ file, or a report to re-run")->required();

  std::string suite;
  std::size_t count = 0, max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run a property suite over a seeded corpus");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--count", count, "Corpus size (suite default if omitted)");
  verify->add_option("--max-n", max_n, "Largest random instance (default 9)");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search for instances with bad competitive ratios");
  search->add_option("algorithm", search_args.algorithm, "greedy | dense | mixed");
  search->add_option("--n", search_args.n, "Vertices per trial");
  search->add_option("--trials", search_args.trials, "Number of random trials");
  search->add_option("--objective", search_args.objective, "profit | cost");
  search->add_option("--family", search_args.family, "random (default) | two-clique | yao");
  search->add_option("--m-max", search_args.m_max, "Largest m for the two-clique sweep");
  search->add_option("--m", search_args.m, "Gadget size for the yao experiment");
  search->add_option("--instance-out", search_args.instance_out, "Also write the worst instance here");

  std::string dir;
  auto* report = app.add_subcommand("report", "Tabulate a directory of reports as CSV");
  report->add_option("dir", dir, "Directory of report files")->required();

  double alpha = 1e-12, tau = 1.0946, eta = 0.0555;
  auto* constants = app.add_subcommand("constants", "Evaluate the Dense/mixed constant conditions");
  constants->add_option("--alpha", alpha);
  constants->add_option("--tau", tau);
  constants->add_option("--eta", eta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (g.exact_cap > 12)
    std::cerr << "occ: warning: exact cap " << g.exact_cap
              << " enumerates Bell(" << g.exact_cap << ") partitions per oracle call\n";

  try {
    if (*gen) return cmd_gen(g, generator, params);
    if (*run) return cmd_run(g, algorithm, instance_path);
    if (*verify) return cmd_verify(g, suite, count, max_n);
    if (*search) return cmd_search(g, search_args);
    if (*report) return cmd_report(g, dir);
    if (*constants) return cmd_constants(alpha, tau, eta);
  } catch (const Failure& f) {
    return f.code;
  }
  return exit_usage;
}
