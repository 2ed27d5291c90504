#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occ/config.hpp"
#include "occ/instance.hpp"
#include "occ/report.hpp"

namespace occ {

struct GeneratedInstance {
  LabeledInstance instance;
  std::string descriptor;
};

/// Builds a generator instance by name from key=value parameters:
///   all-positive  m
///   yao           m [right_right=+|-]
///   two-clique    m k
///   planted       clusters size [flip=0] [seed]
///   random        n [density=0.5] [seed]
/// `default_seed` fills a missing seed. Unknown names or keys are rejected.
GeneratedInstance generate(std::string_view name, const std::map<std::string, std::string>& params,
                           std::uint64_t default_seed = 0);

/// Runs `algorithm` (greedy, dense or mixed) over the whole instance and
/// certifies it against the configured oracle. Throws InvariantError if the
/// trace ever splits a cluster.
ExperimentReport run_experiment(const LabeledInstance& inst, const std::string& descriptor,
                                std::string_view algorithm, const RunConfig& config);

struct VerifyOptions {
  std::size_t count = 0;  ///< corpus size; 0 picks the suite default
  std::size_t max_n = 9;  ///< largest random instance
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t exact_cap = default_exact_cap;
};

struct SuiteResult {
  std::string suite;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> notes;
  /// .occ text of the first violating instance.
  std::optional<std::string> counterexample;

  bool passed() const { return violations == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs a named property suite over a seeded corpus.
SuiteResult run_suite(std::string_view suite, const VerifyOptions& options);

// Corpora shared by the suites and the acceptance tests.

/// `count` random instances with 2 <= n <= max_n and a random edge density.
std::vector<GeneratedInstance> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);
/// Every generator family at sizes with n <= 12.
std::vector<GeneratedInstance> generator_corpus();
/// Streams for the Dense checks, n <= 12, alternating tau between 1.1 and 1.5.
struct DenseStream {
  GeneratedInstance input;
  DenseConfig config;
};
std::vector<DenseStream> dense_corpus(std::size_t count, std::uint64_t seed);

/// Bell numbers by the Bell triangle, independent of the enumerator.
std::vector<std::uint64_t> bell_numbers(std::size_t up_to);

struct SearchOptions {
  std::string algorithm = "greedy";
  std::size_t n = 8;
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// "profit" minimizes the profit ratio, "cost" maximizes the cost ratio.
  std::string objective = "profit";
  RunConfig config;
};

struct SearchResult {
  ExperimentReport worst;
  LabeledInstance instance;
  std::size_t trials = 0;
};

/// Random search over instances and arrival orders; the worst report is
/// certified by the exact oracle, so n must not exceed the exact cap.
SearchResult search_worst(const SearchOptions& options);

/// Greedy on two-clique(m, k) for m = 3..m_max and every k: cost against the
/// exact optimum and the n - 1 - cost(OPT) lower bound. Tab-separated table.
std::string sweep_two_clique(std::size_t m_max, const RunConfig& config);

/// Ratio of expectations for Greedy and Dense when the input is the all-positive
/// graph on 2m vertices with probability 1-q and the 6m-vertex gadget with
/// probability q. Tab-separated table over q = 0, 0.25, ..., 1.
std::string yao_experiment(std::size_t m, const RunConfig& config);

struct CsvResult {
  std::string csv;
  std::vector<std::string> warnings;
};

/// One CSV row per readable report in `dir` (sorted by file name).
CsvResult report_csv(const std::string& dir);

}  // namespace occ
