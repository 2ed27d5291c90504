#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

#include "occ/clustering.hpp"
#include "occ/instance.hpp"

namespace occ {

/// Offline clustering of a prefix together with how it was obtained.
struct OracleResult {
  Partition clustering;
  std::int64_t profit = 0;
  bool exact = false;
  /// Partitions visited by the enumerator, or local-search runs performed.
  std::uint64_t visited = 0;
  std::chrono::duration<double, std::milli> elapsed{};
};

enum class OraclePolicy { exact_only, exact_then_heuristic, heuristic_only };

std::string_view to_string(OraclePolicy policy);
OraclePolicy parse_oracle_policy(std::string_view name);

struct OracleOptions {
  OraclePolicy policy = OraclePolicy::exact_then_heuristic;
  std::size_t exact_cap = 12;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t default_exact_cap = 12;

/// Maximum-profit partition of the first t arrivals by enumerating every
/// restricted-growth string. Among maximizers the lexicographically smallest
/// string wins. Throws CapacityError when t > exact_cap.
OracleResult exact_optimum(const LabeledInstance& inst, std::size_t t,
                           std::size_t exact_cap = default_exact_cap);

/// Best of `restarts` best-improvement local searches over the first t
/// arrivals. Run 0 starts from offline greedy agglomeration, run r >= 1 from
/// a random partition drawn from (seed, r). Moves: relocate one vertex (to
/// another cluster or a fresh singleton) or merge two clusters.
OracleResult local_search_optimum(const LabeledInstance& inst, std::size_t t,
                                  std::size_t restarts, std::uint64_t seed);

/// Dispatches on `opts.policy`; exact_then_heuristic falls back to local
/// search above the cap.
OracleResult oracle(const LabeledInstance& inst, std::size_t t, const OracleOptions& opts);

}  // namespace occ
