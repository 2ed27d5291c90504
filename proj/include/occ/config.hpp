#pragma once

#include <string>
#include <string_view>

#include "occ/mixed.hpp"

namespace occ {

/// Settings shared by run/verify/search, parsed from a key-value block:
///
///   # comment
///   alpha = 0.01
///   tau = 1.1
///   t_min = 4
///   eta = 0.0555
///   oracle_policy = exact_then_heuristic
///   exact_cap = 12
///   restarts = 8
///   seed = 42
///   p = 0.5
///   greedy_order = max_gain
///
/// Unknown keys and malformed values are parse errors. The source text is
/// kept so reports can echo it verbatim.
struct RunConfig {
  MixedConfig mixed;
  std::string text;

  const DenseConfig& dense() const { return mixed.dense; }
  const GreedyPolicy& greedy() const { return mixed.greedy; }
  std::uint64_t seed() const { return mixed.seed; }

  /// Sets `seed` everywhere it is consumed (coin flip and oracle restarts).
  void set_seed(std::uint64_t seed);
  void set_exact_cap(std::size_t cap);
};

RunConfig parse_config(std::string_view text);
RunConfig read_config_file(const std::string& path);

}  // namespace occ
