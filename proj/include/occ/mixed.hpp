#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "occ/dense.hpp"
#include "occ/greedy.hpp"

namespace occ {

struct MixedConfig {
  double p = 0.5;  ///< probability of running Dense
  DenseConfig dense;
  GreedyPolicy greedy;
  std::uint64_t seed = 0;
};

enum class Branch { greedy, dense };

std::string_view to_string(Branch branch);

/// alpha / (2 + 2 eta (2 - alpha)).
double recommended_p(double alpha, double eta);

/// 1/2 + (alpha eta / 2) / (1 + 2 eta (1 - alpha/2)), split as 1/2 plus the
/// returned excess so tiny margins survive floating point.
double mixed_ratio_excess(double alpha, double eta);

/// The branch a seed selects: one uniform draw in [0, 1), Dense iff below p.
Branch choose_branch(double p, std::uint64_t seed);

struct MixedRun {
  Branch branch = Branch::greedy;
  std::vector<Partition> trace;
  NearOptChain chain;  // empty on the Greedy branch
};

/// Flips the seeded coin once before the first arrival and then behaves
/// exactly like the chosen algorithm.
MixedRun mixed_run(const LabeledInstance& inst, const MixedConfig& config);

}  // namespace occ
