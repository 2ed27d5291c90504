#pragma once

#include <string_view>
#include <vector>

#include "occ/clustering.hpp"
#include "occ/instance.hpp"

namespace occ {

/// Which positive-gain pair Greedy merges next. Either way ties go to the
/// smallest (surviving id, other id) pair, and a pair is merged only when its
/// gain is strictly positive.
enum class MergeOrder {
  max_gain,     ///< the pair with the largest gain
  first_found,  ///< the first pair with positive gain in id order
};

std::string_view to_string(MergeOrder order);
MergeOrder parse_merge_order(std::string_view name);

struct GreedyPolicy {
  MergeOrder order = MergeOrder::max_gain;
};

/// Arrives the next vertex as a singleton, then merges until no pair of
/// clusters has positive gain.
void greedy_step(Clustering& c, const LabeledInstance& inst, GreedyPolicy policy = {});

/// Partition after each arrival's merge cascade; element t-1 covers [1, t].
std::vector<Partition> greedy_run(const LabeledInstance& inst, GreedyPolicy policy = {});

}  // namespace occ
