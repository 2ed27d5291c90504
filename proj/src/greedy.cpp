#include "occ/greedy.hpp"

#include <optional>
#include <utility>

#include "occ/error.hpp"

namespace occ {

std::string_view to_string(MergeOrder order) {
  return order == MergeOrder::max_gain ? "max_gain" : "first_found";
}

MergeOrder parse_merge_order(std::string_view name) {
  if (name == "max_gain") return MergeOrder::max_gain;
  if (name == "first_found") return MergeOrder::first_found;
  throw InvalidArgument("unknown merge order '" + std::string(name) + "'");
}

namespace {

std::optional<std::pair<ClusterId, ClusterId>> next_merge(const Clustering& c, MergeOrder order) {
  const auto& live = c.live();
  std::optional<std::pair<ClusterId, ClusterId>> pick;
  std::int64_t best = 0;
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const std::int64_t g = c.gain(live[a], live[b]);
      if (g <= best) continue;
      pick.emplace(live[a], live[b]);
      if (order == MergeOrder::first_found) return pick;
      best = g;
    }
  }
  return pick;
}

}  // namespace

void greedy_step(Clustering& c, const LabeledInstance& inst, GreedyPolicy policy) {
  c.arrive(inst);
  while (const auto pair = next_merge(c, policy.order)) c.merge(pair->first, pair->second);
}

std::vector<Partition> greedy_run(const LabeledInstance& inst, GreedyPolicy policy) {
  std::vector<Partition> trace;
  trace.reserve(inst.size());
  Clustering c;
  for (std::size_t t = 0; t < inst.size(); ++t) {
    greedy_step(c, inst, policy);
    trace.push_back(c.partition());
  }
  return trace;
}

}  // namespace occ
