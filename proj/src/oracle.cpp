#include "occ/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>

#include "occ/error.hpp"

namespace occ {

std::string_view to_string(OraclePolicy policy) {
  switch (policy) {
    case OraclePolicy::exact_only: return "exact_only";
    case OraclePolicy::exact_then_heuristic: return "exact_then_heuristic";
    case OraclePolicy::heuristic_only: return "heuristic_only";
  }
  return "?";
}

OraclePolicy parse_oracle_policy(std::string_view name) {
  if (name == "exact_only") return OraclePolicy::exact_only;
  if (name == "exact_then_heuristic") return OraclePolicy::exact_then_heuristic;
  if (name == "heuristic_only") return OraclePolicy::heuristic_only;
  throw InvalidArgument("unknown oracle policy '" + std::string(name) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

void check_prefix(const LabeledInstance& inst, std::size_t t) {
  if (t > inst.size()) throw InvalidArgument("prefix longer than instance");
}

// Depth-first walk over restricted-growth strings in lexicographic order, so
// the first maximizer met is the lexicographically smallest one.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const LabeledInstance& inst, std::size_t t)
      : inst_(inst), t_(t), rgs_(t), best_rgs_(t), pos_(t * t), size_(t + 1) {}

  void run() {
    if (t_ == 0) {
      visited_ = 1;
      best_ = 0;
      return;
    }
    rgs_[0] = 0;
    size_[0] = 1;
    descend(1, 1, 0);
  }

  std::int64_t best() const { return best_; }
  std::uint64_t visited() const { return visited_; }
  const std::vector<std::uint32_t>& best_rgs() const { return best_rgs_; }

 private:
  // Vertex i is about to be placed; blocks 0..blocks-1 are open.
  void descend(std::size_t i, std::uint32_t blocks, std::int64_t profit) {
    if (i == t_) {
      ++visited_;
      if (profit > best_) {
        best_ = profit;
        best_rgs_ = rgs_;
      }
      return;
    }
    std::uint32_t* pos = &pos_[i * t_];
    std::fill_n(pos, blocks, 0);
    std::int64_t neg = 0;
    const auto edges = inst_.back_edges(static_cast<Vertex>(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (edges[j] == EdgeSign::positive) ++pos[rgs_[j]];
      else ++neg;
    }
    // Joining block b agrees with its positive edges into b and with every
    // negative edge leaving b.
    for (std::uint32_t b = 0; b <= blocks; ++b) {
      const std::int64_t pos_in = b < blocks ? pos[b] : 0;
      const std::int64_t neg_in = b < blocks ? size_[b] - pos_in : 0;
      rgs_[i] = b;
      ++size_[b];
      descend(i + 1, b == blocks ? blocks + 1 : blocks, profit + pos_in + neg - neg_in);
      --size_[b];
    }
  }

  const LabeledInstance& inst_;
  std::size_t t_;
  std::vector<std::uint32_t> rgs_;
  std::vector<std::uint32_t> best_rgs_;
  std::vector<std::uint32_t> pos_;  // one scratch row per depth
  std::vector<std::int64_t> size_;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::min();
  std::uint64_t visited_ = 0;
};

// Label-vector state for local search. Relocations need splits, which the
// merge-only Clustering does not offer.
class LocalSearch {
 public:
  LocalSearch(const LabeledInstance& inst, std::size_t t, std::vector<std::uint32_t> labels)
      : inst_(inst), t_(t), labels_(std::move(labels)) {}

  std::vector<std::uint32_t> run() {
    while (improve()) {
    }
    return labels_;
  }

 private:
  enum class Kind { relocate = 0, merge = 1 };

  struct Move {
    std::int64_t delta = 0;
    Kind kind = Kind::relocate;
    std::uint32_t a = 0;  // vertex (relocate) or first cluster (merge)
    std::uint32_t b = 0;  // target cluster; `fresh` for a new singleton
  };

  bool improve() {
    const std::uint32_t slots = static_cast<std::uint32_t>(t_);
    const std::uint32_t fresh = slots;  // sorts after every real cluster
    std::vector<std::int64_t> size(slots, 0);
    for (std::size_t v = 0; v < t_; ++v) ++size[labels_[v]];

    // pos[v][c]: positive edges from v into cluster c (excluding v itself).
    std::vector<std::int64_t> pos(t_ * slots, 0);
    std::vector<std::int64_t> inter(slots * slots, 0);
    for (Vertex i = 1; i < t_; ++i) {
      const auto edges = inst_.back_edges(i);
      for (Vertex j = 0; j < i; ++j) {
        if (edges[j] != EdgeSign::positive) continue;
        ++pos[i * slots + labels_[j]];
        ++pos[j * slots + labels_[i]];
        if (labels_[i] != labels_[j]) {
          ++inter[labels_[i] * slots + labels_[j]];
          ++inter[labels_[j] * slots + labels_[i]];
        }
      }
    }

    Move best;
    bool found = false;
    const auto consider = [&](const Move& m) {
      if (m.delta <= 0) return;
      if (!found || m.delta > best.delta ||
          (m.delta == best.delta && std::tuple(m.kind, m.a, m.b) < std::tuple(best.kind, best.a, best.b))) {
        best = m;
        found = true;
      }
    };

    for (std::uint32_t v = 0; v < t_; ++v) {
      const std::uint32_t home = labels_[v];
      // Agreements v currently collects inside its own cluster, net of the
      // cut edges that would agree if it left.
      const std::int64_t stay = 2 * pos[v * slots + home] - (size[home] - 1);
      for (std::uint32_t c = 0; c < slots; ++c) {
        if (c == home || size[c] == 0) continue;
        consider({2 * pos[v * slots + c] - size[c] - stay, Kind::relocate, v, c});
      }
      if (size[home] > 1) consider({-stay, Kind::relocate, v, fresh});
    }
    for (std::uint32_t x = 0; x < slots; ++x) {
      if (size[x] == 0) continue;
      for (std::uint32_t y = x + 1; y < slots; ++y) {
        if (size[y] == 0) continue;
        consider({2 * inter[x * slots + y] - size[x] * size[y], Kind::merge, x, y});
      }
    }
    if (!found) return false;

    if (best.kind == Kind::merge) {
      for (auto& l : labels_)
        if (l == best.b) l = best.a;
    } else if (best.b == fresh) {
      // A cluster of size > 1 exists, so some slot is empty.
      labels_[best.a] =
          static_cast<std::uint32_t>(std::find(size.begin(), size.end(), 0) - size.begin());
    } else {
      labels_[best.a] = best.b;
    }
    return true;
  }

  const LabeledInstance& inst_;
  std::size_t t_;
  std::vector<std::uint32_t> labels_;
};

std::vector<std::uint32_t> agglomerative_start(const LabeledInstance& inst, std::size_t t) {
  Clustering c;
  for (std::size_t v = 0; v < t; ++v) c.arrive(inst);
  for (;;) {
    std::int64_t best = 0;
    ClusterId bx = 0, by = 0;
    const auto& live = c.live();
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (const auto g = c.gain(live[a], live[b]); g > best) {
          best = g;
          bx = live[a];
          by = live[b];
        }
    if (best <= 0) break;
    c.merge(bx, by);
  }
  const auto p = c.partition();
  return {p.labels().begin(), p.labels().end()};
}

std::vector<std::uint32_t> random_start(std::size_t t, std::uint64_t seed, std::uint64_t run) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint32_t> blocks_dist(1, static_cast<std::uint32_t>(t));
  const std::uint32_t blocks = blocks_dist(rng);
  std::uniform_int_distribution<std::uint32_t> pick(0, blocks - 1);
  std::vector<std::uint32_t> labels(t);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

}  // namespace

OracleResult exact_optimum(const LabeledInstance& inst, std::size_t t, std::size_t exact_cap) {
  check_prefix(inst, t);
  if (t > exact_cap)
    throw CapacityError("exact oracle refuses t=" + std::to_string(t) + " above cap " +
                        std::to_string(exact_cap));
  const auto start = Clock::now();
  PartitionEnumerator e(inst, t);
  e.run();
  OracleResult r;
  r.clustering = Partition(e.best_rgs());
  r.profit = e.best();
  r.exact = true;
  r.visited = e.visited();
  r.elapsed = Clock::now() - start;
  return r;
}

OracleResult local_search_optimum(const LabeledInstance& inst, std::size_t t,
                                  std::size_t restarts, std::uint64_t seed) {
  check_prefix(inst, t);
  if (restarts == 0) throw InvalidArgument("local search needs at least one restart");
  const auto start = Clock::now();
  OracleResult r;
  r.profit = std::numeric_limits<std::int64_t>::min();
  for (std::size_t run = 0; run < restarts; ++run) {
    auto labels = run == 0 ? agglomerative_start(inst, t) : random_start(t, seed, run);
    Partition p(LocalSearch(inst, t, std::move(labels)).run());
    const std::int64_t profit = t ? score(p, inst).profit : 0;
    if (profit > r.profit) {
      r.profit = profit;
      r.clustering = std::move(p);
    }
  }
  r.exact = false;
  r.visited = restarts;
  r.elapsed = Clock::now() - start;
  return r;
}

OracleResult oracle(const LabeledInstance& inst, std::size_t t, const OracleOptions& opts) {
  switch (opts.policy) {
    case OraclePolicy::exact_only:
      return exact_optimum(inst, t, opts.exact_cap);
    case OraclePolicy::exact_then_heuristic:
      if (t <= opts.exact_cap) return exact_optimum(inst, t, opts.exact_cap);
      return local_search_optimum(inst, t, opts.restarts, opts.seed);
    case OraclePolicy::heuristic_only:
      return local_search_optimum(inst, t, opts.restarts, opts.seed);
  }
  throw InvalidArgument("unknown oracle policy");
}

}  // namespace occ
