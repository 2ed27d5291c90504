#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "occ/instance.hpp"

namespace occ {

/// Agreement / disagreement counts over the arrived prefix.
struct Score {
  std::int64_t profit = 0;
  std::int64_t cost = 0;

  friend bool operator==(const Score&, const Score&) = default;
};

/// Cluster identifier. Always the smallest vertex of the cluster, so ids are
/// stable across merges (the smaller id survives).
using ClusterId = Vertex;

/// Immutable partition of the first `horizon()` arrivals. Each vertex is
/// labelled with the smallest vertex of its cluster; two partitions are equal
/// iff they group the same vertices.
class Partition {
 public:
  Partition() = default;

  /// Any labelling works; labels are renormalized to cluster minima.
  explicit Partition(std::span<const std::uint32_t> labels);

  static Partition singletons(std::size_t horizon);

  std::size_t horizon() const noexcept { return labels_.size(); }
  ClusterId cluster_of(Vertex v) const { return labels_[v]; }
  std::span<const ClusterId> labels() const noexcept { return labels_; }

  /// Clusters as sorted vertex lists, ordered by minimum vertex.
  std::vector<std::vector<Vertex>> clusters() const;
  std::size_t cluster_count() const;

  /// Same partition over `horizon` vertices, new vertices as singletons.
  Partition extended(std::size_t horizon) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<ClusterId> labels_;
};

/// One line per cluster: 1-based vertex ids, ascending, space separated;
/// clusters ordered by their minimum vertex.
std::string serialize(const Partition& p);
Partition parse_partition(const std::vector<std::string>& lines, std::size_t horizon);

/// Recount from scratch in O(horizon^2).
Score score(const Partition& p, const LabeledInstance& inst);

/// True iff every cluster of `earlier` lies inside one cluster of `later`.
bool coarsens(const Partition& later, const Partition& earlier);

/// Merge-only clustering of an arrival prefix with incremental accounting.
///
/// For every pair of live clusters the number of positive edges between them
/// is cached, which makes gain() O(1), arrive() O(horizon) and merge()
/// O(#clusters + |merged cluster|).
class Clustering {
 public:
  Clustering() = default;

  /// Realizes `p` on `inst` by arriving every vertex and merging.
  static Clustering from_partition(const LabeledInstance& inst, const Partition& p);

  std::size_t horizon() const noexcept { return assignment_.size(); }

  /// Next arrival joins as a fresh singleton. Returns its cluster id.
  ClusterId arrive(const LabeledInstance& inst);

  /// Merges x and y; returns the surviving (smaller) id.
  ClusterId merge(ClusterId x, ClusterId y);

  /// Profit change of merging x and y: 2|positive edges between| - |x||y|.
  std::int64_t gain(ClusterId x, ClusterId y) const;

  std::int64_t profit() const noexcept { return profit_; }
  std::int64_t cost() const noexcept { return pair_count() - profit_; }
  Score score() const noexcept { return {profit(), cost()}; }

  /// Live cluster ids, ascending.
  const std::vector<ClusterId>& live() const noexcept { return live_; }
  bool is_live(ClusterId c) const noexcept { return c < members_.size() && !members_[c].empty(); }
  std::span<const Vertex> members(ClusterId c) const;
  std::size_t cluster_size(ClusterId c) const { return members(c).size(); }
  ClusterId cluster_of(Vertex v) const { return assignment_.at(v); }
  std::uint32_t inter_positive(ClusterId x, ClusterId y) const;

  Partition partition() const;

 private:
  std::int64_t pair_count() const noexcept {
    const auto h = static_cast<std::int64_t>(horizon());
    return h * (h - 1) / 2;
  }
  void check_pair(ClusterId x, ClusterId y) const;
  void reserve(std::size_t capacity);
  std::uint32_t& inter(ClusterId x, ClusterId y) { return inter_[x * capacity_ + y]; }

  std::size_t capacity_ = 0;
  std::vector<ClusterId> assignment_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<ClusterId> live_;
  std::vector<std::uint32_t> inter_;  // capacity_ x capacity_, symmetric
  std::int64_t profit_ = 0;
};

}  // namespace occ
