#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace occ {

enum class EdgeSign : std::uint8_t { negative = 0, positive = 1 };

/// Vertex index. Vertex t is the (t+1)-th arrival; indices are arrival order.
using Vertex = std::uint32_t;

/// Complete graph with +/- labels on every pair, in arrival order.
///
/// Labels are stored in a flat lower-triangular array: the pair (i, j) with
/// j < i lives at i*(i-1)/2 + j. Immutable after construction, so a single
/// instance may be shared by concurrent trials.
class LabeledInstance {
 public:
  LabeledInstance() = default;

  /// `signs` must hold exactly n(n-1)/2 entries in triangular order.
  LabeledInstance(std::size_t n, std::vector<EdgeSign> signs);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return signs_.size(); }

  EdgeSign sign(Vertex a, Vertex b) const {
    return a > b ? signs_[index(a, b)] : signs_[index(b, a)];
  }
  bool positive(Vertex a, Vertex b) const { return sign(a, b) == EdgeSign::positive; }

  /// Labels of the edges from `v` to every earlier arrival 0..v-1.
  std::span<const EdgeSign> back_edges(Vertex v) const {
    return {signs_.data() + index(v, 0), v};
  }

  std::size_t positive_count() const;

  /// Instance whose k-th arrival is this instance's vertex order[k].
  LabeledInstance permuted(std::span<const Vertex> order) const;

  /// The sub-instance induced by the first t arrivals.
  LabeledInstance prefix(std::size_t t) const;

  friend bool operator==(const LabeledInstance&, const LabeledInstance&) = default;

 private:
  static std::size_t index(std::size_t i, std::size_t j) { return i * (i - 1) / 2 + j; }

  std::size_t n_ = 0;
  std::vector<EdgeSign> signs_;
};

// Generators. All are pure functions of their arguments.

/// 2m vertices, every edge positive.
LabeledInstance gen_all_positive(std::size_t m);

/// Three groups of 2m vertices (group 1 arrives first, then 2, then 3). In
/// each group the first m arrivals are "left", the next m "right". Edges inside
/// a group and between left vertices are positive; left(G_i)-right(G_j) edges
/// for i != j are negative; right(G_i)-right(G_j) carry `right_right`.
LabeledInstance gen_yao_gadget(std::size_t m, EdgeSign right_right = EdgeSign::negative);

/// Two positive cliques A and B of size m with k positive edges a-b_1..a-b_k;
/// arrival order a, b_1..b_k, a_2..a_m, b_{k+1}..b_m.
LabeledInstance gen_two_clique(std::size_t m, std::size_t k);

/// `clusters` planted clusters of `size`, each label flipped with probability
/// `flip_prob`, arrivals in a seeded uniform shuffle.
LabeledInstance gen_planted(std::size_t clusters, std::size_t size, double flip_prob,
                            std::uint64_t seed);

/// Each edge independently positive with probability `density`.
LabeledInstance gen_random(std::size_t n, double density, std::uint64_t seed);

/// Planted partition used by gen_planted, indexed by arrival (cluster labels
/// in 0..clusters-1). Handy for checking the noiseless case.
std::vector<std::uint32_t> planted_labels(std::size_t clusters, std::size_t size,
                                          std::uint64_t seed);

// .occ text format: line 1 is n in decimal; then for i = 2..n one line of
// exactly i-1 characters from {+,-}, the j-th giving edge (i, j). Every line
// ends with '\n'; no other whitespace.

LabeledInstance read_instance(std::string_view text);
std::string write_instance(const LabeledInstance& inst);

LabeledInstance read_instance_file(const std::string& path);
void write_instance_file(const LabeledInstance& inst, const std::string& path);

/// FNV-1a 64-bit hash of the .occ serialization, used in report descriptors.
std::uint64_t instance_hash(const LabeledInstance& inst);

}  // namespace occ
