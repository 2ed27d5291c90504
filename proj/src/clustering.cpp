#include "occ/clustering.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "occ/error.hpp"

namespace occ {

Partition::Partition(std::span<const std::uint32_t> labels) : labels_(labels.size()) {
  // First occurrence of each raw label is the cluster minimum.
  std::unordered_map<std::uint32_t, ClusterId> first;
  for (std::size_t v = 0; v < labels.size(); ++v)
    labels_[v] = first.try_emplace(labels[v], static_cast<ClusterId>(v)).first->second;
}

Partition Partition::singletons(std::size_t horizon) {
  std::vector<std::uint32_t> labels(horizon);
  for (std::size_t v = 0; v < horizon; ++v) labels[v] = static_cast<std::uint32_t>(v);
  return Partition(labels);
}

std::vector<std::vector<Vertex>> Partition::clusters() const {
  std::vector<std::vector<Vertex>> by_min(labels_.size());
  for (Vertex v = 0; v < labels_.size(); ++v) by_min[labels_[v]].push_back(v);
  std::erase_if(by_min, [](const auto& c) { return c.empty(); });
  return by_min;
}

std::size_t Partition::cluster_count() const {
  std::size_t count = 0;
  for (Vertex v = 0; v < labels_.size(); ++v) count += labels_[v] == v;
  return count;
}

Partition Partition::extended(std::size_t horizon) const {
  if (horizon < labels_.size()) throw InvalidArgument("cannot shrink a partition");
  std::vector<std::uint32_t> labels(labels_.begin(), labels_.end());
  for (std::size_t v = labels_.size(); v < horizon; ++v) labels.push_back(static_cast<std::uint32_t>(v));
  return Partition(labels);
}

std::string serialize(const Partition& p) {
  std::ostringstream out;
  for (const auto& cluster : p.clusters()) {
    for (std::size_t i = 0; i < cluster.size(); ++i) out << (i ? " " : "") << cluster[i] + 1;
    out << '\n';
  }
  return out.str();
}

Partition parse_partition(const std::vector<std::string>& lines, std::size_t horizon) {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> labels(horizon, unset);
  for (std::size_t c = 0; c < lines.size(); ++c) {
    std::istringstream in(lines[c]);
    long long v = 0;
    while (in >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > horizon || labels[v - 1] != unset)
        throw ParseError(c + 1, "bad vertex id in cluster line");
      labels[v - 1] = static_cast<std::uint32_t>(c);
    }
    if (!in.eof()) throw ParseError(c + 1, "malformed cluster line");
  }
  if (std::find(labels.begin(), labels.end(), unset) != labels.end())
    throw ParseError(lines.size(), "clusters do not cover every vertex");
  return Partition(labels);
}

Score score(const Partition& p, const LabeledInstance& inst) {
  if (p.horizon() > inst.size()) throw InvalidArgument("partition longer than instance");
  Score s;
  for (Vertex i = 1; i < p.horizon(); ++i) {
    const auto edges = inst.back_edges(i);
    for (Vertex j = 0; j < i; ++j) {
      const bool same = p.cluster_of(i) == p.cluster_of(j);
      const bool agree = same == (edges[j] == EdgeSign::positive);
      (agree ? s.profit : s.cost) += 1;
    }
  }
  return s;
}

bool coarsens(const Partition& later, const Partition& earlier) {
  if (earlier.horizon() > later.horizon()) return false;
  // Each earlier cluster's minimum must land with every other member.
  for (Vertex v = 0; v < earlier.horizon(); ++v)
    if (later.cluster_of(v) != later.cluster_of(earlier.cluster_of(v))) return false;
  return true;
}

Clustering Clustering::from_partition(const LabeledInstance& inst, const Partition& p) {
  Clustering c;
  c.reserve(p.horizon());
  for (Vertex v = 0; v < p.horizon(); ++v) {
    c.arrive(inst);
    if (p.cluster_of(v) != v) c.merge(c.cluster_of(p.cluster_of(v)), v);
  }
  return c;
}

void Clustering::reserve(std::size_t capacity) {
  if (capacity <= capacity_) return;
  std::vector<std::uint32_t> grown(capacity * capacity, 0);
  for (std::size_t x = 0; x < capacity_; ++x)
    std::copy_n(inter_.begin() + x * capacity_, capacity_, grown.begin() + x * capacity);
  inter_ = std::move(grown);
  capacity_ = capacity;
  members_.resize(capacity);
}

ClusterId Clustering::arrive(const LabeledInstance& inst) {
  const auto v = static_cast<Vertex>(horizon());
  if (v >= inst.size()) throw InvalidArgument("arrival past the end of the instance");
  if (v >= capacity_) reserve(std::max<std::size_t>(inst.size(), 2 * capacity_));

  const auto edges = inst.back_edges(v);
  for (ClusterId c : live_) inter(c, v) = 0;
  for (Vertex u = 0; u < v; ++u) {
    if (edges[u] == EdgeSign::positive) ++inter(assignment_[u], v);
    else ++profit_;  // a negative edge to another cluster is an agreement
  }
  for (ClusterId c : live_) inter(v, c) = inter(c, v);
  inter(v, v) = 0;

  assignment_.push_back(v);
  members_[v] = {v};
  live_.push_back(v);
  return v;
}

void Clustering::check_pair(ClusterId x, ClusterId y) const {
  if (x == y) throw InvalidArgument("cannot merge a cluster with itself");
  if (!is_live(x) || !is_live(y)) throw InvalidArgument("unknown cluster id");
}

std::int64_t Clustering::gain(ClusterId x, ClusterId y) const {
  check_pair(x, y);
  return 2 * static_cast<std::int64_t>(inter_[x * capacity_ + y]) -
         static_cast<std::int64_t>(members_[x].size() * members_[y].size());
}

ClusterId Clustering::merge(ClusterId x, ClusterId y) {
  const std::int64_t delta = gain(x, y);
  const ClusterId keep = std::min(x, y);
  const ClusterId drop = std::max(x, y);

  for (ClusterId c : live_) {
    if (c == keep || c == drop) continue;
    inter(keep, c) += inter(drop, c);
    inter(c, keep) = inter(keep, c);
  }
  for (Vertex v : members_[drop]) assignment_[v] = keep;
  auto& kept = members_[keep];
  kept.insert(kept.end(), members_[drop].begin(), members_[drop].end());
  members_[drop].clear();
  live_.erase(std::lower_bound(live_.begin(), live_.end(), drop));
  profit_ += delta;
  return keep;
}

std::span<const Vertex> Clustering::members(ClusterId c) const {
  if (!is_live(c)) throw InvalidArgument("unknown cluster id");
  return members_[c];
}

std::uint32_t Clustering::inter_positive(ClusterId x, ClusterId y) const {
  check_pair(x, y);
  return inter_[x * capacity_ + y];
}

Partition Clustering::partition() const { return Partition(assignment_); }

}  // namespace occ
