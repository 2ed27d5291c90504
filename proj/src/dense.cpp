#include "occ/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "occ/error.hpp"

namespace occ {

namespace {

// floor() of a ratio that is often an exact integer in real arithmetic but
// lands a hair below it in floating point (1/sqrt(0.01) and the like).
std::size_t floor_tolerant(double x) {
  return static_cast<std::size_t>(std::floor(x * (1 + 1e-12)));
}

std::size_t ceil_tolerant(double x) {
  return static_cast<std::size_t>(std::ceil(x * (1 - 1e-12)));
}

// Clusters ordered by size descending, then by minimum vertex.
std::vector<std::vector<Vertex>> by_size(const Partition& p) {
  auto clusters = p.clusters();
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return clusters;
}

Partition keep_only(std::size_t horizon, const std::vector<std::vector<Vertex>>& kept) {
  std::vector<std::uint32_t> labels(horizon);
  std::iota(labels.begin(), labels.end(), 0u);
  for (const auto& cluster : kept)
    for (Vertex v : cluster) labels[v] = cluster.front();
  return Partition(labels);
}

}  // namespace

double DenseConfig::eps() const { return std::pow(alpha, 0.25); }
std::size_t DenseConfig::k1() const { return floor_tolerant(1.0 / eps()); }
std::size_t DenseConfig::k2() const { return floor_tolerant(1.0 / std::sqrt(alpha)); }

void DenseConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
  if (!(tau > 1.0)) throw InvalidArgument("tau must exceed 1");
  if (t_min == 0) throw InvalidArgument("t_min must be >= 1");
  if (eta && !(*eta > 0.0 && *eta < 0.5)) throw InvalidArgument("eta must lie in (0, 0.5)");
}

bool is_large(std::int64_t oracle_profit, std::size_t t, double alpha) {
  if (t == 0) throw InvalidArgument("is_large needs t >= 1");
  const auto pairs = static_cast<std::int64_t>(t) * static_cast<std::int64_t>(t - 1);
  const std::int64_t twice_cost = pairs - 2 * oracle_profit;
  return static_cast<double>(twice_cost) <= alpha * static_cast<double>(pairs);
}

std::size_t next_checkpoint(double tau, std::size_t after) {
  if (!(tau > 1.0)) throw InvalidArgument("tau must exceed 1");
  for (int j = 1;; ++j) {
    const std::size_t c = ceil_tolerant(std::pow(tau, j));
    if (c > after) return c;
  }
}

std::vector<std::size_t> checkpoints(double tau, std::size_t limit) {
  std::vector<std::size_t> out;
  std::size_t c = 0;
  do {
    c = next_checkpoint(tau, c);
    out.push_back(c);
  } while (c <= limit);
  return out;
}

bool half_contained(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty()) throw InvalidArgument("half_contained needs a non-empty cluster");
  std::size_t common = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else ++common, ++i, ++j;
  }
  return 2 * common > a.size();
}

Partition build_opt_hat_first(const Partition& opt, double eps) {
  const std::size_t k2 = floor_tolerant(1.0 / (eps * eps));
  auto clusters = by_size(opt);
  if (clusters.size() > k2) clusters.resize(k2);
  return keep_only(opt.horizon(), clusters);
}

OptHat build_opt_hat_next(const Partition& prev_hat, const Partition& opt, double eps) {
  if (prev_hat.horizon() >= opt.horizon())
    throw InvalidArgument("opt-hat chain must move forward in time");
  const std::size_t k1 = floor_tolerant(1.0 / eps);
  const std::size_t k2 = floor_tolerant(1.0 / (eps * eps));

  const auto opt_clusters = by_size(opt);
  std::set<ClusterId> marked;

  // (b) the k1 largest clusters of the new oracle solution.
  for (std::size_t i = 0; i < std::min(k1, opt_clusters.size()); ++i)
    marked.insert(opt_clusters[i].front());

  // (a) the k2 - k1 largest tracked clusters, wherever they are half-contained.
  auto tracked = by_size(prev_hat);
  std::erase_if(tracked, [](const auto& c) { return c.size() < 2; });
  if (tracked.size() > k2 - k1) tracked.resize(k2 - k1);
  for (const auto& a : tracked) {
    for (const auto& d : opt_clusters) {
      if (half_contained(a, d)) {
        marked.insert(d.front());
        break;
      }
    }
  }

  std::vector<std::vector<Vertex>> kept;
  for (const auto& d : opt_clusters)
    if (marked.contains(d.front())) kept.push_back(d);
  return {keep_only(opt.horizon(), kept), {marked.begin(), marked.end()}};
}

std::size_t update_candidate(const NearOptChain& chain, const DenseConfig& config) {
  return chain.empty() ? config.t_min : next_checkpoint(config.tau, chain.back().time);
}

std::optional<std::size_t> next_update_time(const NearOptChain& chain, const LabeledInstance& inst,
                                            const DenseConfig& config, std::size_t horizon) {
  for (std::size_t t = update_candidate(chain, config); t <= std::min(horizon, inst.size()); ++t)
    if (is_large(oracle(inst, t, config.oracle).profit, t, config.alpha)) return t;
  return std::nullopt;
}

void extend_chain(NearOptChain& chain, std::size_t t, OracleResult opt, double eps) {
  if (opt.clustering.horizon() != t) throw InvalidArgument("oracle result does not cover [1, t]");
  OptHat hat = chain.empty() ? OptHat{build_opt_hat_first(opt.clustering, eps), {}}
                             : build_opt_hat_next(chain.back().hat.clustering, opt.clustering, eps);
  if (chain.empty()) {
    for (const auto& c : hat.clustering.clusters())
      if (c.size() > 1) hat.marked.push_back(c.front());
  }
  chain.push_back({t, std::move(opt), std::move(hat)});
}

NearOptChain compute_chain(const LabeledInstance& inst, const DenseConfig& config,
                           std::size_t horizon) {
  config.validate();
  NearOptChain chain;
  while (const auto t = next_update_time(chain, inst, config, horizon))
    extend_chain(chain, *t, oracle(inst, *t, config.oracle), config.eps());
  return chain;
}

DenseState::DenseState(DenseConfig config) : config_(std::move(config)) { config_.validate(); }

void DenseState::step(const LabeledInstance& inst) {
  clustering_.arrive(inst);
  const std::size_t t = clustering_.horizon();
  if (t < update_candidate(chain_, config_)) return;
  OracleResult opt = oracle(inst, t, config_.oracle);
  if (!is_large(opt.profit, t, config_.alpha)) return;
  extend_chain(chain_, t, std::move(opt), config_.eps());
  update();
}

void DenseState::update() {
  const ChainEntry& now = chain_.back();
  const std::size_t t_prev = chain_.size() > 1 ? chain_[chain_.size() - 2].time : 0;
  const Partition& hat = now.hat.clustering;

  // Which opt-hat cluster each tracked online cluster follows, if any.
  std::map<ClusterId, std::vector<ClusterId>> absorbed;
  if (chain_.size() > 1) {
    const Partition& prev_hat = chain_[chain_.size() - 2].hat.clustering;
    std::map<ClusterId, std::vector<Vertex>> prev_members;
    for (const auto& c : prev_hat.clusters()) prev_members.emplace(c.front(), c);
    std::map<ClusterId, std::vector<Vertex>> hat_members;
    for (const auto& c : hat.clusters()) hat_members.emplace(c.front(), c);

    for (const auto& [online, tracked] : repr_) {
      const auto& a = prev_members.at(tracked);
      // At most one cluster can hold more than half of `a`; only clusters
      // meeting `a` are worth testing.
      std::set<ClusterId> candidates;
      for (Vertex v : a) candidates.insert(hat.cluster_of(v));
      for (ClusterId d : candidates) {
        if (half_contained(a, hat_members.at(d))) {
          absorbed[d].push_back(online);
          break;
        }
      }
    }
  }

  std::map<ClusterId, ClusterId> next_repr;
  for (const auto& d : hat.clusters()) {
    std::vector<ClusterId> parts;
    for (Vertex v : d) {
      if (v < t_prev) continue;
      if (clustering_.cluster_size(clustering_.cluster_of(v)) != 1)
        throw InvariantError("dense update at t=" + std::to_string(now.time) + ": vertex " +
                             std::to_string(v + 1) + " is no longer a singleton");
      parts.push_back(clustering_.cluster_of(v));
    }
    if (const auto it = absorbed.find(d.front()); it != absorbed.end())
      parts.insert(parts.end(), it->second.begin(), it->second.end());
    if (parts.empty()) continue;

    ClusterId survivor = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (!clustering_.is_live(parts[i]) || parts[i] == survivor)
        throw InvariantError("dense update at t=" + std::to_string(now.time) +
                             ": cluster claimed twice");
      survivor = clustering_.merge(survivor, parts[i]);
    }
    next_repr[survivor] = d.front();
  }
  // Tracked clusters that were absorbed nowhere keep their vertices and stop
  // being tracked.
  repr_ = std::move(next_repr);
}

DenseRun dense_run(const LabeledInstance& inst, const DenseConfig& config) {
  DenseState state(config);
  DenseRun run;
  run.trace.reserve(inst.size());
  for (std::size_t t = 0; t < inst.size(); ++t) {
    state.step(inst);
    run.trace.push_back(state.clustering().partition());
  }
  run.chain = state.chain();
  return run;
}

Partition forest_clustering(const NearOptChain& chain, std::size_t horizon) {
  // Node ids: (level, cluster minimum) flattened into one index space.
  std::vector<std::vector<std::vector<Vertex>>> levels;
  std::vector<std::size_t> offset;
  std::size_t nodes = 0;
  for (const auto& entry : chain) {
    if (entry.time > horizon) break;
    levels.push_back(entry.hat.clustering.clusters());
    offset.push_back(nodes);
    nodes += levels.back().size();
  }

  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t i = 1; i < levels.size(); ++i)
    for (std::size_t a = 0; a < levels[i - 1].size(); ++a)
      for (std::size_t b = 0; b < levels[i].size(); ++b)
        if (half_contained(levels[i - 1][a], levels[i][b])) {
          parent[find(offset[i - 1] + a)] = find(offset[i] + b);
          break;
        }

  // Tree roots become labels; vertices outside every slice get fresh labels.
  std::vector<std::uint32_t> labels(horizon);
  std::uint32_t next_label = static_cast<std::uint32_t>(nodes);
  std::vector<bool> placed(horizon, false);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::size_t lo = i == 0 ? 0 : chain[i - 1].time;
    const std::size_t hi = chain[i].time;
    for (std::size_t a = 0; a < levels[i].size(); ++a)
      for (Vertex v : levels[i][a])
        if (v >= lo && v < hi) {
          labels[v] = static_cast<std::uint32_t>(find(offset[i] + a));
          placed[v] = true;
        }
  }
  for (std::size_t v = 0; v < horizon; ++v)
    if (!placed[v]) labels[v] = next_label++;
  return Partition(labels);
}

Partition forest_reference(const LabeledInstance& inst, const DenseConfig& config,
                           std::size_t horizon) {
  return forest_clustering(compute_chain(inst, config, horizon), horizon);
}

double constants_bound(double alpha, double tau) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
  if (!(tau > 1.0)) throw InvalidArgument("tau must exceed 1");
  const double eps = std::pow(alpha, 0.25);
  const double loss = (2.0 * std::sqrt(3.0) + 4.5) * eps + eps / (1.0 - eps) + alpha / 2.0;
  return 1.5 - tau * tau - loss * 2.0 * (2.0 * tau - 1.0) / (tau - 1.0);
}

bool check_constants(double alpha, double tau, double eta) {
  if (!(eta > 0.0 && eta < 0.5)) throw InvalidArgument("eta must lie in (0, 0.5)");
  return eta <= constants_bound(alpha, tau);
}

}  // namespace occ
