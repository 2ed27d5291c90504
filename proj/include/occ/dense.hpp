#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "occ/clustering.hpp"
#include "occ/instance.hpp"
#include "occ/oracle.hpp"

namespace occ {

/// Constants of the Dense algorithm.
///
/// eps = alpha^(1/4); the algorithm keeps at most k2 = floor(1/eps^2)
/// non-singleton clusters and always marks the k1 = floor(1/eps) largest
/// clusters of each fresh oracle solution.
struct DenseConfig {
  double alpha = 0.01;
  double tau = 1.1;
  /// The first update time is the earliest t >= t_min whose oracle solution
  /// is large. The theoretical setting uses 100.
  std::size_t t_min = 100;
  /// Only consulted by check_constants.
  std::optional<double> eta;
  OracleOptions oracle;

  double eps() const;
  std::size_t k1() const;
  std::size_t k2() const;

  /// Throws InvalidArgument unless alpha in (0,1), tau > 1, t_min >= 1.
  void validate() const;
};

/// profit >= (1 - alpha) * C(t, 2), decided as 2*cost <= alpha * t(t-1)
/// so the only rounding is the single product with alpha.
bool is_large(std::int64_t oracle_profit, std::size_t t, double alpha);

/// Smallest integer checkpoint ceil(tau^j), j >= 1, strictly above `after`.
std::size_t next_checkpoint(double tau, std::size_t after);

/// Increasing, deduplicated checkpoints ceil(tau^j) up to and including the
/// first one above `limit`.
std::vector<std::size_t> checkpoints(double tau, std::size_t limit);

/// |a ∩ b| > |a| / 2 for sorted vertex lists; `a` must be non-empty.
bool half_contained(std::span<const Vertex> a, std::span<const Vertex> b);

/// Keeps the floor(1/eps^2) largest clusters of `opt` (size descending, then
/// smallest minimum vertex) and splits the rest into singletons.
Partition build_opt_hat_first(const Partition& opt, double eps);

struct OptHat {
  Partition clustering;
  /// Marked clusters of the oracle solution, by id (minimum vertex).
  std::vector<ClusterId> marked;
};

/// Marks a cluster D of `opt` when one of the k2 - k1 largest non-singleton
/// clusters of `prev_hat` is half-contained in D, or when D is among the k1
/// largest clusters of `opt`. Marked clusters survive, everything else in
/// [1, t_i] becomes a singleton.
OptHat build_opt_hat_next(const Partition& prev_hat, const Partition& opt, double eps);

struct ChainEntry {
  std::size_t time = 0;  // update time t_i (number of arrivals)
  OracleResult opt;
  OptHat hat;
};

using NearOptChain = std::vector<ChainEntry>;

/// Earliest time at which the next update may fire: t_min before the first
/// update, afterwards the first checkpoint above the last update time.
std::size_t update_candidate(const NearOptChain& chain, const DenseConfig& config);

/// Next update time no later than `horizon`, or nothing if the oracle
/// solution is never large in [update_candidate, horizon].
std::optional<std::size_t> next_update_time(const NearOptChain& chain, const LabeledInstance& inst,
                                            const DenseConfig& config, std::size_t horizon);

/// Extends the chain with the entry for update time t (oracle result given).
void extend_chain(NearOptChain& chain, std::size_t t, OracleResult opt, double eps);

/// Runs the schedule offline over [1, horizon] and returns the full chain.
NearOptChain compute_chain(const LabeledInstance& inst, const DenseConfig& config,
                           std::size_t horizon);

/// Online state of Dense after some prefix of arrivals.
class DenseState {
 public:
  explicit DenseState(DenseConfig config);

  /// Processes the next arrival of `inst`, firing an update when scheduled.
  void step(const LabeledInstance& inst);

  const Clustering& clustering() const noexcept { return clustering_; }
  const NearOptChain& chain() const noexcept { return chain_; }
  const DenseConfig& config() const noexcept { return config_; }
  /// Online cluster id -> id of the tracked cluster of the latest opt-hat.
  const std::map<ClusterId, ClusterId>& repr() const noexcept { return repr_; }

 private:
  /// Folds the arrivals since the previous update and every tracked online
  /// cluster into the clusters of the newest opt-hat.
  void update();

  DenseConfig config_;
  Clustering clustering_;
  NearOptChain chain_;
  std::map<ClusterId, ClusterId> repr_;
};

struct DenseRun {
  std::vector<Partition> trace;  // after each arrival
  NearOptChain chain;
};

DenseRun dense_run(const LabeledInstance& inst, const DenseConfig& config);

/// Clustering of the forest whose level-i nodes are the clusters of opt-hat_i,
/// with A (level i-1) a child of B (level i) iff A is half-contained in B.
/// Each tree becomes one cluster holding A ∩ (t_{i-1}, t_i] for its nodes;
/// vertices after the last update time in the chain stay singletons.
Partition forest_clustering(const NearOptChain& chain, std::size_t horizon);

/// forest_clustering over a freshly computed chain.
Partition forest_reference(const LabeledInstance& inst, const DenseConfig& config,
                           std::size_t horizon);

/// Right-hand side of the constants condition:
/// 1.5 - tau^2 - ((2 sqrt 3 + 9/2) eps + eps/(1-eps) + alpha/2) * 2 (2tau-1)/(tau-1).
double constants_bound(double alpha, double tau);

/// eta <= constants_bound(alpha, tau). Rejects alpha outside (0,1),
/// tau <= 1 and eta outside (0, 1/2).
bool check_constants(double alpha, double tau, double eta);

}  // namespace occ
