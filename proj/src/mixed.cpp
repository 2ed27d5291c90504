#include "occ/mixed.hpp"

#include <random>

#include "occ/error.hpp"

namespace occ {

namespace {

void check_domain(double alpha, double eta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
  if (!(eta > 0.0 && eta < 0.5)) throw InvalidArgument("eta must lie in (0, 0.5)");
}

}  // namespace

std::string_view to_string(Branch branch) { return branch == Branch::dense ? "dense" : "greedy"; }

double recommended_p(double alpha, double eta) {
  check_domain(alpha, eta);
  return alpha / (2.0 + 2.0 * eta * (2.0 - alpha));
}

double mixed_ratio_excess(double alpha, double eta) {
  check_domain(alpha, eta);
  return (alpha * eta / 2.0) / (1.0 + 2.0 * eta * (1.0 - alpha / 2.0));
}

Branch choose_branch(double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  if (p <= 0.0) return Branch::greedy;
  if (p >= 1.0) return Branch::dense;
  std::mt19937_64 rng(seed);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p ? Branch::dense : Branch::greedy;
}

MixedRun mixed_run(const LabeledInstance& inst, const MixedConfig& config) {
  MixedRun run;
  run.branch = choose_branch(config.p, config.seed);
  if (run.branch == Branch::dense) {
    auto dense = dense_run(inst, config.dense);
    run.trace = std::move(dense.trace);
    run.chain = std::move(dense.chain);
  } else {
    run.trace = greedy_run(inst, config.greedy);
  }
  return run;
}

}  // namespace occ
