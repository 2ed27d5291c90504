#include <cmath>

#include "doctest.h"
#include "occ/error.hpp"
#include "occ/mixed.hpp"

using namespace occ;

namespace {
MixedConfig relaxed(double p, std::uint64_t seed) {
  MixedConfig c;
  c.p = p;
  c.seed = seed;
  c.dense.alpha = 0.01;
  c.dense.tau = 1.5;
  c.dense.t_min = 4;
  c.dense.oracle.policy = OraclePolicy::exact_only;
  return c;
}
}  // namespace

TEST_CASE("recommended p") {
  CHECK(recommended_p(1e-12, 0.0555) == doctest::Approx(4.5e-13).epsilon(1e-3));
  CHECK(recommended_p(0.01, 0.05) == doctest::Approx(0.01 / 2.199).epsilon(1e-12));
  CHECK(recommended_p(0.01, 1e-12) == doctest::Approx(0.005).epsilon(1e-9));
  CHECK(mixed_ratio_excess(1e-12, 0.0555) >= 2e-14);
  CHECK_THROWS_AS(recommended_p(0.0, 0.05), InvalidArgument);
}

TEST_CASE("coin extremes") {
  const auto inst = gen_two_clique(3, 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(choose_branch(0.0, seed) == Branch::greedy);
    CHECK(choose_branch(1.0, seed) == Branch::dense);
  }
  CHECK(mixed_run(inst, relaxed(0.0, 3)).branch == Branch::greedy);
  const auto d = mixed_run(inst, relaxed(1.0, 3));
  CHECK(d.branch == Branch::dense);
  CHECK(mixed_run(inst, relaxed(0.0, 3)).chain.empty());
  CHECK_THROWS_AS(choose_branch(1.5, 0), InvalidArgument);
}

TEST_CASE("mixed branches reproduce the underlying runs") {
  const auto inst = gen_planted(2, 4, 0.1, 7);
  const auto cfg = relaxed(0.0, 0);
  CHECK(mixed_run(inst, cfg).trace == greedy_run(inst, cfg.greedy));
  const auto dcfg = relaxed(1.0, 0);
  CHECK(mixed_run(inst, dcfg).trace == dense_run(inst, dcfg.dense).trace);
}

TEST_CASE("mixed is deterministic per seed") {
  const auto inst = gen_planted(2, 4, 0.1, 7);
  std::size_t dense = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto a = mixed_run(inst, relaxed(0.5, seed));
    const auto b = mixed_run(inst, relaxed(0.5, seed));
    CHECK(a.branch == b.branch);
    CHECK(a.trace == b.trace);
    dense += a.branch == Branch::dense;
  }
  // 200 draws at p = 0.5: sd ~ 7.
  CHECK(dense > 60);
  CHECK(dense < 140);
  CHECK(to_string(Branch::dense) == "dense");
}
