#include <algorithm>
#include <numeric>
#include <random>

#include "../oracles.hpp"
#include "doctest.h"
#include "occ/error.hpp"
#include "occ/oracle.hpp"

using namespace occ;

TEST_CASE("exact optimum on triangles") {
  const auto all = gen_all_positive(2);
  const auto r = exact_optimum(all, 3);
  CHECK(r.profit == 3);
  CHECK(r.exact);
  CHECK(r.clustering.cluster_count() == 1);
  CHECK(exact_optimum(gen_all_positive(3), 6).profit == 15);

  const auto mixed = read_instance("3\n+\n+-\n");
  const auto m = exact_optimum(mixed, 3);
  CHECK(m.profit == 2);
  CHECK(score(m.clustering, mixed) == Score{2, 1});
  CHECK(m.visited == 5);
}

TEST_CASE("exact optimum on two-clique(3,1)") {
  const auto tc = gen_two_clique(3, 1);
  const auto r = exact_optimum(tc, 6);
  CHECK(r.visited == 203);
  CHECK(score(r.clustering, tc).cost == 1);
  // a = {0,2,3}, b = {1,4,5}
  CHECK(r.clustering.clusters() == std::vector<std::vector<Vertex>>{{0, 2, 3}, {1, 4, 5}});
}

TEST_CASE("enumeration visits Bell(t) partitions") {
  const auto bell = testing::bell_by_binomials(10);
  CHECK(bell[5] == 52);
  CHECK(bell[10] == 115975);
  const auto inst = gen_random(10, 0.5, 5);
  for (std::size_t t = 1; t <= 10; ++t) CHECK(exact_optimum(inst, t).visited == bell[t]);
}

TEST_CASE("exact optimum agrees with independent oracles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto inst = gen_random(n, static_cast<double>(rng() % 101) / 100.0, rng());
    const auto r = exact_optimum(inst, n);
    CHECK(r.profit == testing::subset_dp_optimum(inst));
    CHECK(score(r.clustering, inst).profit == r.profit);
    if (n <= 6) CHECK(r.profit == testing::labelling_brute_force(inst, n));
  }
}

TEST_CASE("golden optima") {
  CHECK(exact_optimum(gen_yao_gadget(1), 6).profit == 12);
  const auto planted = gen_planted(2, 4, 0.1, 7);
  CHECK(exact_optimum(planted, 8).profit == 24);
  CHECK(testing::subset_dp_optimum(gen_yao_gadget(2)) == 54);
}

TEST_CASE("exact optimum respects the cap") {
  const auto inst = gen_random(14, 0.5, 1);
  CHECK_THROWS_AS(exact_optimum(inst, 13), CapacityError);
  CHECK_NOTHROW(exact_optimum(inst, 12));
  CHECK(exact_optimum(inst, 13, 13).exact);
}

TEST_CASE("exact optimum is invariant under relabelling") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto inst = gen_random(n, 0.5, rng());
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto p = inst.permuted(order);
    const auto a = exact_optimum(inst, n);
    const auto b = exact_optimum(p, n);
    CHECK(a.profit == b.profit);
    // Mapping b's clustering back to original ids gives an optimum of inst.
    std::vector<std::uint32_t> back(n);
    for (Vertex i = 0; i < n; ++i) back[order[i]] = b.clustering.cluster_of(i);
    CHECK(score(Partition(back), inst).profit == a.profit);
  }
}

TEST_CASE("local search examples") {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    CHECK(local_search_optimum(gen_all_positive(5), 10, 3, seed).profit == 45);
    CHECK(local_search_optimum(gen_planted(2, 5, 0.0, seed), 10, 3, seed).profit == 45);
  }
  CHECK(exact_optimum(gen_planted(2, 5, 0.0, 4), 10).profit == 45);
  CHECK_FALSE(local_search_optimum(gen_all_positive(2), 4, 1, 0).exact);
  CHECK_THROWS_AS(local_search_optimum(gen_all_positive(2), 4, 0, 0), InvalidArgument);
}

TEST_CASE("local search never beats the exact optimum and improves with restarts") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto inst = gen_random(n, static_cast<double>(rng() % 101) / 100.0, rng());
    const auto seed = rng();
    const auto one = local_search_optimum(inst, n, 1, seed);
    const auto five = local_search_optimum(inst, n, 5, seed);
    CHECK(five.profit >= one.profit);
    CHECK(five.profit <= testing::subset_dp_optimum(inst));
    CHECK(score(five.clustering, inst).profit == five.profit);
  }
}

TEST_CASE("oracle dispatch") {
  const auto big = gen_random(40, 0.5, 3);
  OracleOptions o;
  const auto small = oracle(big, 5, o);
  CHECK(small.exact);
  CHECK(small.profit == testing::subset_dp_optimum(big.prefix(5)));

  const auto over = oracle(big, 40, o);
  CHECK_FALSE(over.exact);
  CHECK(over.clustering.horizon() == 40);

  o.policy = OraclePolicy::exact_only;
  CHECK_THROWS_AS(oracle(big, 40, o), CapacityError);

  o.policy = OraclePolicy::heuristic_only;
  CHECK_FALSE(oracle(big, 5, o).exact);

  CHECK(parse_oracle_policy("exact_only") == OraclePolicy::exact_only);
  CHECK(to_string(OraclePolicy::heuristic_only) == "heuristic_only");
  CHECK_THROWS_AS(parse_oracle_policy("bogus"), InvalidArgument);
}
