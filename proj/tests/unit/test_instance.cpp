#include <random>

#include "doctest.h"
#include "occ/clustering.hpp"
#include "occ/error.hpp"
#include "occ/instance.hpp"

using namespace occ;

TEST_CASE("read small instances") {
  auto a = read_instance("2\n+\n");
  CHECK(a.size() == 2);
  CHECK(a.positive(1, 0));
  CHECK(a.positive(0, 1));

  auto b = read_instance("3\n+\n+-\n");
  CHECK(b.positive(1, 0));
  CHECK(b.positive(2, 0));
  CHECK_FALSE(b.positive(2, 1));
  CHECK(b.positive_count() == 2);
}

TEST_CASE("write is byte exact") {
  CHECK(write_instance(read_instance("3\n+\n+-\n")) == "3\n+\n+-\n");
  CHECK(write_instance(read_instance("1\n")) == "1\n");
  auto tc = gen_two_clique(3, 1);
  const auto text = write_instance(tc);
  CHECK(write_instance(read_instance(text)) == text);
  CHECK(read_instance(text) == tc);
}

TEST_CASE("round trip on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const double density = static_cast<double>(rng() % 101) / 100.0;
    auto inst = gen_random(n, density, rng());
    const auto text = write_instance(inst);
    auto back = read_instance(text);
    REQUIRE(back == inst);
    CHECK(write_instance(back) == text);
  }
}

namespace {
std::size_t parse_error_line(const std::string& text) {
  try {
    read_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("parse errors name the line") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("x\n") == 1);
  CHECK(parse_error_line("0\n") == 1);
  CHECK(parse_error_line(" 2\n+\n") == 1);
  CHECK(parse_error_line("3\n+\n+\n") == 3);
  CHECK(parse_error_line("3\n+\n+-+\n") == 3);
  CHECK(parse_error_line("3\n+\n+x\n") == 3);
  CHECK(parse_error_line("3\n+\n") == 3);
  CHECK(parse_error_line("2\n+") == 2);
  CHECK(parse_error_line("2\n+\n-\n") == 3);
  CHECK(parse_error_line("2\n+ \n") == 2);
  CHECK(parse_error_line("2\r\n+\n") == 1);
}

TEST_CASE("generators produce complete labellings") {
  for (std::size_t m = 1; m <= 5; ++m) {
    CHECK(gen_all_positive(m).size() == 2 * m);
    CHECK(gen_all_positive(m).positive_count() == m * (2 * m - 1));
    const auto y = gen_yao_gadget(m);
    CHECK(y.size() == 6 * m);
    CHECK(y.edge_count() == 6 * m * (6 * m - 1) / 2);
    for (std::size_t k = 1; k < m; ++k) {
      const auto t = gen_two_clique(m, k);
      CHECK(t.size() == 2 * m);
      CHECK(t.positive_count() == m * (m - 1) + k);
    }
  }
  CHECK(gen_two_clique(3, 1).positive_count() == 7);
  CHECK(gen_all_positive(2).positive_count() == 6);
  CHECK(gen_all_positive(1).size() == 2);
  CHECK(gen_planted(3, 4, 0.2, 5).edge_count() == 66);
  CHECK(gen_random(7, 0.5, 1).edge_count() == 21);
}

TEST_CASE("generator argument checks") {
  CHECK_THROWS_AS(gen_all_positive(0), InvalidArgument);
  CHECK_THROWS_AS(gen_two_clique(3, 0), InvalidArgument);
  CHECK_THROWS_AS(gen_two_clique(3, 3), InvalidArgument);
  CHECK_THROWS_AS(gen_planted(2, 3, 1.5, 0), InvalidArgument);
  CHECK_THROWS_AS(gen_random(4, -0.1, 0), InvalidArgument);
}

TEST_CASE("yao prefix equals all-positive") {
  for (std::size_t m = 1; m <= 4; ++m) {
    CHECK(gen_yao_gadget(m).prefix(2 * m) == gen_all_positive(m));
    CHECK(gen_yao_gadget(m, EdgeSign::positive).prefix(2 * m) == gen_all_positive(m));
  }
}

TEST_CASE("yao gadget structure") {
  const std::size_t m = 2;
  const auto y = gen_yao_gadget(m);
  // group g occupies [4g, 4g+4); first m left, next m right.
  auto group = [](Vertex v) { return v / 4; };
  auto left = [](Vertex v) { return v % 4 < 2; };
  for (Vertex i = 1; i < y.size(); ++i)
    for (Vertex j = 0; j < i; ++j) {
      bool expect;
      if (group(i) == group(j)) expect = true;
      else expect = left(i) && left(j);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(y.positive(i, j) == expect);
    }
  const auto yp = gen_yao_gadget(m, EdgeSign::positive);
  CHECK(yp.positive(5 + 2, 0 + 2));  // right-right across groups
  CHECK_FALSE(y.positive(5 + 2, 0 + 2));
}

TEST_CASE("two-clique layout") {
  const auto t = gen_two_clique(3, 1);
  // 0=a, 1=b1, 2=a2, 3=a3, 4=b2, 5=b3
  CHECK(t.positive(1, 0));
  CHECK(t.positive(2, 0));
  CHECK(t.positive(3, 2));
  CHECK(t.positive(5, 4));
  CHECK(t.positive(4, 1));
  CHECK_FALSE(t.positive(2, 1));
  CHECK_FALSE(t.positive(4, 0));
}

TEST_CASE("planted is deterministic and noiseless when flip is zero") {
  CHECK(gen_planted(3, 4, 0.1, 9) == gen_planted(3, 4, 0.1, 9));
  CHECK(gen_random(9, 0.4, 3) == gen_random(9, 0.4, 3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_planted(3, 3, 0.0, seed);
    const auto labels = planted_labels(3, 3, seed);
    CHECK(score(Partition(labels), inst).cost == 0);
    CHECK(inst.positive_count() == 9);
  }
}

TEST_CASE("permuted relabels edges") {
  const auto inst = gen_random(6, 0.5, 11);
  const std::vector<Vertex> order{3, 1, 5, 0, 2, 4};
  const auto p = inst.permuted(order);
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = 0; j < 6; ++j)
      if (i != j) CHECK(p.positive(i, j) == inst.positive(order[i], order[j]));
  const std::vector<Vertex> bad{0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(inst.permuted(bad), InvalidArgument);
}

TEST_CASE("back edges view") {
  const auto inst = read_instance("3\n+\n+-\n");
  auto be = inst.back_edges(2);
  REQUIRE(be.size() == 2);
  CHECK(be[0] == EdgeSign::positive);
  CHECK(be[1] == EdgeSign::negative);
  CHECK(inst.back_edges(0).empty());
}

TEST_CASE("hash is stable across round trip") {
  const auto inst = gen_planted(2, 4, 0.1, 7);
  CHECK(instance_hash(inst) == instance_hash(read_instance(write_instance(inst))));
  CHECK(instance_hash(inst) != instance_hash(gen_planted(2, 4, 0.1, 8)));
}
