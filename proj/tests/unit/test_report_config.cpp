#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "occ/config.hpp"
#include "occ/error.hpp"
#include "occ/harness.hpp"
#include "occ/report.hpp"

using namespace occ;

TEST_CASE("config parsing") {
  const auto cfg = parse_config(
      "# relaxed\nalpha = 0.05\ntau=1.5\n t_min = 4 \neta = 0.01\noracle_policy = exact_only\n"
      "exact_cap = 10\nrestarts = 3\nseed = 9\np = 0.25\ngreedy_order = first_found\n");
  CHECK(cfg.dense().alpha == 0.05);
  CHECK(cfg.dense().tau == 1.5);
  CHECK(cfg.dense().t_min == 4);
  CHECK(*cfg.dense().eta == 0.01);
  CHECK(cfg.dense().oracle.policy == OraclePolicy::exact_only);
  CHECK(cfg.dense().oracle.exact_cap == 10);
  CHECK(cfg.dense().oracle.restarts == 3);
  CHECK(cfg.seed() == 9);
  CHECK(cfg.dense().oracle.seed == 9);
  CHECK(cfg.mixed.p == 0.25);
  CHECK(cfg.greedy().order == MergeOrder::first_found);

  const auto empty = parse_config("");
  CHECK(empty.dense().alpha == 0.01);
  CHECK(empty.dense().t_min == 100);
}

TEST_CASE("config errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_config(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("alpha = 0.1\nbogus = 1\n") == 2);
  CHECK(line_of("alpha\n") == 1);
  CHECK(line_of("\n\ntau = x\n") == 3);
  CHECK(line_of("t_min = -4\n") == 1);
  CHECK(line_of("oracle_policy = nope\n") == 1);
  CHECK(line_of("alpha = 2\n") == 0);
  CHECK(line_of("p = 1.5\n") == 0);
  CHECK(line_of("alpha = \n") == 1);
}

namespace {
ExperimentReport sample() {
  RunConfig cfg = parse_config("alpha = 0.01\ntau = 1.5\nt_min = 4\noracle_policy = exact_only\n");
  const auto inst = gen_planted(2, 4, 0.0, 7);
  return run_experiment(inst, "gen:planted clusters=2 flip=0 seed=7 size=4", "dense", cfg);
}
}  // namespace

TEST_CASE("report round trip") {
  const auto r = sample();
  CHECK(r.opt.profit == 28);
  CHECK(r.score.profit == 28);
  CHECK(r.opt_exact);
  CHECK_FALSE(r.updates.empty());
  const auto text = write_report(r);
  const auto back = read_report(text);
  CHECK(write_report(back) == text);
  CHECK(back.score == r.score);
  CHECK(back.clustering == r.clustering);
  CHECK(back.updates == r.updates);
  CHECK(back.config == r.config);
  CHECK(text.rfind("occ-report 1\ninstance: ", 0) == 0);
}

TEST_CASE("report rejects inconsistent ratios") {
  auto text = write_report(sample());
  const auto at = text.find("ratio: ");
  text[at + 7] = text[at + 7] == '0' ? '1' : '0';
  CHECK_THROWS_AS(read_report(text), ParseError);
  CHECK_THROWS_AS(read_report("nonsense\n"), ParseError);
}

TEST_CASE("ratios") {
  ExperimentReport r;
  r.score = {11, 4};
  r.opt = {14, 1};
  CHECK(r.ratio() == doctest::Approx(11.0 / 14.0));
  CHECK(r.cost_ratio() == 4.0);
  r.opt = {0, 0};
  r.score = {0, 0};
  CHECK(r.ratio() == 1.0);
  CHECK(r.cost_ratio() == 0.0);
  CHECK(format_ratio(0.5) == "0.500000000000");
}

TEST_CASE("csv") {
  CHECK(csv_header() == "instance,algorithm,n,profit,opt_profit,ratio,cost,opt_cost,cost_ratio,seed,ms\n");
  const auto r = sample();
  const auto row = csv_row(r);
  CHECK(row.rfind("\"gen:planted", 0) == 0);
  CHECK(row.find(format_ratio(r.ratio())) != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "occ_csv_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(report_csv(dir.string()).csv == csv_header());
  std::ofstream(dir / "b.report") << write_report(r);
  std::ofstream(dir / "a.report") << write_report(r);
  std::ofstream(dir / "c.report") << "garbage\n";
  const auto out = report_csv(dir.string());
  CHECK(out.csv == csv_header() + row + row);
  CHECK(out.warnings.size() == 1);
  std::filesystem::remove_all(dir);
}
