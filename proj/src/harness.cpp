#include "occ/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "occ/error.hpp"
#include "occ/parallel.hpp"

namespace occ {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

std::size_t param_size(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument("missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    const auto v = std::stoull(it->second, &used);
    if (used != it->second.size() || it->second.front() == '-') throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("parameter '" + key + "' must be a non-negative integer");
  }
}

double param_double(const std::map<std::string, std::string>& params, const std::string& key,
                    double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("parameter '" + key + "' must be a number");
  }
}

void allow_only(const std::map<std::string, std::string>& params,
                std::initializer_list<std::string_view> keys) {
  for (const auto& [k, v] : params)
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw InvalidArgument("unknown parameter '" + k + "'");
}

std::string describe(std::string_view name, const std::map<std::string, std::string>& params) {
  std::string out = "gen:" + std::string(name);
  for (const auto& [k, v] : params) out += " " + k + "=" + v;
  return out;
}

}  // namespace

GeneratedInstance generate(std::string_view name, const std::map<std::string, std::string>& raw,
                           std::uint64_t default_seed) {
  auto params = raw;
  if (name == "all-positive") {
    allow_only(params, {"m"});
    return {gen_all_positive(param_size(params, "m")), describe(name, params)};
  }
  if (name == "yao") {
    allow_only(params, {"m", "right_right"});
    auto rr = EdgeSign::negative;
    if (const auto it = params.find("right_right"); it != params.end()) {
      if (it->second == "+") rr = EdgeSign::positive;
      else if (it->second != "-") throw InvalidArgument("right_right must be + or -");
    } else {
      params["right_right"] = "-";
    }
    return {gen_yao_gadget(param_size(params, "m"), rr), describe(name, params)};
  }
  if (name == "two-clique") {
    allow_only(params, {"m", "k"});
    return {gen_two_clique(param_size(params, "m"), param_size(params, "k")), describe(name, params)};
  }
  if (name == "planted") {
    allow_only(params, {"clusters", "size", "flip", "seed"});
    if (!params.contains("seed")) params["seed"] = std::to_string(default_seed);
    if (!params.contains("flip")) params["flip"] = "0";
    return {gen_planted(param_size(params, "clusters"), param_size(params, "size"),
                        param_double(params, "flip", 0.0), param_size(params, "seed")),
            describe(name, params)};
  }
  if (name == "random") {
    allow_only(params, {"n", "density", "seed"});
    if (!params.contains("seed")) params["seed"] = std::to_string(default_seed);
    if (!params.contains("density")) params["density"] = "0.5";
    return {gen_random(param_size(params, "n"), param_double(params, "density", 0.5),
                       param_size(params, "seed")),
            describe(name, params)};
  }
  throw InvalidArgument("unknown generator '" + std::string(name) + "'");
}

ExperimentReport run_experiment(const LabeledInstance& inst, const std::string& descriptor,
                                std::string_view algorithm, const RunConfig& config) {
  ExperimentReport r;
  r.instance = descriptor;
  r.n = inst.size();
  r.algorithm = std::string(algorithm);
  r.seed = config.seed();
  std::istringstream lines(config.text);
  for (std::string line; std::getline(lines, line);) r.config.push_back(line);

  const auto start = Clock::now();
  std::vector<Partition> trace;
  NearOptChain chain;
  if (algorithm == "greedy") {
    trace = greedy_run(inst, config.greedy());
  } else if (algorithm == "dense") {
    auto run = dense_run(inst, config.dense());
    trace = std::move(run.trace);
    chain = std::move(run.chain);
  } else if (algorithm == "mixed") {
    auto run = mixed_run(inst, config.mixed);
    trace = std::move(run.trace);
    chain = std::move(run.chain);
    r.branch = std::string(to_string(run.branch));
  } else {
    throw InvalidArgument("unknown algorithm '" + std::string(algorithm) + "'");
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  for (std::size_t t = 1; t < trace.size(); ++t)
    if (!coarsens(trace[t], trace[t - 1]))
      throw InvariantError(r.algorithm + " split a cluster at t=" + std::to_string(t + 1));

  r.clustering = trace.back();
  r.score = score(r.clustering, inst);
  const auto opt = oracle(inst, inst.size(), config.dense().oracle);
  r.opt = score(opt.clustering, inst);
  r.opt_exact = opt.exact;
  for (const auto& e : chain) {
    std::size_t non_singleton = 0;
    for (const auto& c : e.hat.clustering.clusters()) non_singleton += c.size() > 1;
    r.updates.push_back({e.time, e.opt.profit, e.opt.exact, e.hat.marked.size(), non_singleton});
  }
  r.instance_text = write_instance(inst);
  return r;
}

std::vector<GeneratedInstance> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  if (max_n < 2) throw InvalidArgument("random corpus needs max_n >= 2");
  std::vector<GeneratedInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
    // Two decimals keep the descriptor exact.
    const double density = std::uniform_int_distribution<int>(0, 100)(rng) / 100.0;
    const std::uint64_t s = rng();
    out.push_back(generate("random", {{"n", std::to_string(n)}, {"density", fixed(density, 2)},
                                      {"seed", std::to_string(s)}}));
  }
  return out;
}

std::vector<GeneratedInstance> generator_corpus() {
  std::vector<GeneratedInstance> out;
  for (std::size_t m = 1; m <= 6; ++m) out.push_back(generate("all-positive", {{"m", std::to_string(m)}}));
  for (std::size_t m = 1; m <= 2; ++m)
    for (const char* rr : {"-", "+"})
      out.push_back(generate("yao", {{"m", std::to_string(m)}, {"right_right", rr}}));
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t k = 1; k < m; ++k)
      out.push_back(generate("two-clique", {{"m", std::to_string(m)}, {"k", std::to_string(k)}}));
  const std::pair<int, int> shapes[] = {{1, 4}, {2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}, {4, 3}, {2, 6}, {6, 2}};
  for (const auto& [c, s] : shapes)
    for (const char* flip : {"0", "0.1", "0.25"})
      out.push_back(generate("planted", {{"clusters", std::to_string(c)}, {"size", std::to_string(s)},
                                         {"flip", flip}, {"seed", "7"}}));
  return out;
}

std::vector<DenseStream> dense_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<DenseStream> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, 1000 + i));
    const auto pick = [&](std::size_t lo, std::size_t hi) {
      return std::to_string(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
    };
    DenseStream s;
    s.config.alpha = 0.01;
    s.config.tau = i % 2 == 0 ? 1.1 : 1.5;
    s.config.t_min = 4;
    s.config.oracle.policy = OraclePolicy::exact_only;
    const std::string sd = std::to_string(rng());
    switch ((i / 2) % 5) {
      case 0: {
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        s.input = generate("planted", {{"clusters", std::to_string(c)}, {"size", pick(2, 12 / c)},
                                       {"flip", "0"}, {"seed", sd}});
        break;
      }
      case 1:
        s.input = generate("planted", {{"clusters", pick(2, 3)}, {"size", "4"}, {"flip", "0.05"}, {"seed", sd}});
        break;
      case 2:
        s.input = generate("random", {{"n", pick(6, 12)}, {"density", "0.85"}, {"seed", sd}});
        break;
      case 3:
        s.input = generate("yao", {{"m", pick(1, 2)}, {"right_right", i % 4 < 2 ? "-" : "+"}});
        break;
      default:
        s.input = generate("two-clique", {{"m", "6"}, {"k", pick(1, 5)}});
        break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint64_t> bell_numbers(std::size_t up_to) {
  // Bell triangle: each row starts with the previous row's last entry.
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= up_to; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

namespace {

struct Check {
  bool ok = true;
  std::string note;
  std::string occ;
};

SuiteResult reduce(std::string suite, const std::vector<Check>& checks) {
  SuiteResult r;
  r.suite = std::move(suite);
  r.checked = checks.size();
  for (const auto& c : checks) {
    if (c.ok) continue;
    ++r.violations;
    if (r.notes.size() < 5) r.notes.push_back("violation: " + c.note);
    if (!r.counterexample) r.counterexample = c.occ;
  }
  return r;
}

SuiteResult greedy_suite(std::string_view suite, const VerifyOptions& o) {
  auto corpus = random_corpus(o.count ? o.count : 300, o.max_n, o.seed);
  for (auto& g : generator_corpus()) corpus.push_back(std::move(g));
  const bool half = suite == "greedy-half";

  std::vector<Check> checks(corpus.size() * 2);
  std::vector<double> worst(corpus.size(), 1.0);
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    const auto& inst = corpus[i].instance;
    const Score opt = score(exact_optimum(inst, inst.size(), o.exact_cap).clustering, inst);
    for (int p = 0; p < 2; ++p) {
      const GreedyPolicy policy{p == 0 ? MergeOrder::max_gain : MergeOrder::first_found};
      const Score got = score(greedy_run(inst, policy).back(), inst);
      const auto n = static_cast<std::int64_t>(inst.size());
      Check& c = checks[2 * i + p];
      if (half) {
        c.ok = 2 * got.profit >= opt.profit;
        if (opt.profit > 0) worst[i] = std::min(worst[i], double(got.profit) / double(opt.profit));
      } else {
        c.ok = got.cost <= (2 * n + 1) * opt.cost && (opt.cost != 0 || got.cost == 0);
        if (opt.cost > 0) worst[i] = std::max(worst[i], double(got.cost) / double(opt.cost));
      }
      c.note = corpus[i].descriptor + " policy=" + std::string(to_string(policy.order)) +
               " profit=" + std::to_string(got.profit) + " cost=" + std::to_string(got.cost) +
               " opt_profit=" + std::to_string(opt.profit) + " opt_cost=" + std::to_string(opt.cost);
      c.occ = write_instance(inst);
    }
  });
  auto r = reduce(std::string(suite), checks);
  const double extreme = half ? *std::min_element(worst.begin(), worst.end())
                              : *std::max_element(worst.begin(), worst.end());
  r.notes.insert(r.notes.begin(), std::to_string(corpus.size()) + " instances x 2 merge orders; " +
                                      (half ? "worst profit ratio " : "worst cost ratio ") +
                                      fixed(extreme, 6));
  return r;
}

std::size_t count_non_singleton(const Partition& p) {
  std::size_t count = 0;
  for (const auto& c : p.clusters()) count += c.size() > 1;
  return count;
}

SuiteResult dense_suite(std::string_view suite, const VerifyOptions& o) {
  const auto corpus = dense_corpus(o.count ? o.count : 50, o.seed);
  std::vector<Check> checks(corpus.size());
  std::vector<std::size_t> updates(corpus.size(), 0);
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    const auto& [input, config] = corpus[i];
    const auto& inst = input.instance;
    Check& c = checks[i];
    c.occ = write_instance(inst);
    c.note = input.descriptor + " tau=" + fixed(config.tau, 2);
    const auto run = dense_run(inst, config);
    updates[i] = run.chain.size();

    if (suite == "dense-forest") {
      if (run.trace.back() != forest_reference(inst, config, inst.size())) {
        c.ok = false;
        c.note += ": final clustering differs from the forest";
      }
      for (std::size_t t = 1; c.ok && t <= inst.size(); ++t)
        if (run.trace[t - 1] != forest_clustering(run.chain, t)) {
          c.ok = false;
          c.note += ": prefix " + std::to_string(t) + " differs from the forest";
        }
    } else if (suite == "opt-hat-budget") {
      for (const auto& e : run.chain) {
        const auto& hat = e.hat.clustering;
        bool within = count_non_singleton(hat) <= config.k2();
        for (const auto& cl : hat.clusters()) {
          if (cl.size() < 2) continue;
          // Must be a whole cluster of the oracle solution.
          const ClusterId id = e.opt.clustering.cluster_of(cl.front());
          std::size_t size = 0;
          for (ClusterId l : e.opt.clustering.labels()) size += l == id;
          within = within && size == cl.size() &&
                   std::all_of(cl.begin(), cl.end(),
                               [&](Vertex v) { return e.opt.clustering.cluster_of(v) == id; });
        }
        if (!within) {
          c.ok = false;
          c.note += ": opt-hat at t=" + std::to_string(e.time) + " breaks the budget";
        }
      }
    } else {  // schedule-sparsity
      const auto marks = checkpoints(config.tau, inst.size());
      for (std::size_t j = 0; j + 1 < marks.size(); ++j) {
        const auto in_window = std::count_if(run.chain.begin(), run.chain.end(), [&](const ChainEntry& e) {
          return e.time >= marks[j] && e.time < marks[j + 1];
        });
        if (in_window > 1) {
          c.ok = false;
          c.note += ": " + std::to_string(in_window) + " updates in [" + std::to_string(marks[j]) +
                    ", " + std::to_string(marks[j + 1]) + ")";
        }
      }
    }
  });
  auto r = reduce(std::string(suite), checks);
  r.notes.insert(r.notes.begin(), std::to_string(corpus.size()) + " streams, " +
                                      std::to_string(std::accumulate(updates.begin(), updates.end(), std::size_t{0})) +
                                      " update times");
  return r;
}

SuiteResult merge_only_suite(const VerifyOptions& o) {
  auto corpus = random_corpus(o.count ? o.count : 300, o.max_n, o.seed);
  for (auto& g : generator_corpus()) corpus.push_back(std::move(g));
  const auto streams = dense_corpus(50, o.seed);

  const auto merge_only = [](const std::vector<Partition>& trace) {
    for (std::size_t t = 1; t < trace.size(); ++t)
      if (!coarsens(trace[t], trace[t - 1])) return false;
    return true;
  };

  std::vector<Check> checks(corpus.size() + streams.size());
  parallel_for(checks.size(), o.jobs, [&](std::size_t i) {
    Check& c = checks[i];
    if (i < corpus.size()) {
      const auto& inst = corpus[i].instance;
      c.ok = merge_only(greedy_run(inst, {MergeOrder::max_gain})) &&
             merge_only(greedy_run(inst, {MergeOrder::first_found}));
      c.note = "greedy on " + corpus[i].descriptor;
      c.occ = write_instance(inst);
      return;
    }
    const auto& [input, config] = streams[i - corpus.size()];
    c.ok = merge_only(dense_run(input.instance, config).trace);
    for (std::uint64_t s = 0; c.ok && s < 4; ++s) {
      MixedConfig mixed{0.5, config, {}, s};
      c.ok = merge_only(mixed_run(input.instance, mixed).trace);
    }
    c.note = "dense/mixed on " + input.descriptor;
    c.occ = write_instance(input.instance);
  });
  return reduce("merge-only", checks);
}

SuiteResult oracle_suite(const VerifyOptions& o) {
  std::vector<Check> checks;
  const auto bell = bell_numbers(10);
  const auto probe = gen_random(10, 0.5, o.seed);
  for (std::size_t t = 0; t <= 10; ++t) {
    const auto r = exact_optimum(probe, t, o.exact_cap);
    Check c;
    c.ok = r.visited == bell[t];
    c.note = "t=" + std::to_string(t) + " visited " + std::to_string(r.visited) + ", Bell " +
             std::to_string(bell[t]);
    c.occ = write_instance(probe);
    checks.push_back(std::move(c));
  }

  const auto corpus = random_corpus(o.count ? o.count : 300, o.max_n, o.seed);
  std::vector<Check> ls(corpus.size());
  std::vector<int> equal(corpus.size(), 0);
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) {
    const auto& inst = corpus[i].instance;
    const auto exact = exact_optimum(inst, inst.size(), o.exact_cap);
    const auto heuristic = local_search_optimum(inst, inst.size(), 8, o.seed + i);
    ls[i].ok = heuristic.profit <= exact.profit;
    equal[i] = heuristic.profit == exact.profit;
    ls[i].note = corpus[i].descriptor + " local search " + std::to_string(heuristic.profit) +
                 " exceeds exact " + std::to_string(exact.profit);
    ls[i].occ = write_instance(inst);
  });
  checks.insert(checks.end(), ls.begin(), ls.end());
  auto r = reduce("oracle-bell", checks);
  const double rate = corpus.empty() ? 1.0
                                     : double(std::accumulate(equal.begin(), equal.end(), 0)) / corpus.size();
  r.notes.insert(r.notes.begin(), "Bell counts t=0..10; local search hit the exact optimum on " +
                                      fixed(100 * rate, 1) + "% of " + std::to_string(corpus.size()) +
                                      " instances");
  if (rate < 0.95) {
    ++r.violations;
    r.notes.push_back("violation: local search equality rate below 95%");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"greedy-half",       "greedy-2n1", "dense-forest",
                                              "opt-hat-budget",    "schedule-sparsity",
                                              "merge-only",        "oracle-bell"};
  return names;
}

SuiteResult run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "greedy-half" || suite == "greedy-2n1") return greedy_suite(suite, options);
  if (suite == "dense-forest" || suite == "opt-hat-budget" || suite == "schedule-sparsity")
    return dense_suite(suite, options);
  if (suite == "merge-only") return merge_only_suite(options);
  if (suite == "oracle-bell") return oracle_suite(options);
  throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

SearchResult search_worst(const SearchOptions& o) {
  if (o.objective != "profit" && o.objective != "cost")
    throw InvalidArgument("objective must be profit or cost");
  if (o.trials == 0) throw InvalidArgument("search needs at least one trial");
  if (o.n < 2 || o.n > o.config.dense().oracle.exact_cap)
    throw InvalidArgument("search needs 2 <= n <= exact cap for certified ratios");
  RunConfig config = o.config;
  config.mixed.dense.oracle.policy = OraclePolicy::exact_only;

  std::vector<ExperimentReport> reports(o.trials);
  std::vector<LabeledInstance> instances(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    std::mt19937_64 rng(mix_seed(o.seed, i));
    const double density = std::uniform_int_distribution<int>(0, 100)(rng) / 100.0;
    const std::uint64_t s = rng();
    auto base = generate("random", {{"n", std::to_string(o.n)}, {"density", fixed(density, 2)},
                                    {"seed", std::to_string(s)}});
    std::vector<Vertex> order(o.n);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    instances[i] = base.instance.permuted(order);
    reports[i] = run_experiment(instances[i], "search:" + base.descriptor + " trial=" + std::to_string(i),
                                o.algorithm, config);
  });

  std::size_t worst = 0;
  for (std::size_t i = 1; i < o.trials; ++i) {
    const bool better = o.objective == "profit" ? reports[i].ratio() < reports[worst].ratio()
                                                : reports[i].cost_ratio() > reports[worst].cost_ratio();
    if (better) worst = i;
  }
  return {reports[worst], instances[worst], o.trials};
}

std::string sweep_two_clique(std::size_t m_max, const RunConfig& config) {
  if (m_max < 2) throw InvalidArgument("sweep needs m_max >= 2");
  std::ostringstream out;
  out << "m\tk\tn\tgreedy_cost\topt_cost\tcost_ratio\tlower_bound\n";
  const std::size_t cap = config.dense().oracle.exact_cap;
  for (std::size_t m = 3; m <= m_max; ++m) {
    for (std::size_t k = 1; k < m; ++k) {
      const auto inst = gen_two_clique(m, k);
      const Score got = score(greedy_run(inst, config.greedy()).back(), inst);
      const Score opt = score(oracle(inst, inst.size(), {OraclePolicy::exact_then_heuristic, cap,
                                                         config.dense().oracle.restarts, config.seed()})
                                  .clustering,
                              inst);
      out << m << '\t' << k << '\t' << 2 * m << '\t' << got.cost << '\t' << opt.cost << '\t'
          << fixed(double(got.cost) / double(std::max<std::int64_t>(1, opt.cost)), 3) << '\t'
          << static_cast<std::int64_t>(2 * m) - 1 - opt.cost << (2 * m > cap ? "\t(heuristic opt)" : "")
          << '\n';
    }
  }
  return out.str();
}

std::string yao_experiment(std::size_t m, const RunConfig& config) {
  const LabeledInstance inputs[] = {gen_all_positive(m), gen_yao_gadget(m)};
  std::int64_t greedy_profit[2], dense_profit[2], opt_profit[2];
  for (int k = 0; k < 2; ++k) {
    const auto& inst = inputs[k];
    greedy_profit[k] = score(greedy_run(inst, config.greedy()).back(), inst).profit;
    dense_profit[k] = score(dense_run(inst, config.dense()).trace.back(), inst).profit;
    opt_profit[k] = oracle(inst, inst.size(), config.dense().oracle).profit;
  }
  std::ostringstream out;
  out << "q\tE_opt\tE_greedy\tE_dense\tgreedy_ratio\tdense_ratio\n";
  for (int step = 0; step <= 4; ++step) {
    const double q = step / 4.0;
    const auto mix = [q](const std::int64_t v[2]) { return (1 - q) * double(v[0]) + q * double(v[1]); };
    out << fixed(q, 2) << '\t' << fixed(mix(opt_profit), 2) << '\t' << fixed(mix(greedy_profit), 2) << '\t'
        << fixed(mix(dense_profit), 2) << '\t' << fixed(mix(greedy_profit) / mix(opt_profit), 6) << '\t'
        << fixed(mix(dense_profit) / mix(opt_profit), 6) << '\n';
  }
  return out.str();
}

CsvResult report_csv(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidArgument(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  CsvResult out;
  out.csv = csv_header();
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      out.csv += csv_row(read_report(buf.str()));
    } catch (const Error& e) {
      out.warnings.push_back("skipping " + path.filename().string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace occ
