#include "occ/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "occ/error.hpp"

namespace occ {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view value, std::size_t line) {
  try {
    std::size_t used = 0;
    const std::string s(value);
    const double d = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + std::string(value) + "'");
  }
}

std::uint64_t to_uint(std::string_view value, std::size_t line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(value) + "'");
  return out;
}

}  // namespace

void RunConfig::set_seed(std::uint64_t seed) {
  mixed.seed = seed;
  mixed.dense.oracle.seed = seed;
}

void RunConfig::set_exact_cap(std::size_t cap) { mixed.dense.oracle.exact_cap = cap; }

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  cfg.text = std::string(text);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) throw ParseError(line_no, "missing value for '" + std::string(key) + "'");

    try {
      auto& dense = cfg.mixed.dense;
      if (key == "alpha") dense.alpha = to_double(value, line_no);
      else if (key == "tau") dense.tau = to_double(value, line_no);
      else if (key == "t_min") dense.t_min = to_uint(value, line_no);
      else if (key == "eta") dense.eta = to_double(value, line_no);
      else if (key == "oracle_policy") dense.oracle.policy = parse_oracle_policy(value);
      else if (key == "exact_cap") dense.oracle.exact_cap = to_uint(value, line_no);
      else if (key == "restarts") dense.oracle.restarts = to_uint(value, line_no);
      else if (key == "seed") cfg.set_seed(to_uint(value, line_no));
      else if (key == "p") cfg.mixed.p = to_double(value, line_no);
      else if (key == "greedy_order") cfg.mixed.greedy.order = parse_merge_order(value);
      else throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  try {
    cfg.mixed.dense.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
  if (!(cfg.mixed.p >= 0.0 && cfg.mixed.p <= 1.0)) throw ParseError(0, "p must lie in [0, 1]");
  if (cfg.mixed.dense.oracle.restarts == 0) throw ParseError(0, "restarts must be >= 1");
  return cfg;
}

RunConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace occ
