#include "occ/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "occ/error.hpp"

namespace occ {

double ExperimentReport::ratio() const {
  if (opt.profit == 0) return 1.0;
  return static_cast<double>(score.profit) / static_cast<double>(opt.profit);
}

double ExperimentReport::cost_ratio() const {
  return static_cast<double>(score.cost) / static_cast<double>(std::max<std::int64_t>(1, opt.cost));
}

std::string format_ratio(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", r);
  return buf;
}

std::string write_report(const ExperimentReport& r) {
  std::ostringstream out;
  out << "occ-report 1\n";
  out << "instance: " << r.instance << '\n';
  out << "n: " << r.n << '\n';
  out << "algorithm: " << r.algorithm << '\n';
  out << "seed: " << r.seed << '\n';
  out << "branch: " << r.branch << '\n';
  for (const auto& line : r.config) out << "config: " << line << '\n';
  out << "profit: " << r.score.profit << '\n';
  out << "cost: " << r.score.cost << '\n';
  out << "opt_profit: " << r.opt.profit << '\n';
  out << "opt_cost: " << r.opt.cost << '\n';
  out << "opt_exact: " << (r.opt_exact ? "true" : "false") << '\n';
  out << "ratio: " << format_ratio(r.ratio()) << '\n';
  out << "cost_ratio: " << format_ratio(r.cost_ratio()) << '\n';
  char ms[64];
  std::snprintf(ms, sizeof ms, "%.3f", r.ms);
  out << "ms: " << ms << '\n';
  for (const auto& u : r.updates)
    out << "update: t=" << u.time << " opt_profit=" << u.opt_profit
        << " opt_exact=" << (u.opt_exact ? "true" : "false") << " marked=" << u.marked
        << " nonsingleton=" << u.non_singleton << '\n';
  std::istringstream clusters(serialize(r.clustering));
  for (std::string line; std::getline(clusters, line);) out << "cluster: " << line << '\n';
  std::istringstream occ(r.instance_text);
  for (std::string line; std::getline(occ, line);) out << "occ: " << line << '\n';
  out << "end\n";
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t line() const { return line_; }

  std::string_view peek_key() const {
    const auto line = current();
    const auto colon = line.find(": ");
    return colon == std::string_view::npos ? line : line.substr(0, colon);
  }

  /// Consumes `key: value` and returns value.
  std::string_view take(std::string_view key) {
    if (done()) throw ParseError(line_ + 1, "unexpected end of report, expected '" + std::string(key) + "'");
    const auto line = current();
    if (peek_key() != key || line.size() < key.size() + 2)
      throw ParseError(line_ + 1, "expected '" + std::string(key) + ": ...'");
    advance();
    return line.substr(key.size() + 2);
  }

  std::string_view take_raw() {
    const auto line = current();
    advance();
    return line;
  }

 private:
  std::string_view current() const {
    const auto end = text_.find('\n', pos_);
    return text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
  }
  void advance() {
    const auto end = text_.find('\n', pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

template <class Int>
Int parse_int(std::string_view s, std::size_t line) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "bad integer '" + std::string(s) + "'");
  return v;
}

bool parse_bool(std::string_view s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(line, "expected true or false");
}

UpdateDiagnostic parse_update(std::string_view s, std::size_t line) {
  UpdateDiagnostic u;
  std::istringstream in{std::string(s)};
  std::string field;
  int seen = 0;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError(line, "bad update field");
    const std::string_view key(field.data(), eq);
    const std::string_view value(field.data() + eq + 1, field.size() - eq - 1);
    if (key == "t") u.time = parse_int<std::size_t>(value, line);
    else if (key == "opt_profit") u.opt_profit = parse_int<std::int64_t>(value, line);
    else if (key == "opt_exact") u.opt_exact = parse_bool(value, line);
    else if (key == "marked") u.marked = parse_int<std::size_t>(value, line);
    else if (key == "nonsingleton") u.non_singleton = parse_int<std::size_t>(value, line);
    else throw ParseError(line, "unknown update field '" + std::string(key) + "'");
    ++seen;
  }
  if (seen != 5) throw ParseError(line, "update line needs 5 fields");
  return u;
}

}  // namespace

ExperimentReport read_report(std::string_view text) {
  LineReader in(text);
  if (in.done() || in.take_raw() != "occ-report 1") throw ParseError(1, "not an occ-report 1 file");

  ExperimentReport r;
  r.instance = std::string(in.take("instance"));
  r.n = parse_int<std::size_t>(in.take("n"), in.line());
  r.algorithm = std::string(in.take("algorithm"));
  r.seed = parse_int<std::uint64_t>(in.take("seed"), in.line());
  r.branch = std::string(in.take("branch"));
  while (!in.done() && in.peek_key() == "config") r.config.emplace_back(in.take("config"));
  r.score.profit = parse_int<std::int64_t>(in.take("profit"), in.line());
  r.score.cost = parse_int<std::int64_t>(in.take("cost"), in.line());
  r.opt.profit = parse_int<std::int64_t>(in.take("opt_profit"), in.line());
  r.opt.cost = parse_int<std::int64_t>(in.take("opt_cost"), in.line());
  r.opt_exact = parse_bool(in.take("opt_exact"), in.line());
  const std::string ratio(in.take("ratio"));
  if (ratio != format_ratio(r.ratio())) throw ParseError(in.line(), "stored ratio does not match scores");
  const std::string cost_ratio(in.take("cost_ratio"));
  if (cost_ratio != format_ratio(r.cost_ratio()))
    throw ParseError(in.line(), "stored cost_ratio does not match scores");
  try {
    r.ms = std::stod(std::string(in.take("ms")));
  } catch (const std::invalid_argument&) {
    throw ParseError(in.line(), "bad ms value");
  }
  while (!in.done() && in.peek_key() == "update") {
    const auto value = in.take("update");
    r.updates.push_back(parse_update(value, in.line()));
  }
  std::vector<std::string> clusters;
  while (!in.done() && in.peek_key() == "cluster") clusters.emplace_back(in.take("cluster"));
  r.clustering = parse_partition(clusters, r.n);
  while (!in.done() && in.peek_key() == "occ") {
    r.instance_text += in.take("occ");
    r.instance_text += '\n';
  }
  if (in.done() || in.take_raw() != "end") throw ParseError(in.line(), "missing 'end'");
  return r;
}

std::string csv_header() {
  return "instance,algorithm,n,profit,opt_profit,ratio,cost,opt_cost,cost_ratio,seed,ms\n";
}

std::string csv_row(const ExperimentReport& r) {
  std::string instance = r.instance;
  // Descriptors may contain commas or quotes.
  std::string quoted = "\"";
  for (char c : instance) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  char ms[64];
  std::snprintf(ms, sizeof ms, "%.3f", r.ms);
  std::ostringstream out;
  out << quoted << ',' << r.algorithm << ',' << r.n << ',' << r.score.profit << ',' << r.opt.profit
      << ',' << format_ratio(r.ratio()) << ',' << r.score.cost << ',' << r.opt.cost << ','
      << format_ratio(r.cost_ratio()) << ',' << r.seed << ',' << ms << '\n';
  return out.str();
}

}  // namespace occ
