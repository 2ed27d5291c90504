#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "occ/clustering.hpp"

namespace occ {

struct UpdateDiagnostic {
  std::size_t time = 0;
  std::int64_t opt_profit = 0;
  bool opt_exact = false;
  std::size_t marked = 0;
  std::size_t non_singleton = 0;

  friend bool operator==(const UpdateDiagnostic&, const UpdateDiagnostic&) = default;
};

/// Outcome of one algorithm run, certified against an offline oracle.
///
/// Serialized as line-delimited `key: value` text in this fixed order:
///
///   occ-report 1
///   instance: <descriptor>
///   n: <vertices>
///   algorithm: greedy | dense | mixed
///   seed: <u64>
///   branch: greedy | dense | -
///   config: <one line of the config block>          (repeated)
///   profit: / cost: / opt_profit: / opt_cost:
///   opt_exact: true | false
///   ratio: <profit / opt_profit, 12 decimals>
///   cost_ratio: <cost / max(1, opt_cost), 12 decimals>
///   ms: <wall clock>
///   update: t=.. opt_profit=.. opt_exact=.. marked=.. nonsingleton=..   (repeated)
///   cluster: <1-based vertex ids>                   (repeated)
///   occ: <one line of the .occ instance>            (repeated)
///   end
struct ExperimentReport {
  std::string instance;
  std::size_t n = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string branch = "-";
  std::vector<std::string> config;
  Score score;
  Score opt;
  bool opt_exact = false;
  double ms = 0.0;
  std::vector<UpdateDiagnostic> updates;
  Partition clustering;
  std::string instance_text;

  /// profit / opt_profit; 1 when the optimum has no agreements to win.
  double ratio() const;
  /// cost / max(1, opt_cost).
  double cost_ratio() const;
};

std::string format_ratio(double r);

std::string write_report(const ExperimentReport& report);

/// Throws ParseError on malformed input or when a stored ratio differs from
/// the one recomputed from the stored scores.
ExperimentReport read_report(std::string_view text);

std::string csv_header();
std::string csv_row(const ExperimentReport& report);

}  // namespace occ
