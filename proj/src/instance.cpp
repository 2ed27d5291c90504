#include "occ/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "occ/error.hpp"

namespace occ {

LabeledInstance::LabeledInstance(std::size_t n, std::vector<EdgeSign> signs)
    : n_(n), signs_(std::move(signs)) {
  if (n == 0) throw InvalidArgument("instance must have at least one vertex");
  if (signs_.size() != n * (n - 1) / 2)
    throw InvalidArgument("instance with " + std::to_string(n) + " vertices needs " +
                          std::to_string(n * (n - 1) / 2) + " labels, got " +
                          std::to_string(signs_.size()));
}

std::size_t LabeledInstance::positive_count() const {
  return static_cast<std::size_t>(
      std::count(signs_.begin(), signs_.end(), EdgeSign::positive));
}

LabeledInstance LabeledInstance::permuted(std::span<const Vertex> order) const {
  if (order.size() != n_) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex v : order) {
    if (v >= n_ || seen[v]) throw InvalidArgument("not a permutation");
    seen[v] = true;
  }
  std::vector<EdgeSign> signs;
  signs.reserve(signs_.size());
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) signs.push_back(sign(order[i], order[j]));
  return LabeledInstance(n_, std::move(signs));
}

LabeledInstance LabeledInstance::prefix(std::size_t t) const {
  if (t == 0 || t > n_) throw InvalidArgument("prefix length out of range");
  return LabeledInstance(t, std::vector<EdgeSign>(signs_.begin(),
                                                  signs_.begin() + t * (t - 1) / 2));
}

namespace {

// Builds an instance from a sign function over arrival indices (j < i).
template <class SignFn>
LabeledInstance build(std::size_t n, SignFn&& fn) {
  std::vector<EdgeSign> signs;
  signs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) signs.push_back(fn(i, j));
  return LabeledInstance(n, std::move(signs));
}

EdgeSign sign_of(bool positive) { return positive ? EdgeSign::positive : EdgeSign::negative; }

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

LabeledInstance gen_all_positive(std::size_t m) {
  if (m == 0) throw InvalidArgument("all-positive: m must be >= 1");
  return build(2 * m, [](std::size_t, std::size_t) { return EdgeSign::positive; });
}

LabeledInstance gen_yao_gadget(std::size_t m, EdgeSign right_right) {
  if (m == 0) throw InvalidArgument("yao gadget: m must be >= 1");
  const auto group = [m](std::size_t v) { return v / (2 * m); };
  const auto is_left = [m](std::size_t v) { return v % (2 * m) < m; };
  return build(6 * m, [&](std::size_t i, std::size_t j) {
    if (group(i) == group(j)) return EdgeSign::positive;
    if (is_left(i) && is_left(j)) return EdgeSign::positive;
    if (is_left(i) != is_left(j)) return EdgeSign::negative;
    return right_right;
  });
}

LabeledInstance gen_two_clique(std::size_t m, std::size_t k) {
  if (k == 0 || k >= m) throw InvalidArgument("two-clique: need 1 <= k <= m-1");
  // Arrival layout: 0 = a, 1..k = b_1..b_k, k+1..k+m-1 = a_2..a_m, rest = b_{k+1}..b_m.
  const auto in_a = [m, k](std::size_t v) { return v == 0 || (v > k && v < k + m); };
  return build(2 * m, [&](std::size_t i, std::size_t j) {
    if (in_a(i) == in_a(j)) return EdgeSign::positive;
    // j < i, so an edge touching a (vertex 0) always has j == 0.
    return sign_of(j == 0 && i <= k);
  });
}

namespace {

std::vector<std::uint32_t> shuffled_labels(std::size_t clusters, std::size_t size,
                                           std::mt19937_64& rng) {
  if (clusters == 0 || size == 0) throw InvalidArgument("planted: clusters and size must be >= 1");
  std::vector<std::uint32_t> labels(clusters * size);
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::uint32_t>(v / size);
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

}  // namespace

std::vector<std::uint32_t> planted_labels(std::size_t clusters, std::size_t size,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return shuffled_labels(clusters, size, rng);
}

LabeledInstance gen_planted(std::size_t clusters, std::size_t size, double flip_prob,
                            std::uint64_t seed) {
  check_probability(flip_prob, "planted: flip probability");
  // The shuffle consumes the head of the stream; flips draw from the rest.
  std::mt19937_64 rng(seed);
  const auto labels = shuffled_labels(clusters, size, rng);
  std::bernoulli_distribution flip(flip_prob);
  return build(labels.size(), [&](std::size_t i, std::size_t j) {
    return sign_of((labels[i] == labels[j]) != flip(rng));
  });
}

LabeledInstance gen_random(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("random: n must be >= 1");
  check_probability(density, "random: density");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pos(density);
  return build(n, [&](std::size_t, std::size_t) { return sign_of(pos(rng)); });
}

LabeledInstance read_instance(std::string_view text) {
  std::size_t line_no = 1;
  std::size_t pos = 0;
  const auto next_line = [&]() -> std::string_view {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      if (pos >= text.size()) throw ParseError(line_no, "unexpected end of input");
      throw ParseError(line_no, "missing trailing newline");
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    return line;
  };

  const std::string_view header = next_line();
  if (header.empty() || header.size() > 9 ||
      !std::all_of(header.begin(), header.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line_no, "expected a decimal vertex count");
  const std::size_t n = std::stoul(std::string(header));
  if (n == 0) throw ParseError(line_no, "vertex count must be positive");

  std::vector<EdgeSign> signs;
  signs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 2; i <= n; ++i) {
    ++line_no;
    const std::string_view line = next_line();
    if (line.size() != i - 1)
      throw ParseError(line_no, "expected " + std::to_string(i - 1) + " signs, got " +
                                    std::to_string(line.size()));
    for (char c : line) {
      if (c == '+') signs.push_back(EdgeSign::positive);
      else if (c == '-') signs.push_back(EdgeSign::negative);
      else throw ParseError(line_no, std::string("illegal character '") + c + "'");
    }
  }
  if (pos != text.size()) throw ParseError(line_no + 1, "trailing data after " + std::to_string(n) + " vertices");
  return LabeledInstance(n, std::move(signs));
}

std::string write_instance(const LabeledInstance& inst) {
  std::string out = std::to_string(inst.size()) + "\n";
  out.reserve(out.size() + inst.edge_count() + inst.size());
  for (Vertex i = 1; i < inst.size(); ++i) {
    for (EdgeSign s : inst.back_edges(i)) out.push_back(s == EdgeSign::positive ? '+' : '-');
    out.push_back('\n');
  }
  return out;
}

LabeledInstance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_instance(buf.str());
}

void write_instance_file(const LabeledInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << write_instance(inst);
}

std::uint64_t instance_hash(const LabeledInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace occ
