#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "lkpack/extremal.hpp"
#include "lkpack/graph.hpp"
#include "lkpack/graph6.hpp"
#include "lkpack/profile.hpp"

namespace lkpack {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed by two
/// xor-shift-multiply rounds (constants 0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
/// Reports reproduce across implementations that follow this definition.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = 0;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Labeled graphs
// ---------------------------------------------------------------------------

inline constexpr int kLabeledDefaultMax = 6;
inline constexpr int kLabeledOverrideMax = 7;

/// Bit i of `mask` is the i-th vertex pair in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

/// All 2^(n(n-1)/2) labeled graphs on n vertices in edge-mask order.
template <typename Visit>
void for_each_labeled_graph(int n, Visit&& visit, bool allow_seven = false) {
  const int cap = allow_seven ? kLabeledOverrideMax : kLabeledDefaultMax;
  if (n < 0 || n > cap)
    throw std::invalid_argument("labeled enumeration supports n <= " + std::to_string(cap) +
                                (allow_seven ? "" : " (n = 7 needs the explicit override)"));
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t count = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(graph_from_edge_mask(n, mask));
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

inline constexpr int kTreeExhaustiveMax = 10;

/// Labeled tree on n = |seq| + 2 vertices from its Prüfer sequence.
inline Graph decode_pruefer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  if (n > kMaxVertices) throw std::length_error("Pruefer sequence too long");
  std::array<int, kMaxVertices> degree;
  degree.fill(1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
    ++degree[x];
  }
  Graph g(n);
  VertexSet leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : seq) {
    const int leaf = leaves.lowest();
    leaves.erase(leaf);
    g.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int u = leaves.lowest();
  leaves.erase(u);
  g.add_edge(u, leaves.lowest());
  return g;
}

/// Every labeled tree on n vertices exactly once, in lexicographic Prüfer order.
template <typename Visit>
void for_each_labeled_tree(int n, Visit&& visit) {
  if (n < 2 || n > kTreeExhaustiveMax)
    throw std::invalid_argument("exhaustive tree enumeration needs 2 <= n <= " +
                                std::to_string(kTreeExhaustiveMax));
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    visit(decode_pruefer(seq));
    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) seq[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
}

namespace detail {

inline std::string ahu_encode(const Graph& t, int v, int parent) {
  std::vector<std::string> children;
  for (int w : t.neighbours(v))
    if (w != parent) children.push_back(ahu_encode(t, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace detail

/// Canonical string of a tree up to isomorphism: AHU encoding rooted at the
/// centre (the lexicographically smaller encoding when there are two centres).
inline std::string tree_canonical_form(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_canonical_form requires a tree");
  VertexSet remaining = t.vertices();
  std::array<int, kMaxVertices> degree{};
  for (int v = 0; v < t.order(); ++v) degree[v] = t.degree(v);
  while (remaining.size() > 2) {
    VertexSet leaves;
    for (int v : remaining)
      if (degree[v] <= 1) leaves.insert(v);
    for (int v : leaves) {
      remaining.erase(v);
      for (int w : t.neighbours(v) & remaining) --degree[w];
    }
  }
  std::string best;
  for (int c : remaining) {
    std::string code = detail::ahu_encode(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// Labeled trees on n vertices; with `dedup`, only the first labeled
/// representative of each isomorphism class is visited.
template <typename Visit>
void for_each_tree(int n, bool dedup, Visit&& visit) {
  if (!dedup) {
    for_each_labeled_tree(n, visit);
    return;
  }
  std::set<std::string> seen;
  for_each_labeled_tree(n, [&](const Graph& t) {
    if (seen.insert(tree_canonical_form(t)).second) visit(t);
  });
}

/// Uniform random labeled tree via a random Prüfer sequence.
inline Graph random_tree(int n, SplitMix64& rng) {
  if (n < 2) throw std::invalid_argument("random_tree needs n >= 2");
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return decode_pruefer(seq);
}

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

inline constexpr int kRandomMaxOrder = 16;
inline constexpr int kRejectionBudgetPerGraph = 10000;

class rejection_budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G(n, p): each pair in graph6 order is included when rng.unit() < p.
inline Graph random_graph(int n, double p, SplitMix64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

/// `count` connected graphs from G(n, p) by rejection, reproducible per seed.
inline std::vector<Graph> random_connected(int n, int count, std::uint64_t seed, double p) {
  if (n < 2 || n > kRandomMaxOrder)
    throw std::invalid_argument("random_connected needs 2 <= n <= " +
                                std::to_string(kRandomMaxOrder));
  if (count < 0) throw std::invalid_argument("random_connected needs count >= 0");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in (0, 1]");
  SplitMix64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int attempts = 0;
    while (true) {
      Graph g = random_graph(n, p, rng);
      if (is_connected(g)) {
        out.push_back(g);
        break;
      }
      if (++attempts >= kRejectionBudgetPerGraph)
        throw rejection_budget_error(
            "random_connected: no connected graph after " + std::to_string(attempts) +
            " draws at n = " + std::to_string(n) + ", p = " + std::to_string(p) +
            "; use a higher edge probability");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph files
// ---------------------------------------------------------------------------

/// A file is either an edge list ("n m" header) or one graph6 string per line;
/// blank lines and lines starting with '#' are skipped in graph6 files.
inline std::vector<Graph> read_graph_text(std::string_view text) {
  std::string_view probe = text;
  while (!probe.empty() && std::isspace(static_cast<unsigned char>(probe.front())))
    probe.remove_prefix(1);
  const bool edge_list = !probe.empty() && std::isdigit(static_cast<unsigned char>(probe.front()));
  if (edge_list) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    line.erase(0, start);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph_text(buf.str());
}

// ---------------------------------------------------------------------------
// Corpus specs
// ---------------------------------------------------------------------------

struct AllLabeledPart {
  int min_order = 1;
  int max_order = 6;
};
struct TreesPart {
  int min_order = 2;
  int max_order = 9;
  bool dedup = false;
  int sample = 0;  // per order, used above kTreeExhaustiveMax
  std::uint64_t seed = 1;
};
struct RandomConnectedPart {
  int min_order = 8;
  int max_order = 12;
  int count = 100;  // per order
  std::uint64_t seed = 1;
  double edge_prob = 0.3;
};
struct FilesPart {
  std::vector<std::string> paths;
};
struct FamilyPart {
  std::string family;
  int min_order = 1;
  int max_order = 1;
};

using CorpusPart = std::variant<AllLabeledPart, TreesPart, RandomConnectedPart, FilesPart, FamilyPart>;

/// A deterministic stream of graphs described by a spec string such as
/// "all_labeled(6)+trees(<=9)+random_connected(n=8..12,1000,seed=42)".
class Corpus {
 public:
  std::vector<CorpusPart> parts;
  bool allow_seven = false;

  template <typename Visit>
  void for_each(Visit&& visit) const {
    for (const auto& part : parts) std::visit([&](const auto& p) { run(p, visit); }, part);
  }

  std::size_t count() const {
    std::size_t total = 0;
    for_each([&](const Graph&) { ++total; });
    return total;
  }

 private:
  template <typename Visit>
  void run(const AllLabeledPart& p, Visit& visit) const {
    for (int n = p.min_order; n <= p.max_order; ++n) for_each_labeled_graph(n, visit, allow_seven);
  }
  template <typename Visit>
  void run(const TreesPart& p, Visit& visit) const {
    for (int n = p.min_order; n <= p.max_order; ++n) {
      if (n <= kTreeExhaustiveMax) {
        for_each_tree(n, p.dedup, visit);
      } else {
        SplitMix64 rng(p.seed + static_cast<std::uint64_t>(n));
        for (int i = 0; i < p.sample; ++i) visit(random_tree(n, rng));
      }
    }
  }
  template <typename Visit>
  void run(const RandomConnectedPart& p, Visit& visit) const {
    for (int n = p.min_order; n <= p.max_order; ++n)
      for (const Graph& g : random_connected(n, p.count, p.seed + static_cast<std::uint64_t>(n), p.edge_prob))
        visit(g);
  }
  template <typename Visit>
  void run(const FilesPart& p, Visit& visit) const {
    for (const auto& path : p.paths)
      for (const Graph& g : read_graph_file(path)) visit(g);
  }
  template <typename Visit>
  void run(const FamilyPart& p, Visit& visit) const {
    if (p.family == "complete_bipartite") {
      for (int total = p.min_order; total <= p.max_order; ++total)
        for (int m = 1; 2 * m <= total; ++m) visit(make_complete_bipartite(m, total - m));
      return;
    }
    for (int n = p.min_order; n <= p.max_order; ++n)
      visit(construct_family(p.family + ":" + std::to_string(n)));
  }
};

namespace detail {

[[noreturn]] inline void corpus_error(std::string_view spec, const std::string& what) {
  throw std::invalid_argument("corpus spec \"" + std::string(spec) + "\": " + what);
}

inline long parse_long(std::string_view text, std::string_view spec) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    corpus_error(spec, "bad integer \"" + std::string(text) + "\"");
  return value;
}

/// "A..B", "<=B", "≤B" (lower end `low`), or a single "N" meaning low..N.
inline std::pair<int, int> parse_order_range(std::string_view text, int low, std::string_view spec) {
  if (text.starts_with("<=")) return {low, static_cast<int>(parse_long(text.substr(2), spec))};
  if (text.starts_with("\xE2\x89\xA4")) return {low, static_cast<int>(parse_long(text.substr(3), spec))};
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return {low, static_cast<int>(parse_long(text, spec))};
  return {static_cast<int>(parse_long(text.substr(0, dots), spec)),
          static_cast<int>(parse_long(text.substr(dots + 2), spec))};
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = text.find(sep);
    out.push_back(text.substr(0, at));
    if (at == std::string_view::npos) break;
    text.remove_prefix(at + 1);
  }
  return out;
}

}  // namespace detail

/// Parse a corpus spec. Random parts without an explicit seed use `default_seed`.
///
///   all_labeled(6)            all labeled graphs of order 1..6 (also A..B)
///   trees(<=9)                all labeled trees of order 2..9 (also A..B, ",dedup",
///                             ",sample=N" for orders above 10)
///   random_connected(n=8..12,1000,seed=42,p=0.3)   count per order
///   files(a.g6;b.txt)         graph6 lines or edge-list files
///   family(path,3..12)        constructed family members over an order range
inline Corpus parse_corpus(std::string_view spec, std::uint64_t default_seed = 1,
                           bool allow_seven = false) {
  using namespace detail;
  Corpus corpus;
  corpus.allow_seven = allow_seven;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto open = rest.find('(');
    if (open == std::string_view::npos) corpus_error(spec, "expected name(...)");
    const auto close = rest.find(')', open);
    if (close == std::string_view::npos) corpus_error(spec, "missing ')'");
    const std::string_view name = rest.substr(0, open);
    const std::string_view body = rest.substr(open + 1, close - open - 1);
    rest.remove_prefix(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '+') corpus_error(spec, "expected '+' between parts");
      rest.remove_prefix(1);
      if (rest.empty()) corpus_error(spec, "trailing '+'");
    }
    const auto args = split(body, ',');

    if (name == "all_labeled") {
      if (args.size() != 1) corpus_error(spec, "all_labeled takes one order or range");
      auto [lo, hi] = parse_order_range(args[0], 1, spec);
      const int cap = allow_seven ? kLabeledOverrideMax : kLabeledDefaultMax;
      if (lo < 1 || hi < lo || hi > cap)
        corpus_error(spec, "all_labeled orders must lie in 1.." + std::to_string(cap) +
                               (allow_seven ? "" : " (n = 7 needs the override flag)"));
      corpus.parts.emplace_back(AllLabeledPart{lo, hi});
    } else if (name == "trees") {
      TreesPart p;
      p.seed = default_seed;
      std::tie(p.min_order, p.max_order) = parse_order_range(args[0], 2, spec);
      for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "dedup") p.dedup = true;
        else if (args[i].starts_with("sample=")) p.sample = static_cast<int>(parse_long(args[i].substr(7), spec));
        else if (args[i].starts_with("seed=")) p.seed = static_cast<std::uint64_t>(parse_long(args[i].substr(5), spec));
        else corpus_error(spec, "unknown trees option \"" + std::string(args[i]) + "\"");
      }
      if (p.min_order < 2 || p.max_order < p.min_order || p.max_order > kMaxVertices)
        corpus_error(spec, "tree orders must satisfy 2 <= A <= B");
      if (p.max_order > kTreeExhaustiveMax && p.sample <= 0)
        corpus_error(spec, "tree orders above 10 need sample=N");
      corpus.parts.emplace_back(p);
    } else if (name == "random_connected") {
      RandomConnectedPart p;
      p.seed = default_seed;
      bool have_count = false;
      bool have_orders = false;
      for (auto arg : args) {
        if (arg.starts_with("n=")) {
          std::tie(p.min_order, p.max_order) = parse_order_range(arg.substr(2), 0, spec);
          if (arg.substr(2).find("..") == std::string_view::npos) p.min_order = p.max_order;
          have_orders = true;
        } else if (arg.starts_with("seed=")) {
          p.seed = static_cast<std::uint64_t>(parse_long(arg.substr(5), spec));
        } else if (arg.starts_with("p=")) {
          try {
            p.edge_prob = std::stod(std::string(arg.substr(2)));
          } catch (const std::exception&) {
            corpus_error(spec, "bad edge probability");
          }
        } else if (!have_count) {
          p.count = static_cast<int>(parse_long(arg, spec));
          have_count = true;
        } else {
          corpus_error(spec, "unexpected random_connected argument \"" + std::string(arg) + "\"");
        }
      }
      if (!have_orders) corpus_error(spec, "random_connected needs n=A..B");
      if (p.min_order < 2 || p.max_order < p.min_order || p.max_order > kRandomMaxOrder)
        corpus_error(spec, "random_connected orders must lie in 2..16");
      corpus.parts.emplace_back(p);
    } else if (name == "files") {
      FilesPart p;
      for (auto path : split(body, ';'))
        if (!path.empty()) p.paths.emplace_back(path);
      if (p.paths.empty()) corpus_error(spec, "files() needs at least one path");
      corpus.parts.emplace_back(p);
    } else if (name == "family") {
      if (args.size() != 2) corpus_error(spec, "family takes a name and an order range");
      FamilyPart p;
      p.family = std::string(args[0]);
      std::tie(p.min_order, p.max_order) = parse_order_range(args[1], 1, spec);
      static const std::set<std::string> known = {"path", "cycle", "complete", "empty",
                                                  "star", "complete_minus_edge",
                                                  "complete_bipartite", "diam2"};
      if (!known.contains(p.family)) corpus_error(spec, "unknown family \"" + p.family + "\"");
      corpus.parts.emplace_back(p);
    } else {
      corpus_error(spec, "unknown part \"" + std::string(name) + "\"");
    }
  }
  if (corpus.parts.empty()) corpus_error(spec, "empty corpus");
  return corpus;
}

}  // namespace lkpack
