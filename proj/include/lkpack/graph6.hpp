#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lkpack/graph.hpp"

namespace lkpack {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

inline int graph6_value(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw parse_error("byte outside graph6 range 63..126", pos);
  return c - 63;
}

}  // namespace detail

/// Decode one graph6 line (no trailing newline, no ">>graph6<<" header).
///
/// Orders up to 62 use the one-byte size prefix; 63 and 64 use the '~'
/// prefix followed by three bytes. Padding bits in the final byte must be
/// zero so that every accepted string is the canonical encoding of its graph.
inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw parse_error("graph order exceeds 64", 1);
    if (text.size() < 4) throw parse_error("truncated size prefix", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::graph6_value(text, i);
    if (n > kMaxVertices) throw parse_error("graph order " + std::to_string(n) + " exceeds 64", 1);
    if (n <= 62) throw parse_error("non-canonical long size prefix", 1);
    pos = 4;
  } else {
    n = detail::graph6_value(text, 0);
    pos = 1;
  }

  const long pairs = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() < pos + body) throw parse_error("truncated adjacency data", text.size());
  if (text.size() > pos + body) throw parse_error("trailing bytes after adjacency data", pos + body);

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((detail::graph6_value(text, at) >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (body > 0) {
    const std::size_t last = pos + body - 1;
    const int used = static_cast<int>(pairs - static_cast<long>(body - 1) * 6);
    const int padding_mask = (1 << (6 - used)) - 1;
    if (detail::graph6_value(text, last) & padding_mask)
      throw parse_error("nonzero padding bits", last);
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Whitespace-separated edge list: "n m" followed by m pairs "u v" (0-based).
inline Graph parse_edge_list(std::istream& in) {
  long n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header \"n m\"");
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("edge list: order " + std::to_string(n) + " outside 0..64");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: endpoint out of range in edge " + std::to_string(i));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("edge list: trailing data \"" + rest + "\"");
  return g;
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

}  // namespace lkpack
