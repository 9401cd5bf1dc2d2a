#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srgnet/graph.hpp"

namespace srgnet {

// graph6: ASCII encoding of undirected graphs, one per line. Header is
// chr(n+63) for n <= 62, or '~' followed by three chars carrying n in 18 bits
// for 63 <= n <= 258047. The upper triangle is read column by column,
// (0,1), (0,2), (1,2), (0,3), ..., packed into 6-bit groups (MSB first),
// each group offset by 63. Canonical encodings pad with zero bits.

namespace detail {
constexpr int kG6Offset = 63;
constexpr int kG6ShortMax = 62;
constexpr int kG6LongMax = 258047;
}  // namespace detail

inline Graph parse_graph6_line(std::string_view line) {
  using detail::kG6Offset;
  if (line.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw Error(ErrorCode::MalformedHeader, "byte out of graph6 range");

  std::size_t pos = 0;
  long n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw Error(ErrorCode::UnsupportedOrder, "graphs with n > 258047 are not supported");
    if (line.size() < 4) throw Error(ErrorCode::MalformedHeader, "truncated long-form header");
    n = (static_cast<long>(line[1] - kG6Offset) << 12) |
        (static_cast<long>(line[2] - kG6Offset) << 6) | static_cast<long>(line[3] - kG6Offset);
    pos = 4;
  } else {
    n = line[0] - kG6Offset;
    pos = 1;
  }
  if (n < 1) throw Error(ErrorCode::MalformedHeader, "graph order must be positive");
  if (n > detail::kG6LongMax)
    throw Error(ErrorCode::UnsupportedOrder, "graph order out of supported range");

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(line.size()) - static_cast<long>(pos) < bytes)
    throw Error(ErrorCode::TruncatedBitstream, "bit stream shorter than n(n-1)/2 bits");
  if (static_cast<long>(line.size()) - static_cast<long>(pos) > bytes)
    throw Error(ErrorCode::MalformedHeader, "trailing bytes after bit stream");

  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  long bit = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i, ++bit) {
      const int group = line[pos + bit / 6] - kG6Offset;
      if (group & (0x20 >> (bit % 6))) a(i, j) = a(j, i) = 1;
    }
  // padding bits of the last group must be zero
  for (long b = bits; b < bytes * 6; ++b) {
    const int group = line[pos + b / 6] - kG6Offset;
    if (group & (0x20 >> (b % 6)))
      throw Error(ErrorCode::NonCanonicalPadding, "non-zero padding bits");
  }
  return Graph(std::move(a));
}

/// Parse a whole catalog: one graph per line, blank lines and the optional
/// ">>graph6<<" marker skipped.
inline std::vector<Graph> parse_graph6(std::string_view text) {
  std::vector<Graph> graphs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
    if (!line.empty()) graphs.push_back(parse_graph6_line(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return graphs;
}

/// Canonical graph6 line (minimal header, zero padding), without newline.
inline std::string write_graph6(const Graph& graph) {
  using detail::kG6Offset;
  const long n = graph.order();
  if (n > detail::kG6LongMax)
    throw Error(ErrorCode::UnsupportedOrder, "graph order out of supported range");

  std::string out;
  if (n <= detail::kG6ShortMax) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
  }
  int group = 0, filled = 0;
  const Eigen::MatrixXi& a = graph.adjacency();
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i) {
      group = (group << 1) | a(i, j);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kG6Offset));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Offset));
  return out;
}

inline std::string write_graph6(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) {
    out += write_graph6(g);
    out.push_back('\n');
  }
  return out;
}

}  // namespace srgnet
