#include "domgame/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace domgame {

namespace {

constexpr int kBias = 63;

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("graph6: " + msg);
}

int decode_char(char c) {
  if (c < 63 || c > 126) bad("character out of range");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) {
    line.remove_prefix(header.size());
  }
  if (line.empty()) bad("empty input");
  if (line[0] == ':' || line[0] == ';' || line[0] == '&') {
    bad("not a graph6 header (sparse6/digraph6 input?)");
  }

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~') {
      bad("order beyond supported range");
    }
    if (line.size() < 4) bad("truncated order field");
    n = (static_cast<long long>(decode_char(line[1])) << 12) |
        (decode_char(line[2]) << 6) | decode_char(line[3]);
    pos = 4;
  } else {
    n = decode_char(line[0]);
    pos = 1;
  }
  if (n < 1) bad("graph needs at least one vertex");
  if (n > kBitsetCap) {
    bad("order " + std::to_string(n) + " exceeds the " +
        std::to_string(kBitsetCap) + "-vertex capacity");
  }

  long long nbits = n * (n - 1) / 2;
  std::size_t want = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos != want) bad("body length mismatch");

  std::vector<std::pair<int, int>> edges;
  // Bits run over the upper triangle column by column: (0,1), (0,2),
  // (1,2), (0,3), ... with the high bit of each group first.
  long long bit = 0;
  int col = 1, row = 0;
  for (std::size_t k = pos; k < line.size(); ++k) {
    int group = decode_char(line[k]);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      int b = (group >> shift) & 1;
      if (bit >= nbits) {
        if (b != 0) bad("nonzero padding bits");
        continue;
      }
      if (b) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kBias));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m)) {
    throw std::invalid_argument("edge list: missing \"n m\" header");
  }
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list: expected " +
                                  std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string leftover;
  if (in >> leftover) {
    throw std::invalid_argument("edge list: trailing content after " +
                                std::to_string(m) + " edges");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edge_list()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace domgame
