#include "domgame/enumerate.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace domgame {

namespace {

void check_range(int n) {
  if (n < 1 || n > kEnumerationCap) {
    throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                std::to_string(kEnumerationCap));
  }
}

// Adjacency rows for a mask, written into a scratch array.
void rows_from_mask(int n, std::uint32_t mask,
                    std::array<std::uint64_t, kEnumerationCap>& rows) {
  rows.fill(0);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      }
    }
  }
}

bool rows_connected(int n, const std::array<std::uint64_t, kEnumerationCap>& rows) {
  std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t seen = 1;
  for (;;) {
    std::uint64_t grown = seen;
    for (std::uint64_t rest = seen; rest; rest &= rest - 1) {
      grown |= rows[std::countr_zero(rest)];
    }
    if (grown == seen) break;
    seen = grown;
  }
  return seen == all;
}

}  // namespace

Graph graph_from_edge_mask(int n, std::uint32_t mask) {
  check_range(n);
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

void for_each_connected_labeled(
    int n, const std::function<void(const Graph&)>& fn) {
  check_range(n);
  std::uint32_t limit =
      static_cast<std::uint32_t>(1u << edge_slot_count(n));
  std::array<std::uint64_t, kEnumerationCap> rows{};
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    rows_from_mask(n, mask, rows);
    if (rows_connected(n, rows)) fn(graph_from_edge_mask(n, mask));
  }
}

std::vector<std::uint32_t> connected_edge_masks(int n) {
  check_range(n);
  std::vector<std::uint32_t> out;
  std::uint32_t limit =
      static_cast<std::uint32_t>(1u << edge_slot_count(n));
  std::array<std::uint64_t, kEnumerationCap> rows{};
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    rows_from_mask(n, mask, rows);
    if (rows_connected(n, rows)) out.push_back(mask);
  }
  return out;
}

std::uint64_t count_connected_labeled(int n) {
  check_range(n);
  std::uint64_t count = 0;
  std::uint32_t limit =
      static_cast<std::uint32_t>(1u << edge_slot_count(n));
  std::array<std::uint64_t, kEnumerationCap> rows{};
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    rows_from_mask(n, mask, rows);
    if (rows_connected(n, rows)) ++count;
  }
  return count;
}

}  // namespace domgame
