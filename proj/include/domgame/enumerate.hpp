#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// Largest order the exhaustive enumeration accepts.
inline constexpr int kEnumerationCap = 7;

// Number of vertex pairs, and thus edge-mask bits, for order n.
constexpr int edge_slot_count(int n) { return n * (n - 1) / 2; }

// Edge mask bit k corresponds to the k-th pair in the fixed order
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph graph_from_edge_mask(int n, std::uint32_t mask);

// Calls fn once for every connected labeled simple graph on n
// vertices, in ascending edge-mask order. Requires 1 <= n <= 7.
void for_each_connected_labeled(int n,
                                const std::function<void(const Graph&)>& fn);

// The masks of the same stream, in the same order.
std::vector<std::uint32_t> connected_edge_masks(int n);

std::uint64_t count_connected_labeled(int n);

}  // namespace domgame
