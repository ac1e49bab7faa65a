#pragma once

#include <string>
#include <string_view>

#include "domgame/graph.hpp"

namespace domgame {

// Parses one graph6 line (optionally prefixed with ">>graph6<<").
// Rejects sparse6/digraph6 input, bad characters, wrong length,
// nonzero padding bits, and graphs beyond the vertex capacity.
Graph parse_graph6(std::string_view line);

// Canonical graph6 encoding (shortest order form, zero padding).
std::string emit_graph6(const Graph& g);

// Plain text: first line "n m", then m lines "u v", 0-based.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace domgame
