#pragma once

#include <optional>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

struct SetSearchResult {
  int size = 0;
  VertexSet witness;
};

// Minimum dominating set: N[S] = V. Witness is the numerically
// smallest optimal bitset.
SetSearchResult domination_number(const Graph& g);

// Minimum total dominating set: N(S) = V. Rejects graphs with an
// isolated vertex.
SetSearchResult total_domination_number(const Graph& g);

// Minimum connected dominating set: N[S] = V with G[S] connected.
// Rejects disconnected graphs.
SetSearchResult connected_domination_number(const Graph& g);

// Every minimum connected dominating set, in ascending bitset order.
std::vector<VertexSet> minimum_connected_dominating_sets(const Graph& g);

struct InvariantReport {
  int gamma = 0;
  VertexSet gamma_witness;
  std::optional<int> gamma_t;  // absent when an isolated vertex exists
  VertexSet gamma_t_witness;
  std::optional<int> gamma_c;  // absent when g is disconnected
  VertexSet gamma_c_witness;
};

InvariantReport invariant_report(const Graph& g);

}  // namespace domgame
