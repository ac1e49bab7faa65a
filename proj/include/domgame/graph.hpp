#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

/// Immutable simple undirected graph on at most kBitsetCap vertices.
/// Adjacency rows store open neighborhoods N(v). Construction rejects
/// self-loops and out-of-range endpoints; duplicate edges collapse.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  int order() const { return n_; }  // n(G)
  int size() const { return m_; }   // m(G)

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::first(n_); }

  VertexSet neighbors(int v) const { return adj_[v]; }  // N(v)
  VertexSet closed_neighbors(int v) const {             // N[v]
    return adj_[v].with(v);
  }
  VertexSet neighbors(VertexSet s) const;         // N(S)
  VertexSet closed_neighbors(VertexSet s) const;  // N[S]

  // Stored label, or the decimal vertex id when none was given.
  std::string label(int v) const;

  std::vector<std::pair<int, int>> edge_list() const;

  // Structural equality on (order, adjacency); labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_;
  int m_;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);

// Whether the vertices of s induce a connected subgraph of g.
// Empty and singleton sets count as connected.
bool is_connected_within(const Graph& g, VertexSet s);

// Ordered pair (u, v), u != v, with N[u] included in N[v], if any exists.
std::optional<std::pair<int, int>> neighborhood_inclusion(const Graph& g);

// True when no closed neighborhood is contained in another's.
inline bool is_non_inclusive(const Graph& g) {
  return !neighborhood_inclusion(g).has_value();
}

bool has_universal_vertex(const Graph& g);

// "{a, b, c}" using vertex labels; for witnesses and diagnostics.
std::string format_set(const Graph& g, VertexSet s);

}  // namespace domgame
