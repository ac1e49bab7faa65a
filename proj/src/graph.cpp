#include "domgame/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace domgame {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), m_(0), adj_(), labels_(std::move(labels)) {
  if (n < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  if (n > kBitsetCap) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds the " +
                                std::to_string(kBitsetCap) +
                                "-vertex capacity");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match graph order");
  }
  adj_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adj_[u].set(v);
    adj_[v].set(u);
  }
  int total = 0;
  for (int v = 0; v < n_; ++v) total += adj_[v].count();
  m_ = total / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out;
}

VertexSet Graph::closed_neighbors(VertexSet s) const {
  return neighbors(s) | s;
}

std::string Graph::label(int v) const {
  if (v >= 0 && v < static_cast<int>(labels_.size()) && !labels_[v].empty()) {
    return labels_[v];
  }
  return std::to_string(v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  return is_connected_within(g, g.vertices());
}

bool is_connected_within(const Graph& g, VertexSet s) {
  if (s.count() <= 1) return true;
  VertexSet seen = VertexSet::single(s.lowest());
  for (;;) {
    VertexSet grown = (seen | g.neighbors(seen)) & s;
    if (grown == seen) break;
    seen = grown;
  }
  return seen == s;
}

std::optional<std::pair<int, int>> neighborhood_inclusion(const Graph& g) {
  // N[u] within N[v] forces u = v or uv an edge, so scanning ordered
  // adjacent pairs is enough.
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (g.closed_neighbors(u).is_subset_of(g.closed_neighbors(v))) {
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

bool has_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.closed_neighbors(v) == g.vertices()) return true;
  }
  return false;
}

std::string format_set(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool fst = true;
  for (int v : s) {
    if (!fst) out += ", ";
    out += g.label(v);
    fst = false;
  }
  return out + "}";
}

}  // namespace domgame
