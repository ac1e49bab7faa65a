#include "domgame/families.hpp"

#include <stdexcept>
#include <string>

namespace domgame {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  EdgeList e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

Graph paw() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  long long total = static_cast<long long>(g.order()) * h.order();
  require(total <= kBitsetCap,
          "product order exceeds the 64-vertex capacity");
  int nh = h.order();
  EdgeList e;
  std::vector<std::string> labels(total);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < nh; ++b) {
      labels[a * nh + b] = "(" + g.label(a) + "," + h.label(b) + ")";
      for (int b2 : h.neighbors(b)) {
        if (b2 > b) e.emplace_back(a * nh + b, a * nh + b2);
      }
      for (int a2 : g.neighbors(a)) {
        if (a2 > a) e.emplace_back(a * nh + b, a2 * nh + b);
      }
    }
  }
  return Graph(static_cast<int>(total), e, std::move(labels));
}

Graph direct_product(const Graph& g, const Graph& h) {
  long long total = static_cast<long long>(g.order()) * h.order();
  require(total <= kBitsetCap,
          "product order exceeds the 64-vertex capacity");
  int nh = h.order();
  EdgeList e;
  std::vector<std::string> labels(total);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < nh; ++b) {
      labels[a * nh + b] = "(" + g.label(a) + "," + h.label(b) + ")";
      for (int a2 : g.neighbors(a)) {
        for (int b2 : h.neighbors(b)) {
          int u = a * nh + b, v = a2 * nh + b2;
          if (v > u) e.emplace_back(u, v);
        }
      }
    }
  }
  return Graph(static_cast<int>(total), e, std::move(labels));
}

Graph generalized_corona(const Graph& g, const std::vector<Graph>& hs) {
  require(static_cast<int>(hs.size()) == g.order(),
          "generalized corona needs one graph per vertex of the base");
  long long total = g.order();
  for (const Graph& h : hs) total += h.order();
  require(total <= kBitsetCap,
          "corona order exceeds the 64-vertex capacity");
  EdgeList e = g.edge_list();
  std::vector<std::string> labels(total);
  for (int v = 0; v < g.order(); ++v) labels[v] = g.label(v);
  int base = g.order();
  for (int i = 0; i < g.order(); ++i) {
    const Graph& h = hs[i];
    for (auto [u, v] : h.edge_list()) e.emplace_back(base + u, base + v);
    for (int u = 0; u < h.order(); ++u) e.emplace_back(i, base + u);
    base += h.order();
  }
  return Graph(static_cast<int>(total), e, std::move(labels));
}

Graph corona(const Graph& g) {
  std::vector<Graph> hs(g.order(), complete(1));
  return generalized_corona(g, hs);
}

Graph family_f(int k) {
  require(k >= 2, "twin-cycle family needs k >= 2");
  int nc = 3 * k;
  require(nc + k <= kBitsetCap, "family order exceeds capacity");
  EdgeList e;
  std::vector<std::string> labels(nc + k);
  for (int i = 0; i < nc; ++i) {
    e.emplace_back(i, (i + 1) % nc);
    labels[i] = "a" + std::to_string(i + 1);
  }
  // Twin b_j of cycle vertex 3j+1: joined to the base and both of its
  // cycle neighbors, so the closed neighborhoods coincide.
  for (int j = 0; j < k; ++j) {
    int b = nc + j;
    int base = 3 * j + 1;
    e.emplace_back(b, base);
    e.emplace_back(b, (base + nc - 1) % nc);
    e.emplace_back(b, (base + 1) % nc);
    labels[b] = "b" + std::to_string(j + 1);
  }
  return Graph(nc + k, e, std::move(labels));
}

Graph family_d15() {
  // Indices: x1..x4 = 0..3, u1..u4 = 4..7, z1 = 8, z2 = 9,
  //          y1 = 10, y2 = 11, y3 = 12, v2 = 13, z3 = 14.
  enum {
    x1, x2, x3, x4, u1, u2, u3, u4, z1, z2, y1, y2, y3, v2, z3
  };
  EdgeList e = {
      {x1, x2}, {x2, x3}, {x3, x4},            // bottom rail
      {u1, u2}, {u2, u3}, {u3, u4},            // top rail
      {x1, u1}, {x2, u2}, {x3, u3}, {x4, u4},  // rungs
      {z1, x1}, {z1, u1},                      // left cap
      {z2, x4}, {z2, u4},                      // right cap
      {z2, y1},
      {y1, y2}, {y1, v2},
      {y2, y3}, {y2, v2},  // y2 and v2 are closed twins
      {y3, v2},
      {z3, z1}, {z3, y3},  // z3 sits on the long z1..y3 arc
  };
  std::vector<std::string> labels = {"x1", "x2", "x3", "x4", "u1", "u2",
                                     "u3", "u4", "z1", "z2", "y1", "y2",
                                     "y3", "v2", "z3"};
  return Graph(15, e, std::move(labels));
}

Graph family_g(int r) {
  require(r >= 3, "chained five-cycle family needs r >= 3");
  int n = 4 * r + 1;
  require(n <= kBitsetCap, "family order exceeds capacity");
  auto x = [&](int i) { return i - 1; };          // i in [1, r]
  auto y = [&](int i) { return r + i - 1; };      // i in [1, r+1]
  auto z = [&](int i) { return 2 * r + i; };      // i in [1, r]
  auto w = [&](int i) { return 3 * r + i; };      // i in [1, r]
  EdgeList e;
  std::vector<std::string> labels(n);
  for (int i = 1; i <= r; ++i) {
    e.emplace_back(w(i), x(i));
    e.emplace_back(x(i), y(i));
    e.emplace_back(y(i), z(i));
    e.emplace_back(z(i), y(i + 1));
    e.emplace_back(y(i + 1), x(i));
    labels[x(i)] = "x" + std::to_string(i);
    labels[z(i)] = "z" + std::to_string(i);
    labels[w(i)] = "w" + std::to_string(i);
  }
  for (int i = 1; i <= r + 1; ++i) labels[y(i)] = "y" + std::to_string(i);
  return Graph(n, e, std::move(labels));
}

}  // namespace domgame
