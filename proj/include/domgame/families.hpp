#pragma once

#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

Graph path(int n);      // P_n, n >= 1
Graph cycle(int n);     // C_n, n >= 3
Graph complete(int n);  // K_n, n >= 1
Graph star(int n);      // K_{1,n-1} on n vertices, center 0, n >= 1
Graph paw();            // K_{1,3} plus one edge between two leaves

// Cartesian product: (g,h) ~ (g',h') iff gg' in E(G), h = h' or
// g = g', hh' in E(H). Vertex (g,h) gets index g*n(H) + h.
Graph cartesian_product(const Graph& g, const Graph& h);

// Direct product: (g,h) ~ (g',h') iff gg' in E(G) and hh' in E(H).
// Same indexing; the result may be disconnected.
Graph direct_product(const Graph& g, const Graph& h);

// Disjoint union of g and hs[0..n-1] plus a join of every vertex of
// hs[i] with vertex i of g. Requires hs.size() == n(g).
Graph generalized_corona(const Graph& g, const std::vector<Graph>& hs);

// G with one pendant leaf per vertex.
Graph corona(const Graph& g);

// Cycle C_{3k} with a closed twin added to every third cycle vertex
// (bases at positions 1 mod 3). Cubic on 4k vertices; k >= 2.
Graph family_f(int k);

// Fixed 15-vertex graph: a 4-rung ladder closed off by z1/z2, a twin
// gadget y1,y2,y3,v2 on the right, and z3 on the z1..y3 arc.
Graph family_d15();

// Chain of r five-cycles x_i,y_i,z_i,y_{i+1} glued at y vertices, a
// pendant w_i on each x_i; 4r+1 vertices, r >= 3.
Graph family_g(int r);

}  // namespace domgame
