#include "domgame/invariants.hpp"

#include <cassert>
#include <stdexcept>

namespace domgame {

namespace {

// Enumerates k-subsets of the n low bits in ascending numeric order
// (Gosper's hack), so the first hit is the canonical witness.
template <typename Pred>
std::optional<VertexSet> first_k_subset(int n, int k, Pred pred) {
  if (k > n) return std::nullopt;
  std::uint64_t limit = VertexSet::first(n).bits;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  for (;;) {
    if (pred(VertexSet{s})) return VertexSet{s};
    if (k == 0) return std::nullopt;
    // next k-subset
    std::uint64_t c = s & -s;
    std::uint64_t r = s + c;
    if ((r & ~limit) != 0) return std::nullopt;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

template <typename Pred>
SetSearchResult ascending_search(const Graph& g, Pred pred) {
  for (int k = 1; k <= g.order(); ++k) {
    if (auto hit = first_k_subset(g.order(), k, pred)) {
      return {k, *hit};
    }
  }
  // A dominating predicate always accepts V itself.
  assert(false);
  return {g.order(), g.vertices()};
}

}  // namespace

SetSearchResult domination_number(const Graph& g) {
  return ascending_search(
      g, [&](VertexSet s) { return g.closed_neighbors(s) == g.vertices(); });
}

SetSearchResult total_domination_number(const Graph& g) {
  if (g.min_degree() == 0 && g.order() > 1) {
    throw std::invalid_argument(
        "total domination is undefined with an isolated vertex");
  }
  if (g.order() == 1) {
    throw std::invalid_argument(
        "total domination is undefined with an isolated vertex");
  }
  return ascending_search(
      g, [&](VertexSet s) { return g.neighbors(s) == g.vertices(); });
}

SetSearchResult connected_domination_number(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument(
        "connected domination needs a connected graph");
  }
  return ascending_search(g, [&](VertexSet s) {
    return g.closed_neighbors(s) == g.vertices() &&
           is_connected_within(g, s);
  });
}

std::vector<VertexSet> minimum_connected_dominating_sets(const Graph& g) {
  SetSearchResult best = connected_domination_number(g);
  std::vector<VertexSet> out;
  std::uint64_t limit = g.vertices().bits;
  std::uint64_t s = (std::uint64_t{1} << best.size) - 1;
  for (;;) {
    VertexSet cand{s};
    if (g.closed_neighbors(cand) == g.vertices() &&
        is_connected_within(g, cand)) {
      out.push_back(cand);
    }
    std::uint64_t c = s & -s;
    std::uint64_t r = s + c;
    if ((r & ~limit) != 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

InvariantReport invariant_report(const Graph& g) {
  InvariantReport rep;
  auto dom = domination_number(g);
  rep.gamma = dom.size;
  rep.gamma_witness = dom.witness;
  if (g.order() > 1 && g.min_degree() >= 1) {
    auto tot = total_domination_number(g);
    rep.gamma_t = tot.size;
    rep.gamma_t_witness = tot.witness;
    assert(rep.gamma <= *rep.gamma_t);
  }
  if (is_connected(g)) {
    auto con = connected_domination_number(g);
    rep.gamma_c = con.size;
    rep.gamma_c_witness = con.witness;
    assert(rep.gamma <= *rep.gamma_c);
  }
  return rep;
}

}  // namespace domgame
