#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/vertex_set.hpp"

namespace domgame {

enum class GameVariant { connected, total_connected };
enum class Player { dominator, staller };

inline constexpr Player other(Player p) {
  return p == Player::dominator ? Player::staller : Player::dominator;
}

// Position inspectors.  A position is the set of vertices played so far;
// it must induce a connected subgraph (the empty set qualifies).
VertexSet dominated_set(const Graph& g, GameVariant variant, VertexSet played);
std::vector<int> legal_moves(const Graph& g, GameVariant variant,
                             VertexSet played);
bool is_terminal(const Graph& g, GameVariant variant, VertexSet played);

struct SolveOptions {
  // Explore moves in descending vertex order.  Game values are order
  // independent, so this only shuffles the search; tests rely on it.
  bool reverse_moves = false;
};

struct SolveStats {
  std::uint64_t states = 0;
  std::uint64_t memo_hits = 0;
};

// Exact memoized minimax solver for one graph and one variant.  Values
// count the moves remaining under optimal play, so the full game length
// is value from the empty position.  Dominator minimizes, Staller
// maximizes.
class GameSolver {
 public:
  GameSolver(const Graph& g, GameVariant variant, SolveOptions opts = {});

  int game_value(Player starter);
  int value(VertexSet played, Player to_move);

  // Smallest-index optimal move; throws std::logic_error on a finished
  // position.
  int best_move(VertexSet played, Player to_move);
  std::vector<int> principal_variation(Player starter);

  // Entry v is the game length when Dominator opens on v and both sides
  // play optimally afterwards.
  std::vector<int> per_vertex_values();

  const Graph& graph() const { return g_; }
  GameVariant variant() const { return variant_; }
  const SolveStats& stats() const { return stats_; }

 private:
  int search(VertexSet played, VertexSet frontier, VertexSet dominated,
             int turn);
  bool memo_get(VertexSet played, int turn, int& out) const;
  void memo_put(VertexSet played, int turn, int value);
  VertexSet cover_of(VertexSet played) const;

  Graph g_;
  GameVariant variant_;
  SolveOptions opts_;
  VertexSet all_;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> cover_;
  std::vector<std::int8_t> flat_;
  std::array<std::unordered_map<std::uint64_t, std::int8_t>, 2> map_;
  SolveStats stats_;
};

int solve(const Graph& g, GameVariant variant, Player starter,
          SolveOptions opts = {});

// Plain recursive reference solver with no memoization and no bitset
// tricks, kept deliberately separate from GameSolver so the two can
// cross-check each other.  Capped at 10 vertices.
int naive_solve(const Graph& g, GameVariant variant, Player starter);

std::vector<int> per_vertex_values(const Graph& g, GameVariant variant);

struct GameReport {
  int gamma_cg = 0;
  int gamma_cg_s = 0;
  int gamma_tcg = 0;
  int gamma_tcg_s = 0;
  std::vector<int> c_of_v;
  std::vector<int> t_of_v;
};

// Both variants, both starters, plus per-vertex values.  Needs a
// connected graph on at least two vertices.
GameReport game_report(const Graph& g);

}  // namespace domgame
