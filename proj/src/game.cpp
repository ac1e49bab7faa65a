#include "domgame/game.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace domgame {

namespace {

constexpr int kFlatMemoMaxN = 20;

int turn_index(Player p) { return p == Player::dominator ? 0 : 1; }

void check_position(const Graph& g, VertexSet played) {
  if (!played.is_subset_of(g.vertices())) {
    throw std::invalid_argument(
        "played set contains vertices outside the graph");
  }
  if (!is_connected_within(g, played)) {
    throw std::invalid_argument(
        "played set must induce a connected subgraph");
  }
}

}  // namespace

VertexSet dominated_set(const Graph& g, GameVariant variant,
                        VertexSet played) {
  if (!played.is_subset_of(g.vertices())) {
    throw std::invalid_argument(
        "played set contains vertices outside the graph");
  }
  return variant == GameVariant::connected ? g.closed_neighbors(played)
                                           : g.neighbors(played);
}

std::vector<int> legal_moves(const Graph& g, GameVariant variant,
                             VertexSet played) {
  check_position(g, played);
  VertexSet dominated = dominated_set(g, variant, played);
  VertexSet candidates =
      played.empty() ? g.vertices() : g.neighbors(played) - played;
  std::vector<int> moves;
  for (int v : candidates) {
    VertexSet cover = variant == GameVariant::connected
                          ? g.closed_neighbors(v)
                          : g.neighbors(v);
    if (!(cover - dominated).empty()) moves.push_back(v);
  }
  return moves;
}

bool is_terminal(const Graph& g, GameVariant variant, VertexSet played) {
  bool done = legal_moves(g, variant, played).empty();
#ifndef NDEBUG
  // On a connected graph the game stalls exactly when everything is
  // dominated (for the total variant this needs a second vertex to exist).
  if (is_connected(g) &&
      (variant == GameVariant::connected || g.order() >= 2)) {
    assert(done == (dominated_set(g, variant, played) == g.vertices()));
  }
#endif
  return done;
}

GameSolver::GameSolver(const Graph& g, GameVariant variant, SolveOptions opts)
    : g_(g), variant_(variant), opts_(opts), all_(g.vertices()) {
  if (!is_connected(g_)) {
    throw std::invalid_argument("game solving needs a connected graph");
  }
  if (variant_ == GameVariant::total_connected && g_.order() < 2) {
    throw std::invalid_argument(
        "the total variant needs at least two vertices");
  }
  open_.reserve(g_.order());
  cover_.reserve(g_.order());
  for (int v = 0; v < g_.order(); ++v) {
    open_.push_back(g_.neighbors(v));
    cover_.push_back(variant_ == GameVariant::connected
                         ? g_.closed_neighbors(v)
                         : g_.neighbors(v));
  }
  if (g_.order() <= kFlatMemoMaxN) {
    flat_.assign(std::size_t{2} << g_.order(), -1);
  }
}

VertexSet GameSolver::cover_of(VertexSet played) const {
  return variant_ == GameVariant::connected ? g_.closed_neighbors(played)
                                            : g_.neighbors(played);
}

bool GameSolver::memo_get(VertexSet played, int turn, int& out) const {
  if (!flat_.empty()) {
    std::int8_t v =
        flat_[(static_cast<std::size_t>(turn) << g_.order()) | played.bits];
    if (v < 0) return false;
    out = v;
    return true;
  }
  auto it = map_[turn].find(played.bits);
  if (it == map_[turn].end()) return false;
  out = it->second;
  return true;
}

void GameSolver::memo_put(VertexSet played, int turn, int value) {
  if (!flat_.empty()) {
    flat_[(static_cast<std::size_t>(turn) << g_.order()) | played.bits] =
        static_cast<std::int8_t>(value);
  } else {
    map_[turn].emplace(played.bits, static_cast<std::int8_t>(value));
  }
  ++stats_.states;
}

int GameSolver::search(VertexSet played, VertexSet frontier,
                       VertexSet dominated, int turn) {
  int cached;
  if (memo_get(played, turn, cached)) {
    ++stats_.memo_hits;
    return cached;
  }
  int result = -1;
  if (dominated == all_) {
    result = 0;
  } else {
    VertexSet candidates = played.empty() ? all_ : frontier - played;
    auto consider = [&](int v) {
      if ((cover_[v] - dominated).empty()) return;
      int len = 1 + search(played.with(v), frontier | open_[v],
                           dominated | cover_[v], 1 - turn);
      if (result < 0) {
        result = len;
      } else if (turn == 0) {
        result = std::min(result, len);
      } else {
        result = std::max(result, len);
      }
    };
    if (!opts_.reverse_moves) {
      for (int v : candidates) consider(v);
    } else {
      std::uint64_t rest = candidates.bits;
      while (rest != 0) {
        int v = 63 - std::countl_zero(rest);
        rest &= ~(std::uint64_t{1} << v);
        consider(v);
      }
    }
    if (result < 0) {
      assert(false && "undominated vertices remain but no move is legal");
      result = 0;
    }
  }
  memo_put(played, turn, result);
  return result;
}

int GameSolver::game_value(Player starter) {
  return search({}, {}, {}, turn_index(starter));
}

int GameSolver::value(VertexSet played, Player to_move) {
  check_position(g_, played);
  return search(played, g_.neighbors(played), cover_of(played),
                turn_index(to_move));
}

int GameSolver::best_move(VertexSet played, Player to_move) {
  int target = value(played, to_move);
  VertexSet dominated = cover_of(played);
  if (dominated == all_) {
    throw std::logic_error("no legal moves from a finished position");
  }
  VertexSet candidates =
      played.empty() ? all_ : g_.neighbors(played) - played;
  for (int v : candidates) {
    if ((cover_[v] - dominated).empty()) continue;
    if (1 + value(played.with(v), other(to_move)) == target) return v;
  }
  throw std::logic_error("no move matches the computed value");
}

std::vector<int> GameSolver::principal_variation(Player starter) {
  std::vector<int> line;
  VertexSet played;
  Player to_move = starter;
  while (cover_of(played) != all_) {
    int v = best_move(played, to_move);
    line.push_back(v);
    played = played.with(v);
    to_move = other(to_move);
  }
  return line;
}

std::vector<int> GameSolver::per_vertex_values() {
  std::vector<int> vals;
  vals.reserve(g_.order());
  for (int v = 0; v < g_.order(); ++v) {
    vals.push_back(1 + value(VertexSet::single(v), Player::staller));
  }
  return vals;
}

int solve(const Graph& g, GameVariant variant, Player starter,
          SolveOptions opts) {
  GameSolver solver(g, variant, opts);
  return solver.game_value(starter);
}

namespace {

int naive_play(const std::vector<std::vector<char>>& adj, bool total,
               std::vector<char>& played, int count, bool dominator_to_move) {
  int n = static_cast<int>(adj.size());
  std::vector<char> dominated(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!played[v]) continue;
    if (!total) dominated[v] = 1;
    for (int u = 0; u < n; ++u) {
      if (adj[v][u]) dominated[u] = 1;
    }
  }
  int best = -1;
  for (int v = 0; v < n; ++v) {
    if (played[v]) continue;
    if (count > 0) {
      bool touches = false;
      for (int u = 0; u < n && !touches; ++u) {
        if (played[u] && adj[u][v]) touches = true;
      }
      if (!touches) continue;
    }
    bool gains = false;
    for (int u = 0; u < n && !gains; ++u) {
      bool covers = adj[v][u] || (!total && u == v);
      if (covers && !dominated[u]) gains = true;
    }
    if (!gains) continue;
    played[v] = 1;
    int len = 1 + naive_play(adj, total, played, count + 1, !dominator_to_move);
    played[v] = 0;
    if (best < 0) {
      best = len;
    } else if (dominator_to_move) {
      best = std::min(best, len);
    } else {
      best = std::max(best, len);
    }
  }
  return best < 0 ? 0 : best;
}

}  // namespace

int naive_solve(const Graph& g, GameVariant variant, Player starter) {
  int n = g.order();
  if (n > 10) {
    throw std::invalid_argument("naive solver is capped at 10 vertices");
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) adj[v][u] = g.adjacent(v, u) ? 1 : 0;
  }
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (!seen[v]) continue;
      for (int u = 0; u < n; ++u) {
        if (adj[v][u] && !seen[u]) {
          seen[u] = 1;
          grew = true;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw std::invalid_argument("game solving needs a connected graph");
    }
  }
  if (variant == GameVariant::total_connected && n < 2) {
    throw std::invalid_argument(
        "the total variant needs at least two vertices");
  }
  std::vector<char> played(n, 0);
  return naive_play(adj, variant == GameVariant::total_connected, played, 0,
                    starter == Player::dominator);
}

std::vector<int> per_vertex_values(const Graph& g, GameVariant variant) {
  GameSolver solver(g, variant);
  return solver.per_vertex_values();
}

GameReport game_report(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw std::invalid_argument(
        "game reports need a connected graph on at least two vertices");
  }
  GameReport rep;
  GameSolver cg(g, GameVariant::connected);
  GameSolver tcg(g, GameVariant::total_connected);
  rep.gamma_cg = cg.game_value(Player::dominator);
  rep.gamma_cg_s = cg.game_value(Player::staller);
  rep.gamma_tcg = tcg.game_value(Player::dominator);
  rep.gamma_tcg_s = tcg.game_value(Player::staller);
  rep.c_of_v = cg.per_vertex_values();
  rep.t_of_v = tcg.per_vertex_values();
  return rep;
}

}  // namespace domgame
