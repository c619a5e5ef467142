#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdgame/errors.hpp"
#include "tdgame/graph.hpp"
#include "tdgame/vertex_set.hpp"

namespace tdgame {

enum class Player { Dominator, Staller };

inline Player opponent(Player p) {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

inline char player_letter(Player p) {
  return p == Player::Dominator ? 'D' : 'S';
}

// Number of moves remaining under optimal play.
using GameValue = int;

// A position of the total domination game. The set of vertices already
// *played* is irrelevant: a repeated vertex never totally dominates anything
// new, so (dominated, to_move) fully determines the continuation.
struct GameState {
  const Graph* graph;
  VertexSet dominated;
  Player to_move;
};

inline GameState initial_state(const Graph& g, VertexSet given = {},
                               Player first = Player::Dominator) {
  if (!given.is_subset_of(VertexSet::universe(g.order())))
    throw Error("given set contains vertices outside the graph");
  return GameState{&g, given, first};
}

inline bool is_terminal(const GameState& s) {
  return s.dominated == VertexSet::universe(s.graph->order());
}

// v is legal iff it totally dominates at least one new vertex, i.e. some
// neighbor of v is not yet dominated. Independent of whose turn it is.
inline VertexSet legal_moves(const GameState& s) {
  VertexSet out;
  for (Vertex v = 0; v < s.graph->order(); ++v)
    if (!(s.graph->neighbors(v) - s.dominated).empty()) out.insert(v);
  return out;
}

inline GameState apply_move(const GameState& s, Vertex v) {
  s.graph->check_vertex(v);
  if ((s.graph->neighbors(v) - s.dominated).empty())
    throw IllegalMoveError("vertex " + std::to_string(v) +
                           " dominates nothing new");
  return GameState{s.graph, s.dominated | s.graph->neighbors(v),
                   opponent(s.to_move)};
}

// A vertex of degree zero can never be totally dominated, so the game on such
// a graph never finishes. Gate every solve on this.
inline void require_total_dominatable(const Graph& g) {
  VertexSet iso = isolated_vertices(g);
  if (!iso.empty()) {
    std::string msg = "unwinnable: isolated vertices";
    for (Vertex v : iso) msg += ' ' + std::to_string(v);
    throw UnwinnableError(msg, iso.bits());
  }
}

// Exact minimax solver for one graph, memoized on (dominated, to_move). The
// memo is shared across every query on the same instance, so a criticality
// spectrum costs little more than the base solve. Single-writer; solve
// different graphs on different solvers for parallel drivers.
class GameSolver {
 public:
  explicit GameSolver(Graph g) : g_(std::move(g)), n_(g_.order()) {
    require_total_dominatable(g_);
    full_ = VertexSet::universe(n_).bits();
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g_.neighbors(v).bits();
    use_flat_ = n_ <= kFlatMemoMaxOrder;
    if (use_flat_) flat_.assign(std::size_t{2} << n_, kUnknown);
  }

  const Graph& graph() const { return g_; }

  GameValue value(VertexSet dominated, Player to_move) {
    if (!dominated.is_subset_of(VertexSet::universe(n_)))
      throw Error("dominated set contains vertices outside the graph");
    GameValue v = solve(dominated.bits(), to_move == Player::Staller ? 1 : 0);
    assert(v <= n_ - dominated.count());
    return v;
  }

  GameValue gamma_tg(VertexSet given = {}) {
    return value(given, Player::Dominator);
  }
  GameValue gamma_tg_staller(VertexSet given = {}) {
    return value(given, Player::Staller);
  }

  // All legal moves that achieve the minimax value from this position.
  VertexSet optimal_moves(VertexSet dominated, Player to_move) {
    if (dominated.bits() == full_)
      throw TerminalStateError("no moves from a finished game");
    GameValue target = value(dominated, to_move);
    VertexSet out;
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t nb = adj_[static_cast<std::size_t>(v)];
      if ((nb | dominated.bits()) == dominated.bits()) continue;
      if (1 + solve(dominated.bits() | nb, to_move == Player::Staller ? 0 : 1) ==
          target)
        out.insert(v);
    }
    return out;
  }

 private:
  static constexpr int kFlatMemoMaxOrder = 22;
  static constexpr std::int8_t kUnknown = -1;

  GameValue solve(std::uint64_t mask, int who) {
    if (mask == full_) return 0;
    if (use_flat_) {
      // safe to keep the reference: recursion never resizes the flat table
      std::int8_t& slot = flat_[(mask << 1) | static_cast<std::uint64_t>(who)];
      if (slot != kUnknown) return slot;
      int best = search(mask, who);
      slot = static_cast<std::int8_t>(best);
      return best;
    }
    if (auto it = map_[who].find(mask); it != map_[who].end()) return it->second;
    int best = search(mask, who);
    map_[who].emplace(mask, static_cast<std::int8_t>(best));
    return best;
  }

  int search(std::uint64_t mask, int who) {
    int best = who == 0 ? 127 : -1;  // Dominator minimizes, Staller maximizes
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t nb = adj_[static_cast<std::size_t>(v)];
      if ((nb | mask) == mask) continue;
      int r = 1 + solve(mask | nb, who ^ 1);
      if (who == 0 ? r < best : r > best) best = r;
    }
    assert(best >= 0 && best <= n_);
    return best;
  }

  Graph g_;
  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> adj_;
  bool use_flat_;
  std::vector<std::int8_t> flat_;
  std::unordered_map<std::uint64_t, std::int8_t> map_[2];
};

// One-shot conveniences; batch drivers should keep a GameSolver per graph.

inline GameValue game_value(const GameState& s) {
  GameSolver solver(*s.graph);
  return solver.value(s.dominated, s.to_move);
}

inline GameValue gamma_tg(const Graph& g, VertexSet given = {}) {
  GameSolver solver(g);
  return solver.gamma_tg(given);
}

inline GameValue gamma_tg_staller(const Graph& g, VertexSet given = {}) {
  GameSolver solver(g);
  return solver.gamma_tg_staller(given);
}

inline VertexSet optimal_moves(const GameState& s) {
  GameSolver solver(*s.graph);
  return solver.optimal_moves(s.dominated, s.to_move);
}

}  // namespace tdgame
