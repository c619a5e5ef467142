#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tdgame/game.hpp"
#include "tdgame/graph.hpp"

namespace testutil {

// Definitional minimax, deliberately independent of GameSolver: no
// memoization, no bit tricks beyond the shared VertexSet. Usable at n <= ~7.
inline int oracle_game_value(const tdgame::Graph& g, tdgame::VertexSet dominated,
                             tdgame::Player to_move) {
  using namespace tdgame;
  if (dominated == VertexSet::universe(g.order())) return 0;
  int best = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.neighbors(v) - dominated).empty()) continue;
    int r = 1 + oracle_game_value(g, dominated | g.neighbors(v), opponent(to_move));
    if (best < 0)
      best = r;
    else if (to_move == Player::Dominator)
      best = std::min(best, r);
    else
      best = std::max(best, r);
  }
  return best;
}

// G(n, p) conditioned on min degree >= 1 (resamples until solvable).
inline tdgame::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    tdgame::Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.min_degree() >= 1) return g;
  }
}

inline tdgame::Graph permute_graph(const tdgame::Graph& g,
                                   const std::vector<int>& perm) {
  tdgame::Graph out(g.order());
  for (auto [u, v] : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace testutil
