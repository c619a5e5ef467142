#pragma once

#include <optional>
#include <vector>

#include "tdgame/game.hpp"
#include "tdgame/graph.hpp"

namespace tdgame {

// gamma_tg(G) together with the spectrum gamma_tg(G|v) over all v. A graph is
// critical when every spectrum entry drops below the base value; class_k is
// the base value of a critical graph. Spectra are stored raw, no assumption
// on how far an entry can drop.
struct CriticalityProfile {
  GameValue base_value;
  std::vector<GameValue> spectrum;
  bool is_critical;
  std::optional<int> class_k;
};

inline CriticalityProfile profile(GameSolver& solver) {
  const Graph& g = solver.graph();
  CriticalityProfile p;
  p.base_value = solver.gamma_tg();
  p.spectrum.reserve(static_cast<std::size_t>(g.order()));
  p.is_critical = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    GameValue gv = solver.gamma_tg(VertexSet::single(v));
    p.spectrum.push_back(gv);
    if (gv >= p.base_value) p.is_critical = false;
  }
  p.class_k = p.is_critical ? std::optional<int>(p.base_value) : std::nullopt;
  return p;
}

inline CriticalityProfile profile(const Graph& g) {
  GameSolver solver(g);
  return profile(solver);
}

struct ClosedForm {
  GameValue value;
  bool critical;
};

// gamma_tg(C_n) = floor((2n+1)/3), minus one exactly when n = 4 (mod 6);
// critical iff n (mod 6) in {0, 1, 3}.
inline ClosedForm closed_form_cycle(int n) {
  if (n < 3) throw Error("cycle closed form needs n >= 3");
  GameValue v = (2 * n + 1) / 3;
  if (n % 6 == 4) v -= 1;
  int r = n % 6;
  return {v, r == 0 || r == 1 || r == 3};
}

// gamma_tg(P_n) = floor(2n/3) when n = 5 (mod 6), else ceil(2n/3);
// critical iff n (mod 6) in {2, 4}.
inline ClosedForm closed_form_path(int n) {
  if (n < 2) throw Error("path closed form needs n >= 2");
  GameValue v = n % 6 == 5 ? (2 * n) / 3 : (2 * n + 2) / 3;
  int r = n % 6;
  return {v, r == 2 || r == 4};
}

// 2-critical iff complete (n >= 2; K_1 has no playable game).
inline bool char_2critical(const Graph& g) {
  return g.order() >= 2 && is_complete(g);
}

// 3-critical iff (a) open twin-free, (b) no dominating vertex, and (c) every
// vertex of degree <= n-3 has a non-neighbor of degree n-2. Hypothesis: no
// isolated vertex.
inline bool char_3critical(const Graph& g) {
  require_total_dominatable(g);
  int n = g.order();
  if (!open_twins(g).empty()) return false;
  if (!dominating_vertices(g).empty()) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > n - 3) continue;
    bool found = false;
    for (Vertex u : g.closed_neighborhood(v).complement_in(n)) {
      if (g.degree(u) == n - 2) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Structural recognition of K_1 u K_k, k >= 2: exactly one degree-0 vertex
// and the remaining >= 2 vertices pairwise adjacent.
inline bool is_one_plus_clique(const Graph& g) {
  VertexSet iso = isolated_vertices(g);
  if (iso.count() != 1) return false;
  VertexSet clique = iso.complement_in(g.order());
  if (clique.count() < 2) return false;
  for (Vertex v : clique)
    if (!(clique - g.closed_neighborhood(v)).empty()) return false;
  return true;
}

// The join g1 + g2 is 3-critical iff each factor is itself 3-critical or is
// K_1 u K_k for some k >= 2.
inline bool char_join_3critical(const Graph& g1, const Graph& g2) {
  auto factor_ok = [](const Graph& g) {
    if (is_one_plus_clique(g)) return true;
    if (!isolated_vertices(g).empty()) return false;
    return char_3critical(g);
  };
  return factor_ok(g1) && factor_ok(g2);
}

// A vertex v of the non-critical path P_n with gamma_tg(P_n|v) >= gamma_tg(P_n),
// using the path labeling v_i -> index i-1.
inline Vertex noncritical_witness_path(int n) {
  if (n < 3) throw Error("path witness needs n >= 3");
  int r = n % 6;
  if (r == 2 || r == 4)
    throw Error("P_" + std::to_string(n) + " is critical; no witness exists");
  if (n == 3) return 0;               // v_1
  if (n == 5 || n == 6) return 2;     // v_3
  if (r == 0 || r == 1) return 3;     // v_4
  return 0;                           // r in {3, 5}: v_1
}

}  // namespace tdgame
