#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tdgame/errors.hpp"
#include "tdgame/vertex_set.hpp"

namespace tdgame {

// Finite simple undirected graph with fixed vertex labels 0..n-1.
// Adjacency is kept symmetric and irreflexive by construction; the word-sized
// VertexSet rows cap the order at 64, which covers everything this library
// works on (graph6 I/O is further limited to n <= 62).
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 1 || n > VertexSet::kMaxVertices)
      throw Error("graph order must be in 1.." +
                  std::to_string(VertexSet::kMaxVertices) + ", got " +
                  std::to_string(n));
  }

  int order() const { return n_; }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u)].contains(v);
  }
  VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(Vertex v) const {
    return neighbors(v) | VertexSet::single(v);
  }
  int degree(Vertex v) const { return neighbors(v).count(); }

  int min_degree() const {
    int d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int edge_count() const {
    int twice = 0;
    for (Vertex v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw Error("vertex index " + std::to_string(v) + " out of range 0.." +
                  std::to_string(n_ - 1));
  }

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Generators. Vertex naming conventions:
//   cycle  v_1 v_2 ... v_n v_1      -> v_i at index i-1
//   path   positions 1..n in order  -> position j at index j-1
//          (so x_j of the bipartite naming sits at index 2(j-1), y_j at 2j-1)
//   one_plus_clique                 -> isolated vertex at index 0, clique on 1..k
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
  if (n < 1) throw Error("path needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  if (n < 1) throw Error("complete graph needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph one_plus_clique_graph(int k) {
  if (k < 2) throw Error("one_plus_clique needs clique size k >= 2");
  Graph g(k + 1);
  for (Vertex u = 1; u <= k; ++u)
    for (Vertex v = u + 1; v <= k; ++v) g.add_edge(u, v);
  return g;
}

enum class GraphFamily { path, cycle, complete, one_plus_clique };

inline Graph generate(GraphFamily family, int n_or_k) {
  switch (family) {
    case GraphFamily::path: return path_graph(n_or_k);
    case GraphFamily::cycle: return cycle_graph(n_or_k);
    case GraphFamily::complete: return complete_graph(n_or_k);
    case GraphFamily::one_plus_clique: return one_plus_clique_graph(n_or_k);
  }
  throw Error("unknown graph family");
}

// ---------------------------------------------------------------------------
// Composition and decomposition.
// ---------------------------------------------------------------------------

// Disjoint union; g2 indices are shifted by |g1|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

// Join: disjoint union plus every cross edge.
inline Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.order();
  Graph g = disjoint_union(g1, g2);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = n1; v < g.order(); ++v) g.add_edge(u, v);
  return g;
}

inline Graph complement(const Graph& g) {
  int n = g.order();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

// Subgraph induced by `keep`; kept vertices are relabeled 0.. in increasing
// order of their original index.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<Vertex> map(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (Vertex v : keep) map[static_cast<std::size_t>(v)] = k++;
  Graph sub(k);
  for (Vertex u : keep)
    for (Vertex v : g.neighbors(u) & keep)
      if (u < v)
        sub.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
  return sub;
}

// Components in order of their lowest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

// A graph is a join iff its complement is disconnected. Returns the factor
// pair (complement component containing vertex 0, everything else), or absent
// when no join factorization exists.
inline std::optional<std::pair<Graph, Graph>> join_factors(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  auto comps = connected_components(complement(g));
  if (comps.size() < 2) return std::nullopt;
  VertexSet v1 = comps.front();
  VertexSet v2 = v1.complement_in(g.order());
  return std::make_pair(induced_subgraph(g, v1), induced_subgraph(g, v2));
}

// ---------------------------------------------------------------------------
// Structural predicates.
// ---------------------------------------------------------------------------

// All unordered pairs {u, v}, u < v, with N(u) = N(v).
inline std::vector<std::pair<Vertex, Vertex>> open_twins(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
  return out;
}

inline VertexSet dominating_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.insert(v);
  return out;
}

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.insert(v);
  return out;
}

inline bool is_complete(const Graph& g) {
  return g.min_degree() == g.order() - 1;
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n", then one "u v" pair per line.
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw ParseError("edge list: missing vertex count");
  if (n < 1 || n > VertexSet::kMaxVertices)
    throw ParseError("edge list: vertex count " + std::to_string(n) +
                     " out of range");
  Graph g(n);
  Vertex u, v;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
    try {
      g.add_edge(u, v);
    } catch (const Error& e) {
      throw ParseError(std::string("edge list: ") + e.what());
    }
  }
  if (!in.eof()) throw ParseError("edge list: trailing garbage");
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace tdgame
