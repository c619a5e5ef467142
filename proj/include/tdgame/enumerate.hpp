#pragma once

#include <cstdint>
#include <optional>

#include "tdgame/errors.hpp"
#include "tdgame/graph.hpp"

namespace tdgame {

// Labeled (not isomorphism-reduced) enumeration of all simple graphs on n
// vertices. Each graph corresponds to one edge mask; the slot order matches
// the graph6 bit order, so mask k and graph6 body bits agree.
//
// The cap keeps full scans tolerable: 2^28 masks at n = 8 is the practical
// ceiling for exhaustive verification runs.

inline constexpr int kEnumerationCap = 8;

inline int edge_slot_count(int n) { return n * (n - 1) / 2; }

inline std::uint64_t edge_mask_count(int n) {
  return 1ULL << edge_slot_count(n);
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

struct EnumerationOptions {
  int min_degree = 0;
  bool connected_only = false;
};

inline bool passes_filters(const Graph& g, const EnumerationOptions& opts) {
  if (opts.min_degree > 0 && g.min_degree() < opts.min_degree) return false;
  if (opts.connected_only && !is_connected(g)) return false;
  return true;
}

// Single-consumer stream over all labeled graphs on n vertices that pass the
// filters. Parallel drivers should partition the mask space with
// graph_from_edge_mask instead of sharing one stream.
class LabeledGraphEnumerator {
 public:
  LabeledGraphEnumerator(int n, EnumerationOptions opts = {})
      : n_(n), opts_(opts), end_(edge_mask_count(n)) {
    if (n < 1) throw Error("enumeration needs n >= 1");
    if (n > kEnumerationCap)
      throw Error("enumeration order " + std::to_string(n) + " over cap " +
                  std::to_string(kEnumerationCap));
  }

  std::optional<Graph> next() {
    while (next_mask_ < end_) {
      Graph g = graph_from_edge_mask(n_, next_mask_++);
      if (passes_filters(g, opts_)) return g;
    }
    return std::nullopt;
  }

 private:
  int n_;
  EnumerationOptions opts_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t end_;
};

template <typename Fn>
void for_each_labeled_graph(int n, EnumerationOptions opts, Fn&& fn) {
  LabeledGraphEnumerator en(n, opts);
  while (auto g = en.next()) fn(*g);
}

}  // namespace tdgame
