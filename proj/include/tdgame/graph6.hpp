#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tdgame/errors.hpp"
#include "tdgame/graph.hpp"

namespace tdgame {

// graph6 codec, short form only (single-byte order encoding, n <= 62).
// Upper-triangle bits run column-major -- pair (u, v), u < v, sits at bit
// v(v-1)/2 + u -- packed six per byte, most significant bit first, each byte
// offset by 63. Padding bits must be zero.

inline constexpr int kGraph6MaxOrder = 62;

inline Graph parse_g6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty string");
  int c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126)
    throw ParseError("graph6: multi-byte order encoding (n > 62) not supported");
  if (c0 < 63 || c0 > 63 + kGraph6MaxOrder)
    throw ParseError("graph6: invalid order byte");
  int n = c0 - 63;
  if (n == 0) throw ParseError("graph6: order 0 not representable here");

  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw ParseError(static_cast<int>(text.size()) < 1 + nbytes
                         ? "graph6: string too short for order"
                         : "graph6: trailing garbage");

  std::vector<bool> bits(static_cast<std::size_t>(nbytes) * 6);
  for (int i = 0; i < nbytes; ++i) {
    int c = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + i)]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
    for (int k = 0; k < 6; ++k)
      bits[static_cast<std::size_t>(i * 6 + k)] = ((c - 63) >> (5 - k)) & 1;
  }
  for (int i = nbits; i < nbytes * 6; ++i)
    if (bits[static_cast<std::size_t>(i)])
      throw ParseError("graph6: nonzero padding bits");

  Graph g(n);
  int bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (bits[static_cast<std::size_t>(bit++)]) g.add_edge(u, v);
  return g;
}

inline std::string emit_g6(const Graph& g) {
  int n = g.order();
  if (n > kGraph6MaxOrder)
    throw Error("graph6: order " + std::to_string(n) + " exceeds 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

}  // namespace tdgame
