#pragma once

#include <stdexcept>
#include <string>

namespace tdgame {

// Base class for everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph6 / edge-list / generator-spec input.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// The game cannot finish: the graph has vertices of degree zero.
struct UnwinnableError : Error {
  explicit UnwinnableError(const std::string& what, std::uint64_t isolated_bits)
      : Error(what), isolated_bits(isolated_bits) {}
  std::uint64_t isolated_bits;
};

struct IllegalMoveError : Error {
  explicit IllegalMoveError(const std::string& what) : Error(what) {}
};

struct TerminalStateError : Error {
  explicit TerminalStateError(const std::string& what) : Error(what) {}
};

// A strategy op was asked to run on a graph that is not a generated path or
// cycle with the standard consecutive labeling.
struct LayoutUnknownError : Error {
  explicit LayoutUnknownError(const std::string& what) : Error(what) {}
};

struct NotStallersTurnError : Error {
  explicit NotStallersTurnError(const std::string& what) : Error(what) {}
};

// A scripted strategy produced an illegal move or violated its own invariant.
struct ScriptError : Error {
  explicit ScriptError(const std::string& what) : Error(what) {}
};

}  // namespace tdgame
