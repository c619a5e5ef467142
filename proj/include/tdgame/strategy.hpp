#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdgame/errors.hpp"
#include "tdgame/game.hpp"
#include "tdgame/graph.hpp"

namespace tdgame {

// ---------------------------------------------------------------------------
// Path/cycle layout. Strategy ops only run on graphs with the standard
// consecutive labeling produced by the generators; anything else is rejected
// rather than guessed at.
// ---------------------------------------------------------------------------

enum class LineLayout { path, cycle };

inline std::optional<LineLayout> detect_layout(const Graph& g) {
  int n = g.order();
  for (Vertex v = 0; v + 1 < n; ++v)
    if (!g.has_edge(v, v + 1)) return std::nullopt;
  if (g.edge_count() == n - 1) return LineLayout::path;
  if (n >= 3 && g.edge_count() == n && g.has_edge(n - 1, 0))
    return LineLayout::cycle;
  return std::nullopt;
}

inline LineLayout require_layout(const Graph& g) {
  auto layout = detect_layout(g);
  if (!layout)
    throw LayoutUnknownError("graph is not a standard-labeled path or cycle");
  return *layout;
}

// ---------------------------------------------------------------------------
// Runs and anti-runs: maximal blocks of >= 2 consecutive vertices that are all
// dominated (run) or all undominated (anti-run). On a cycle a segment may
// wrap; if every vertex has the same status the whole cycle is one block.
// ---------------------------------------------------------------------------

enum class SegmentKind { run, antirun };

struct Segment {
  SegmentKind kind;
  Vertex start;
  int length;
};

inline std::vector<Segment> segments(const GameState& s) {
  LineLayout layout = require_layout(*s.graph);
  int n = s.graph->order();
  auto dominated = [&](Vertex v) { return s.dominated.contains(v); };
  std::vector<Segment> out;
  auto emit = [&](bool dom, int start, int len) {
    if (len >= 2)
      out.push_back({dom ? SegmentKind::run : SegmentKind::antirun, start, len});
  };
  if (layout == LineLayout::path) {
    int i = 0;
    while (i < n) {
      int j = i;
      while (j < n && dominated(j) == dominated(i)) ++j;
      emit(dominated(i), i, j - i);
      i = j;
    }
    return out;
  }
  int boundary = -1;
  for (int i = 0; i < n; ++i)
    if (dominated(i) != dominated((i + n - 1) % n)) {
      boundary = i;
      break;
    }
  if (boundary < 0) {
    emit(dominated(0), 0, n);
    return out;
  }
  int covered = 0, i = boundary;
  while (covered < n) {
    int len = 1;
    while (len < n && dominated((i + len) % n) == dominated(i)) ++len;
    emit(dominated(i), i, len);
    covered += len;
    i = (i + len) % n;
  }
  std::sort(out.begin(), out.end(),
            [](const Segment& a, const Segment& b) { return a.start < b.start; });
  return out;
}

// Staller's segment strategy: play a run or anti-run extremity that totally
// dominates exactly one new vertex. On a path the two end vertices also count
// as extremities of their (possibly length-1) blocks: a dominated path end
// with an undominated neighbor dominates exactly that neighbor, which is what
// keeps the strategy playable on odd paths with the end vertex given. Returns
// nullopt (Stalled) when no such move exists. Tie-break: runs before
// anti-runs, then lowest vertex.
inline std::optional<Vertex> staller_extremity_move(const GameState& s) {
  if (s.to_move != Player::Staller)
    throw NotStallersTurnError("extremity strategy is Staller's");
  LineLayout layout = require_layout(*s.graph);
  int n = s.graph->order();
  std::optional<Vertex> best_run, best_anti;
  auto consider = [&](std::optional<Vertex>& best, Vertex v) {
    if ((s.graph->neighbors(v) - s.dominated).count() != 1) return;
    if (!best || v < *best) best = v;
  };
  for (const Segment& seg : segments(s)) {
    if (seg.length >= n && layout == LineLayout::cycle) continue;  // no extremity
    Vertex lo = seg.start;
    Vertex hi = layout == LineLayout::cycle ? (seg.start + seg.length - 1) % n
                                            : seg.start + seg.length - 1;
    auto& best = seg.kind == SegmentKind::run ? best_run : best_anti;
    consider(best, lo);
    consider(best, hi);
  }
  if (layout == LineLayout::path && n >= 2) {
    for (Vertex e : {0, n - 1})
      consider(s.dominated.contains(e) ? best_run : best_anti, e);
  }
  if (best_run) return best_run;
  return best_anti;
}

// ---------------------------------------------------------------------------
// Scripts for the worst-case simulator. A script is a copyable value:
//   choose(state)          -> the scripted side's move, state.to_move is ours
//   observe(before, move)  -> called for every move of either player
//   fingerprint()          -> hash of any internal state that can influence
//                             future choices (memo key component)
// ---------------------------------------------------------------------------

// The not-playable set U: vertices already played, or unplayed vertices all of
// whose neighbors are already totally dominated.
inline VertexSet unplayable_vertices(const Graph& g, VertexSet played,
                                     VertexSet dominated) {
  VertexSet out = played;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).is_subset_of(dominated)) out.insert(v);
  return out;
}

struct CycleDominatorState {
  VertexSet played;
  VertexSet unplayable;
};

// Dominator's cycle strategy on C_n|v (n >= 6, n mod 6 in {0,1,3}), indices
// taken relative to the given vertex as v_1: open with v_4; whenever Staller
// plays v_i newly dominating v_{i+1}, answer v_{i+4} if that vertex is
// unplayed and legal, else mirror to v_{i-4}, else any legal move (lowest
// index). Verifies the U-set accounting as it plays: the opening puts v_2 and
// v_4 into U, and every Staller move plus reply grows U by at least three.
class CycleDominatorScript {
 public:
  CycleDominatorScript(const Graph& g, Vertex given) : g_(&g), n_(g.order()), given_(given) {
    if (require_layout(g) != LineLayout::cycle)
      throw LayoutUnknownError("cycle strategy needs a cycle");
    int r = n_ % 6;
    if (n_ < 6 || (r != 0 && r != 1 && r != 3))
      throw Error("cycle strategy needs n >= 6 with n mod 6 in {0,1,3}");
    g.check_vertex(given);
  }

  Vertex choose(const GameState& s) {
    Vertex mv = pick(s);
    VertexSet u = unplayable_vertices(*g_, aux_.played | VertexSet::single(mv),
                                      s.dominated | g_->neighbors(mv));
    if (!opened_) {
      if (!u.contains(at(1)) || !u.contains(at(3)))
        throw ScriptError("opening did not add v_2 and v_4 to U");
    } else if (u.count() - u_after_own_ < 3) {
      throw ScriptError("Staller move + reply grew U by less than three");
    }
    u_after_own_ = u.count();
    opened_ = true;
    return mv;
  }

  void observe(const GameState& before, Vertex v) {
    if (before.to_move == Player::Staller) {
      last_staller_ = v;
      last_newly_ = before.graph->neighbors(v) - before.dominated;
    }
    aux_.played.insert(v);
    aux_.unplayable = unplayable_vertices(
        *g_, aux_.played, before.dominated | before.graph->neighbors(v));
  }

  std::uint64_t fingerprint() const { return aux_.played.bits(); }
  const CycleDominatorState& aux() const { return aux_; }

 private:
  // cycle position relative to the given vertex as v_1: at(0) = given
  Vertex at(int offset) const {
    return static_cast<Vertex>(((given_ + offset) % n_ + n_) % n_);
  }
  Vertex rel(Vertex base, int offset) const {
    return static_cast<Vertex>(((base + offset) % n_ + n_) % n_);
  }

  Vertex pick(const GameState& s) const {
    if (!opened_) return at(3);  // v_4
    Vertex m = last_staller_;
    std::vector<Vertex> candidates;
    if (last_newly_.contains(rel(m, 1))) {
      candidates.push_back(rel(m, 4));
      if (last_newly_.contains(rel(m, -1))) candidates.push_back(rel(m, -4));
    } else {
      candidates.push_back(rel(m, -4));
    }
    for (Vertex c : candidates)
      if (!aux_.played.contains(c) && !(g_->neighbors(c) - s.dominated).empty())
        return c;
    return legal_moves(s).lowest();
  }

  const Graph* g_;
  int n_;
  Vertex given_;
  CycleDominatorState aux_;
  bool opened_ = false;
  Vertex last_staller_ = -1;
  VertexSet last_newly_;
  int u_after_own_ = 0;
};

// Staller's extremity strategy made total: fall back to the lowest legal move
// when Stalled. A stall is only ever expected on an even cycle whose dominated
// set is one partite set; anything else trips a ScriptError, as does an
// extremity move that dominates more than one new vertex.
class StallerExtremityScript {
 public:
  explicit StallerExtremityScript(const Graph& g, bool forbid_stall = false)
      : layout_(require_layout(g)), forbid_stall_(forbid_stall) {}

  Vertex choose(const GameState& s) {
    auto mv = staller_extremity_move(s);
    if (mv) {
      if ((s.graph->neighbors(*mv) - s.dominated).count() != 1)
        throw ScriptError("extremity move dominates more than one new vertex");
      return *mv;
    }
    if (forbid_stall_) throw ScriptError("script stalled unexpectedly");
    if (layout_ == LineLayout::cycle) {
      int n = s.graph->order();
      VertexSet evens, odds;
      for (Vertex v = 0; v < n; v += 2) evens.insert(v);
      odds = evens.complement_in(n);
      if (n % 2 != 0 || (s.dominated != evens && s.dominated != odds))
        throw ScriptError("stall outside the alternating partite-set case");
    }
    return legal_moves(s).lowest();
  }

  void observe(const GameState&, Vertex) {}
  std::uint64_t fingerprint() const { return 0; }

 private:
  LineLayout layout_;
  bool forbid_stall_;
};

// Plays a minimax-optimal move (lowest index) for whichever side it is asked
// to move; handy as a reference script.
class OptimalScript {
 public:
  explicit OptimalScript(const Graph& g) : solver_(std::make_shared<GameSolver>(g)) {}
  Vertex choose(const GameState& s) {
    return solver_->optimal_moves(s.dominated, s.to_move).lowest();
  }
  void observe(const GameState&, Vertex) {}
  std::uint64_t fingerprint() const { return 0; }

 private:
  std::shared_ptr<GameSolver> solver_;
};

// ---------------------------------------------------------------------------
// Worst-case certification: exact game length when one side follows a script
// and the opponent ranges over all legal replies. With Dominator scripted the
// result is max over Staller play (an upper-bound certificate); with Staller
// scripted it is min over Dominator play (a lower-bound certificate).
// ---------------------------------------------------------------------------

template <class Script>
GameValue simulate_worst_case(const Graph& g, VertexSet given, Script script,
                              Player scripted, Player first = Player::Dominator) {
  require_total_dominatable(g);
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      std::uint64_t h = k.first * 0x9e3779b97f4a7c15ULL + k.second;
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, GameValue, KeyHash>
      memo;
  const bool opponent_maximizes = scripted == Player::Dominator;

  auto rec = [&](auto&& self, GameState s, Script sc) -> GameValue {
    if (is_terminal(s)) return 0;
    if (s.to_move == scripted) {
      Vertex mv = sc.choose(s);
      if (mv < 0 || mv >= g.order() ||
          (g.neighbors(mv) - s.dominated).empty()) {
        std::ostringstream os;
        os << "script chose illegal vertex " << mv << " with dominated bits 0x"
           << std::hex << s.dominated.bits();
        throw ScriptError(os.str());
      }
      sc.observe(s, mv);
      return 1 + self(self, apply_move(s, mv), std::move(sc));
    }
    auto key = std::make_pair(s.dominated.bits(), sc.fingerprint());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    GameValue best = -1;
    for (Vertex v : legal_moves(s)) {
      Script branch = sc;
      branch.observe(s, v);
      GameValue r = 1 + self(self, apply_move(s, v), std::move(branch));
      if (best < 0 || (opponent_maximizes ? r > best : r < best)) best = r;
    }
    memo.emplace(key, best);
    return best;
  };
  return rec(rec, initial_state(g, given, first), std::move(script));
}

// ---------------------------------------------------------------------------
// Block partition of a path's partite sets and the potential
// f_n(m) = 2m - 1 + 2 t3 + ceil(3 t2 / 2) + t1, evaluated right after
// Dominator's m-th move. Path naming: x_j at index 2(j-1), y_j at 2j-1.
// ---------------------------------------------------------------------------

inline Vertex path_x(int j) { return 2 * (j - 1); }
inline Vertex path_y(int j) { return 2 * j - 1; }

struct PathBlocks {
  std::vector<VertexSet> x_blocks, y_blocks;
};

inline PathBlocks path_blocks(int n) {
  if (n < 2) throw Error("path blocks need n >= 2");
  auto build = [](int count, auto idx_of) {
    int blocks = (count + 2) / 3;
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(blocks));
    for (int i = 1; i <= blocks; ++i) {
      int hi = i < blocks ? 3 * i : count;  // last block keeps the remainder
      VertexSet s;
      for (int j = 3 * i - 2; j <= hi; ++j) s.insert(idx_of(j));
      out.push_back(s);
    }
    return out;
  };
  PathBlocks b;
  b.x_blocks = build((n + 1) / 2, path_x);
  b.y_blocks = build(n / 2, path_y);
  return b;
}

struct BlockCounts {
  int t1 = 0, t2 = 0, t3 = 0;
};

// Singles/doubles/triples: blocks with exactly 1/2/3 vertices not yet totally
// dominated. Fully dominated blocks count nowhere.
inline BlockCounts count_tdt(const PathBlocks& blocks, VertexSet dominated) {
  BlockCounts c;
  auto tally = [&](const std::vector<VertexSet>& side) {
    for (VertexSet blk : side) {
      switch ((blk - dominated).count()) {
        case 1: ++c.t1; break;
        case 2: ++c.t2; break;
        case 3: ++c.t3; break;
        default: break;
      }
    }
  };
  tally(blocks.x_blocks);
  tally(blocks.y_blocks);
  return c;
}

struct PotentialReport {
  int moves_made;
  int t1, t2, t3;
  int f_value;
};

inline PotentialReport potential_f(int n, int m, VertexSet dominated) {
  BlockCounts c = count_tdt(path_blocks(n), dominated);
  int f = 2 * m - 1 + 2 * c.t3 + (3 * c.t2 + 1) / 2 + c.t1;
  return {m, c.t1, c.t2, c.t3, f};
}

// Dominator's prescribed first move on P_n|v for n = 2, 4 (mod 6), n >= 8
// (n in {2, 4} are solved directly, no table needed). Explicit boundary cases
// take precedence over the generic residue families.
inline Vertex dominator_first_move_path(int n, Vertex v) {
  int r = n % 6;
  if (r != 2 && r != 4)
    throw Error("first-move table applies to n = 2,4 (mod 6) only");
  if (n < 8) throw Error("first-move table needs n >= 8");
  if (v < 0 || v >= n) throw Error("vertex out of range");
  int k = (n - r) / 6;
  int pos = v + 1;
  bool x_side = pos % 2 == 1;
  int j = x_side ? (pos + 1) / 2 : pos / 2;

  if (r == 2) {
    if (x_side) {
      if (j == 3 * k + 1) return path_y(3 * k - 1);
      if (j == 3 * k - 1) return path_y(3 * k);
      if (j % 3 == 0) return path_y(j - 2);
      if (j % 3 == 2) return path_x(3 * k + 1);
      return path_y(j + 1);
    }
    if (j == 3 * k + 1) return path_y(3 * k - 1);
    if (j == 3 * k - 1) return path_x(3 * k + 1);
    if (j % 3 == 0) return path_x(j - 1);
    if (j % 3 == 2) return path_x(3 * k + 1);
    return path_x(j + 2);
  }
  if (x_side) {
    if (j >= 3 * k + 1) return path_x(3 * k + 2);
    if (j % 3 == 0) return path_y(j - 2);
    if (j % 3 == 2) return path_x(3 * k + 2);
    return path_y(j + 1);
  }
  if (j >= 3 * k + 1) return path_y(3 * k + 1);
  if (j % 3 == 0) return path_x(j - 1);
  if (j % 3 == 2) return path_x(3 * k + 2);
  return path_x(j + 2);
}

// ---------------------------------------------------------------------------
// Deterministic single-game playout with a text trace, one row per move:
// move#, player, vertex, newly dominated count, optional potential value
// (recorded after each Dominator move when requested).
// ---------------------------------------------------------------------------

struct TraceRow {
  int move_number;
  Player player;
  Vertex vertex;
  int newly_dominated;
  std::optional<int> f_value;
};

template <class Script, class OpponentPolicy>
std::vector<TraceRow> play_scripted(const Graph& g, VertexSet given, Script script,
                                    Player scripted, OpponentPolicy opponent_policy,
                                    bool with_potential = false) {
  GameState s = initial_state(g, given, Player::Dominator);
  std::vector<TraceRow> rows;
  int dominator_moves = 0;
  while (!is_terminal(s)) {
    Vertex mv = s.to_move == scripted ? script.choose(s) : opponent_policy(s);
    int newly = (g.neighbors(mv) - s.dominated).count();
    script.observe(s, mv);
    Player mover = s.to_move;
    s = apply_move(s, mv);
    std::optional<int> f;
    if (mover == Player::Dominator) {
      ++dominator_moves;
      if (with_potential)
        f = potential_f(g.order(), dominator_moves, s.dominated).f_value;
    }
    rows.push_back({static_cast<int>(rows.size()) + 1, mover, mv, newly, f});
  }
  return rows;
}

inline std::string trace_to_text(const std::vector<TraceRow>& rows) {
  std::ostringstream out;
  for (const TraceRow& r : rows) {
    out << r.move_number << ',' << player_letter(r.player) << ',' << r.vertex
        << ',' << r.newly_dominated;
    if (r.f_value) out << ',' << *r.f_value;
    out << '\n';
  }
  return out.str();
}

}  // namespace tdgame
