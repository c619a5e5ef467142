#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tdgame/criticality.hpp"
#include "tdgame/enumerate.hpp"
#include "tdgame/game.hpp"
#include "tdgame/graph.hpp"
#include "tdgame/graph6.hpp"
#include "tdgame/parallel.hpp"
#include "tdgame/strategy.hpp"

namespace tdgame {

// One predicted-vs-computed record of a verification run.
struct VerificationReport {
  std::string instance;
  std::string predicted;
  std::string computed;
  bool agree = false;
};

inline std::string to_tsv(const std::vector<VerificationReport>& rows) {
  std::ostringstream out;
  out << "instance_id\tpredicted\tcomputed\tagree\n";
  for (const VerificationReport& r : rows)
    out << r.instance << '\t' << r.predicted << '\t' << r.computed << '\t'
        << (r.agree ? "true" : "false") << '\n';
  return out.str();
}

inline bool all_agree(const std::vector<VerificationReport>& rows) {
  for (const VerificationReport& r : rows)
    if (!r.agree) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closed forms vs. exact solver on paths and cycles.
// ---------------------------------------------------------------------------

enum class FamilyCheck {
  cycle_values,
  cycle_criticality,
  path_values,
  path_criticality
};

inline std::vector<VerificationReport> verify_family(FamilyCheck kind, int n_min,
                                                     int n_max) {
  bool cycle = kind == FamilyCheck::cycle_values || kind == FamilyCheck::cycle_criticality;
  bool values = kind == FamilyCheck::cycle_values || kind == FamilyCheck::path_values;
  n_min = std::max(n_min, cycle ? 3 : 2);
  std::vector<VerificationReport> rows;
  for (int n = n_min; n <= n_max; ++n) {
    ClosedForm cf = cycle ? closed_form_cycle(n) : closed_form_path(n);
    GameSolver solver(cycle ? cycle_graph(n) : path_graph(n));
    VerificationReport r;
    r.instance = (cycle ? "cycle:" : "path:") + std::to_string(n);
    if (values) {
      GameValue got = solver.gamma_tg();
      r.predicted = std::to_string(cf.value);
      r.computed = std::to_string(got);
      r.agree = got == cf.value;
    } else {
      CriticalityProfile p = profile(solver);
      r.predicted = cf.critical ? "critical" : "not-critical";
      r.computed = p.is_critical ? "critical" : "not-critical";
      r.agree = p.is_critical == cf.critical;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// One row per n combining the value and criticality checks; what the CLI
// `verify cycles` / `verify paths` suites print.
inline std::vector<VerificationReport> verify_line_suite(bool cycle, int n_max) {
  int n_min = cycle ? 3 : 2;
  std::vector<VerificationReport> rows;
  for (int n = n_min; n <= n_max; ++n) {
    ClosedForm cf = cycle ? closed_form_cycle(n) : closed_form_path(n);
    GameSolver solver(cycle ? cycle_graph(n) : path_graph(n));
    CriticalityProfile p = profile(solver);
    VerificationReport r;
    r.instance = (cycle ? "cycle:" : "path:") + std::to_string(n);
    r.predicted = "value=" + std::to_string(cf.value) +
                  ",critical=" + (cf.critical ? "true" : "false");
    r.computed = "value=" + std::to_string(p.base_value) +
                 ",critical=" + (p.is_critical ? "true" : "false");
    r.agree = p.base_value == cf.value && p.is_critical == cf.critical;
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Exhaustive characterization scans over labeled graphs with min degree >= 1.
// Counterexamples are reported as graph6. Labeled enumeration, no isomorphism
// dedup; duplicates only cost time at these orders.
// ---------------------------------------------------------------------------

struct ScanSummary {
  std::uint64_t scanned = 0;
  std::vector<VerificationReport> disagreements;
};

enum class CharKind { two_critical, three_critical };

namespace detail {

inline bool profile_is_k_critical(const Graph& g, int k) {
  GameSolver solver(g);
  CriticalityProfile p = profile(solver);
  return p.is_critical && p.base_value == k;
}

}  // namespace detail

inline ScanSummary verify_characterization(CharKind kind, int n_max,
                                           int jobs = 1) {
  if (n_max > kEnumerationCap)
    throw Error("characterization scan capped at n = " +
                std::to_string(kEnumerationCap));
  ScanSummary summary;
  for (int n = 2; n <= n_max; ++n) {
    int threads = std::max(jobs, 1);
    std::vector<ScanSummary> parts(static_cast<std::size_t>(threads));
    parallel_chunks(0, edge_mask_count(n), threads,
                    [&](int t, std::uint64_t lo, std::uint64_t hi) {
                      ScanSummary& part = parts[static_cast<std::size_t>(t)];
                      for (std::uint64_t mask = lo; mask < hi; ++mask) {
                        Graph g = graph_from_edge_mask(n, mask);
                        if (g.min_degree() < 1) continue;
                        ++part.scanned;
                        bool predicted = kind == CharKind::two_critical
                                             ? char_2critical(g)
                                             : char_3critical(g);
                        bool computed = detail::profile_is_k_critical(
                            g, kind == CharKind::two_critical ? 2 : 3);
                        if (predicted != computed)
                          part.disagreements.push_back(
                              {emit_g6(g), predicted ? "critical" : "not-critical",
                               computed ? "critical" : "not-critical", false});
                      }
                    });
    for (ScanSummary& part : parts) {
      summary.scanned += part.scanned;
      for (auto& d : part.disagreements)
        summary.disagreements.push_back(std::move(d));
    }
  }
  return summary;
}

// Join characterization: over all ordered pairs of labeled graphs with at most
// max_each vertices each, the join predicate must agree with the solver's
// criticality profile of the join.
inline ScanSummary verify_join_characterization(int max_each, int jobs = 1) {
  if (2 * max_each > kGraph6MaxOrder)
    throw Error("join scan factors too large");
  std::vector<Graph> factors;
  for (int n = 1; n <= max_each; ++n)
    for (std::uint64_t mask = 0; mask < edge_mask_count(n); ++mask)
      factors.push_back(graph_from_edge_mask(n, mask));

  std::uint64_t total = static_cast<std::uint64_t>(factors.size()) *
                        static_cast<std::uint64_t>(factors.size());
  int threads = std::max(jobs, 1);
  std::vector<ScanSummary> parts(static_cast<std::size_t>(threads));
  parallel_chunks(0, total, threads, [&](int t, std::uint64_t lo, std::uint64_t hi) {
    ScanSummary& part = parts[static_cast<std::size_t>(t)];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Graph& g1 = factors[static_cast<std::size_t>(idx / factors.size())];
      const Graph& g2 = factors[static_cast<std::size_t>(idx % factors.size())];
      ++part.scanned;
      bool predicted = char_join_3critical(g1, g2);
      bool computed = detail::profile_is_k_critical(join(g1, g2), 3);
      if (predicted != computed)
        part.disagreements.push_back({emit_g6(g1) + "+" + emit_g6(g2),
                                      predicted ? "critical" : "not-critical",
                                      computed ? "critical" : "not-critical",
                                      false});
    }
  });
  ScanSummary summary;
  for (ScanSummary& part : parts) {
    summary.scanned += part.scanned;
    for (auto& d : part.disagreements)
      summary.disagreements.push_back(std::move(d));
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Strategy certificates.
// ---------------------------------------------------------------------------

// Cycle scripts: on critical cycles the Dominator script must hold the game on
// C_n|v_1 to at most floor((2n-1)/3); on non-critical cycles the Staller
// script must keep every C_n|v at or above gamma_tg(C_n).
inline std::vector<VerificationReport> verify_strategy_cycle(int n_max) {
  std::vector<VerificationReport> rows;
  for (int n = 4; n <= n_max; ++n) {
    int r = n % 6;
    if (n >= 6 && (r == 0 || r == 1 || r == 3)) {
      Graph g = cycle_graph(n);
      int bound = (2 * n - 1) / 3;
      VerificationReport row;
      row.instance = "cycle:" + std::to_string(n) + "|v1:dominator-script";
      row.predicted = "<=" + std::to_string(bound);
      try {
        GameValue worst = simulate_worst_case(g, VertexSet::single(0),
                                              CycleDominatorScript(g, 0),
                                              Player::Dominator);
        row.computed = std::to_string(worst);
        row.agree = worst <= bound;
      } catch (const ScriptError& e) {
        row.computed = std::string("script-error: ") + e.what();
        row.agree = false;
      }
      rows.push_back(std::move(row));
    }
    if (r == 2 || r == 4 || r == 5) {
      Graph g = cycle_graph(n);
      GameSolver solver(g);
      GameValue base = solver.gamma_tg();
      VerificationReport row;
      row.instance = "cycle:" + std::to_string(n) + "|v*:staller-script";
      row.predicted = ">=" + std::to_string(base);
      try {
        GameValue worst_min = -1;
        for (Vertex v = 0; v < n; ++v) {
          GameValue got = simulate_worst_case(g, VertexSet::single(v),
                                              StallerExtremityScript(g),
                                              Player::Staller);
          if (worst_min < 0 || got < worst_min) worst_min = got;
        }
        row.computed = std::to_string(worst_min);
        row.agree = worst_min >= base;
      } catch (const ScriptError& e) {
        row.computed = std::string("script-error: ") + e.what();
        row.agree = false;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// First-move table certificates on paths with n = 2, 4 (mod 6), n >= 8: after
// Dominator's prescribed reply to |v the potential equals 4k+1 resp. 4k+2 and
// bounds gamma_tg(P_n|v) from above, for every v.
inline std::vector<VerificationReport> verify_path_first_moves(int n_max) {
  std::vector<VerificationReport> rows;
  for (int n = 8; n <= n_max; ++n) {
    int r = n % 6;
    if (r != 2 && r != 4) continue;
    int k = (n - r) / 6;
    int target = r == 2 ? 4 * k + 1 : 4 * k + 2;
    Graph g = path_graph(n);
    GameSolver solver(g);
    VerificationReport row;
    row.instance = "path:" + std::to_string(n) + "|v*:first-move";
    row.predicted = "f1=" + std::to_string(target) + ",bound-holds";
    bool ok = true;
    GameValue max_gamma = 0;
    int bad_f = -1;
    for (Vertex v = 0; v < n && ok; ++v) {
      Vertex d1 = dominator_first_move_path(n, v);
      if ((g.neighbors(d1) - VertexSet::single(v)).empty()) {
        ok = false;  // prescribed move would be illegal on P_n|v
        break;
      }
      VertexSet dominated = VertexSet::single(v) | g.neighbors(d1);
      PotentialReport rep = potential_f(n, 1, dominated);
      GameValue gv = solver.gamma_tg(VertexSet::single(v));
      max_gamma = std::max(max_gamma, gv);
      if (rep.f_value != target) {
        ok = false;
        bad_f = rep.f_value;
      }
      if (gv > rep.f_value) ok = false;
    }
    row.computed = ok ? "max_gamma=" + std::to_string(max_gamma)
                      : (bad_f >= 0 ? "f1=" + std::to_string(bad_f) : "illegal-move");
    row.agree = ok;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Non-criticality witnesses: gamma_tg(P_n|w) >= gamma_tg(P_n) for the table
// vertex w, over all n with n mod 6 in {0, 1, 3, 5}.
inline std::vector<VerificationReport> verify_witnesses(int n_max) {
  std::vector<VerificationReport> rows;
  for (int n = 3; n <= n_max; ++n) {
    int r = n % 6;
    if (r == 2 || r == 4) continue;
    Vertex w = noncritical_witness_path(n);
    GameSolver solver(path_graph(n));
    GameValue base = solver.gamma_tg();
    GameValue with_w = solver.gamma_tg(VertexSet::single(w));
    VerificationReport row;
    row.instance = "path:" + std::to_string(n) + "|v" + std::to_string(w + 1);
    row.predicted = ">=" + std::to_string(base);
    row.computed = std::to_string(with_w);
    row.agree = with_w >= base;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tdgame
