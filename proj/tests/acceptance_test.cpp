// Acceptance suite: one test case per release criterion, each printing a
// single PASS/FAIL line with its runtime.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "tdgame/tdgame.hpp"
#include "test_util.hpp"

using namespace tdgame;

namespace {

class Criterion {
 public:
  Criterion(std::string name, double budget_seconds)
      : name_(std::move(name)), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void finish(bool ok) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    bool in_budget = elapsed < budget_;
    std::cout << (ok && in_budget ? "[PASS] " : "[FAIL] ") << name_ << " ("
              << elapsed << "s / " << budget_ << "s)" << std::endl;
    REQUIRE(ok);
    REQUIRE(in_budget);
  }

 private:
  std::string name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

// labeled graphs with min degree >= 1 on 2..6 vertices:
// 1 + 4 + 41 + 768 + 27449 (inclusion-exclusion over isolated vertices)
constexpr std::uint64_t kSolvableLabeledUpTo6 = 28263;

}  // namespace

TEST_CASE("criterion 1: cycle values 3..18 match the closed form") {
  Criterion c("criterion 1: cycle values 3..18", 60.0);
  auto rows = verify_family(FamilyCheck::cycle_values, 3, 18);
  c.finish(rows.size() == 16 && all_agree(rows));
}

TEST_CASE("criterion 2: cycle criticality 3..16 matches the closed form") {
  Criterion c("criterion 2: cycle criticality 3..16", 600.0);
  auto rows = verify_family(FamilyCheck::cycle_criticality, 3, 16);
  c.finish(rows.size() == 14 && all_agree(rows));
}

TEST_CASE("criterion 3: path values 2..18 match the closed form") {
  Criterion c("criterion 3: path values 2..18", 60.0);
  auto rows = verify_family(FamilyCheck::path_values, 2, 18);
  c.finish(rows.size() == 17 && all_agree(rows));
}

TEST_CASE("criterion 4: path criticality 2..16 matches the closed form") {
  Criterion c("criterion 4: path criticality 2..16", 600.0);
  auto rows = verify_family(FamilyCheck::path_criticality, 2, 16);
  c.finish(rows.size() == 15 && all_agree(rows));
}

TEST_CASE("criterion 5: 2-critical iff complete, all solvable graphs n <= 6") {
  Criterion c("criterion 5: 2-critical characterization n <= 6", 300.0);
  ScanSummary s = verify_characterization(CharKind::two_critical, 6, default_jobs());
  c.finish(s.scanned == kSolvableLabeledUpTo6 && s.disagreements.empty());
}

TEST_CASE("criterion 6: 3-critical predicate matches profiles, n <= 6") {
  Criterion c("criterion 6: 3-critical characterization n <= 6", 600.0);
  ScanSummary s =
      verify_characterization(CharKind::three_critical, 6, default_jobs());
  c.finish(s.scanned == kSolvableLabeledUpTo6 && s.disagreements.empty());
}

TEST_CASE("criterion 6 stretch: 3-critical characterization at n = 7") {
  Criterion c("criterion 6 stretch: 3-critical characterization n = 7", 600.0);
  ScanSummary s =
      verify_characterization(CharKind::three_critical, 7, default_jobs());
  // adds the 1,887,284 solvable labeled graphs on 7 vertices
  c.finish(s.scanned == kSolvableLabeledUpTo6 + 1887284ULL &&
           s.disagreements.empty());
}

TEST_CASE("criterion 7: join predicate matches profiles over all pairs <= 4") {
  Criterion c("criterion 7: join characterization, factors <= 4", 900.0);
  ScanSummary s = verify_join_characterization(4, default_jobs());
  c.finish(s.scanned == 75ULL * 75ULL && s.disagreements.empty());
}

TEST_CASE("criterion 8: first-move table meets the potential bound") {
  Criterion c("criterion 8: f-bound and first-move table n in {8,10,14,16}", 120.0);
  auto rows = verify_path_first_moves(16);
  // the uniform f_n(1) targets: 4k+1 for n = 6k+2, 4k+2 for n = 6k+4
  bool ok = rows.size() == 4 && all_agree(rows) &&
            rows[0].predicted == "f1=5,bound-holds" &&   // n = 8,  k = 1
            rows[1].predicted == "f1=6,bound-holds" &&   // n = 10, k = 1
            rows[2].predicted == "f1=9,bound-holds" &&   // n = 14, k = 2
            rows[3].predicted == "f1=10,bound-holds";    // n = 16, k = 2
  c.finish(ok);
}

TEST_CASE("criterion 9: strategy certificates on cycles") {
  Criterion c("criterion 9: cycle strategy certificates", 600.0);
  auto rows = verify_strategy_cycle(15);
  bool ok = all_agree(rows);
  int dominator_rows = 0, staller_rows = 0;
  for (const auto& r : rows) {
    if (r.instance.find("dominator") != std::string::npos) ++dominator_rows;
    if (r.instance.find("staller") != std::string::npos) ++staller_rows;
  }
  // dominator certs on {6,7,9,12,13,15}, staller certs on {4,5,8,10,11,14}
  ok = ok && dominator_rows == 6 && staller_rows == 6;
  c.finish(ok);
}

TEST_CASE("criterion 10: non-criticality witnesses up to n = 16") {
  Criterion c("criterion 10: path witnesses n <= 16", 120.0);
  auto rows = verify_witnesses(16);
  c.finish(rows.size() == 9 && all_agree(rows));
}

TEST_CASE("criterion 11: invariant property suite") {
  Criterion c("criterion 11: property suite", 900.0);
  bool ok = true;

  // (a) continuation monotonicity and D/S proximity on 200 random graphs
  {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 200 && ok; ++trial) {
      int n = 3 + static_cast<int>(rng() % 6);  // 3..8
      double p = 0.3 + 0.1 * static_cast<double>(rng() % 5);
      Graph g = testutil::random_graph(rng, n, p);
      GameSolver solver(g);
      ok = ok && std::abs(solver.gamma_tg() - solver.gamma_tg_staller()) <= 1;
      for (std::uint64_t mask = 0; mask < (1ULL << n) && ok; ++mask) {
        VertexSet s(mask);
        for (Vertex v = 0; v < n && ok; ++v) {
          if (s.contains(v)) continue;
          VertexSet t = s | VertexSet::single(v);
          ok = ok && solver.value(s, Player::Dominator) >=
                         solver.value(t, Player::Dominator);
          ok = ok && solver.value(s, Player::Staller) >=
                         solver.value(t, Player::Staller);
        }
      }
    }
  }

  // (b) open-twin insensitivity on every solvable twin-bearing graph n <= 6,
  // (c) critical graphs are twin-free and no neighbor of v is an optimal
  //     first move on G|v
  for (int n = 2; n <= 6 && ok; ++n) {
    for (std::uint64_t mask = 0; mask < edge_mask_count(n) && ok; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      if (g.min_degree() < 1) continue;
      GameSolver solver(g);
      auto twins = open_twins(g);
      if (!twins.empty()) {
        GameValue base = solver.gamma_tg();
        for (auto [u, v] : twins) {
          ok = ok && solver.gamma_tg(VertexSet::single(u)) == base;
          ok = ok && solver.gamma_tg(VertexSet::single(v)) == base;
        }
      }
      if (profile(solver).is_critical) {
        ok = ok && twins.empty();
        for (Vertex v = 0; v < n && ok; ++v) {
          VertexSet opt =
              solver.optimal_moves(VertexSet::single(v), Player::Dominator);
          ok = ok && (opt & g.neighbors(v)).empty();
        }
      }
    }
  }

  // (d) gamma_tg(G) <= 4n/5 for connected graphs, exhaustively at n <= 7
  if (ok) {
    for (int n = 3; n <= 7 && ok; ++n) {
      int threads = default_jobs();
      std::vector<char> violation(static_cast<std::size_t>(threads), 0);
      parallel_chunks(0, edge_mask_count(n), threads,
                      [&](int t, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t m = lo; m < hi; ++m) {
                          Graph g = graph_from_edge_mask(n, m);
                          if (g.min_degree() < 1 || !is_connected(g)) continue;
                          GameSolver solver(g);
                          if (5 * solver.gamma_tg() > 4 * n) {
                            violation[static_cast<std::size_t>(t)] = 1;
                            return;
                          }
                        }
                      });
      for (char v : violation) ok = ok && !v;
    }
  }

  c.finish(ok);
}
