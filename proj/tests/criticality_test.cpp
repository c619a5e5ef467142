#include <catch2/catch_amalgamated.hpp>

#include "tdgame/criticality.hpp"
#include "tdgame/enumerate.hpp"
#include "tdgame/graph.hpp"
#include "tdgame/verify.hpp"

using namespace tdgame;

TEST_CASE("criticality profiles of named graphs") {
  CriticalityProfile k3 = profile(complete_graph(3));
  CHECK(k3.base_value == 2);
  CHECK(k3.spectrum == std::vector<GameValue>{1, 1, 1});
  CHECK(k3.is_critical);
  CHECK(k3.class_k == 2);

  CriticalityProfile c5 = profile(cycle_graph(5));
  CHECK(c5.base_value == 3);
  CHECK_FALSE(c5.is_critical);
  CHECK_FALSE(c5.class_k.has_value());

  CriticalityProfile p4 = profile(path_graph(4));
  CHECK(p4.base_value == 3);
  CHECK(p4.spectrum == std::vector<GameValue>{2, 2, 2, 2});
  CHECK(p4.is_critical);
  CHECK(p4.class_k == 3);

  CHECK_THROWS_AS(profile(one_plus_clique_graph(3)), UnwinnableError);
}

TEST_CASE("cycle closed form") {
  CHECK(closed_form_cycle(4).value == 2);
  CHECK_FALSE(closed_form_cycle(4).critical);
  CHECK(closed_form_cycle(9).value == 6);
  CHECK(closed_form_cycle(9).critical);
  // n = 4 (mod 6) takes the subtracted branch: floor(21/3) - 1, not 7
  CHECK(closed_form_cycle(10).value == 6);
  CHECK_FALSE(closed_form_cycle(10).critical);
  CHECK(closed_form_cycle(3).value == 2);
  CHECK(closed_form_cycle(3).critical);
  CHECK_THROWS_AS(closed_form_cycle(2), Error);
}

TEST_CASE("path closed form") {
  CHECK(closed_form_path(2).value == 2);
  CHECK(closed_form_path(2).critical);
  CHECK(closed_form_path(8).value == 6);
  CHECK(closed_form_path(8).critical);
  CHECK(closed_form_path(5).value == 3);
  CHECK_FALSE(closed_form_path(5).critical);
  CHECK_THROWS_AS(closed_form_path(1), Error);
}

TEST_CASE("2-critical characterization predicate") {
  CHECK(char_2critical(complete_graph(5)));
  CHECK(char_2critical(complete_graph(2)));
  CHECK_FALSE(char_2critical(path_graph(4)));
  CHECK_FALSE(char_2critical(complete_graph(1)));
}

TEST_CASE("3-critical characterization predicate") {
  CHECK(char_3critical(path_graph(4)));
  CHECK_FALSE(char_3critical(cycle_graph(4)));    // open twins
  CHECK_FALSE(char_3critical(complete_graph(4))); // dominating vertices
  CHECK_FALSE(char_3critical(cycle_graph(5)));    // no degree n-2 witness
  CHECK_THROWS_AS(char_3critical(one_plus_clique_graph(2)), UnwinnableError);
}

TEST_CASE("predicate-true graphs have maximum degree n-2") {
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t mask = 0; mask < edge_mask_count(n); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      if (g.min_degree() < 1) continue;
      if (char_3critical(g)) CHECK(g.max_degree() == n - 2);
    }
  }
}

TEST_CASE("one-plus-clique recognition") {
  CHECK(is_one_plus_clique(one_plus_clique_graph(2)));
  CHECK(is_one_plus_clique(one_plus_clique_graph(3)));
  CHECK_FALSE(is_one_plus_clique(complete_graph(3)));
  CHECK_FALSE(is_one_plus_clique(make_graph(2, {})));              // K_1 u K_1
  CHECK_FALSE(is_one_plus_clique(disjoint_union(make_graph(1, {}), path_graph(3))));
  CHECK_FALSE(is_one_plus_clique(
      disjoint_union(make_graph(2, {}), complete_graph(2))));      // two isolated
}

TEST_CASE("join characterization predicate") {
  Graph opc2 = one_plus_clique_graph(2);
  CHECK(char_join_3critical(opc2, opc2));
  CHECK(char_join_3critical(path_graph(4), one_plus_clique_graph(3)));
  CHECK_FALSE(char_join_3critical(complete_graph(3), complete_graph(3)));
}

TEST_CASE("witness vertices for non-critical paths") {
  CHECK(noncritical_witness_path(3) == 0);   // v_1
  CHECK(noncritical_witness_path(5) == 2);   // v_3
  CHECK(noncritical_witness_path(6) == 2);   // v_3
  CHECK(noncritical_witness_path(7) == 3);   // v_4
  CHECK(noncritical_witness_path(9) == 0);   // v_1
  CHECK(noncritical_witness_path(11) == 0);  // v_1
  CHECK(noncritical_witness_path(12) == 3);  // v_4
  CHECK_THROWS_AS(noncritical_witness_path(8), Error);
  CHECK_THROWS_AS(noncritical_witness_path(10), Error);

  SECTION("small witnesses meet the bound with equality") {
    GameSolver p3(path_graph(3));
    CHECK(p3.gamma_tg(VertexSet::single(0)) == 2);
    CHECK(p3.gamma_tg() == 2);
    GameSolver p5(path_graph(5));
    CHECK(p5.gamma_tg(VertexSet::single(2)) == 3);
    CHECK(p5.gamma_tg() == 3);
    GameSolver p6(path_graph(6));
    CHECK(p6.gamma_tg(VertexSet::single(2)) == 4);
    CHECK(p6.gamma_tg() == 4);
  }
}

TEST_CASE("verify_family drivers") {
  auto cycles = verify_family(FamilyCheck::cycle_values, 3, 12);
  CHECK(cycles.size() == 10);
  CHECK(all_agree(cycles));

  auto paths = verify_family(FamilyCheck::path_criticality, 2, 12);
  CHECK(paths.size() == 11);
  CHECK(all_agree(paths));

  auto c4 = verify_family(FamilyCheck::cycle_criticality, 4, 4);
  REQUIRE(c4.size() == 1);
  CHECK(c4.front().predicted == "not-critical");
  CHECK(c4.front().computed == "not-critical");
  CHECK(c4.front().agree);

  std::string tsv = to_tsv(c4);
  CHECK(tsv == "instance_id\tpredicted\tcomputed\tagree\n"
               "cycle:4\tnot-critical\tnot-critical\ttrue\n");
}

TEST_CASE("every 3-critical graph pins gamma_tg(G|w) to 2") {
  for (const Graph& g : {path_graph(4), join(one_plus_clique_graph(2), one_plus_clique_graph(2))}) {
    GameSolver solver(g);
    CriticalityProfile p = profile(solver);
    REQUIRE(p.is_critical);
    REQUIRE(p.base_value == 3);
    for (Vertex w = 0; w < g.order(); ++w)
      CHECK(solver.gamma_tg(VertexSet::single(w)) == 2);
  }
}

TEST_CASE("no cycle is 3-critical and P_4 is the unique small 3-critical graph") {
  for (int n = 3; n <= 16; ++n) {
    ClosedForm cf = closed_form_cycle(n);
    CHECK_FALSE((cf.critical && cf.value == 3));
  }
  // enumerate orders <= 4: the only 3-critical graphs are the labeled P_4s
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < edge_mask_count(n); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      if (g.min_degree() < 1) continue;
      GameSolver solver(g);
      CriticalityProfile p = profile(solver);
      if (p.is_critical && p.base_value == 3) {
        CHECK(n == 4);
        CHECK(g.edge_count() == 3);
        CHECK(is_connected(g));
        CHECK(g.max_degree() == 2);  // a labeled path on 4 vertices
      }
    }
  }
}

TEST_CASE("critical graphs found by enumeration are open twin-free") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < edge_mask_count(n); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      if (g.min_degree() < 1) continue;
      if (profile(g).is_critical) CHECK(open_twins(g).empty());
    }
  }
}
