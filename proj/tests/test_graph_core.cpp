// Copyright 2026 The owc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "owc/error.hpp"
#include "owc/families.hpp"
#include "owc/graph.hpp"
#include "owc/graph_io.hpp"
#include "owc/graph_spec.hpp"
#include "owc/subset_search.hpp"
#include "owc/vertex_set.hpp"

using namespace owc;

TEST_SUITE("graph_core") {

TEST_CASE("vertex set basics") {
  VertexSet s(10, {1, 3, 9});
  CHECK(s.count() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.to_string() == "{1,3,9}");
  CHECK(s.complement().count() == 7);
  CHECK_FALSE(s.complement().contains(9));
  CHECK(VertexSet(5).to_string() == "{}");
  CHECK_THROWS_AS(s.insert(10), std::out_of_range);

  VertexSet t(10, {3, 4});
  CHECK((s | t).to_vector() == std::vector<Vertex>{1, 3, 4, 9});
  CHECK((s & t).to_vector() == std::vector<Vertex>{3});
  CHECK((s - t).to_vector() == std::vector<Vertex>{1, 9});
  CHECK((s ^ t).to_vector() == std::vector<Vertex>{1, 4, 9});
  CHECK(VertexSet(10, {3}).is_subset_of(s));
  CHECK(s.intersects(t));
  CHECK_FALSE(s.intersects(VertexSet(10, {0, 2})));
}

TEST_CASE("vertex set across word boundaries") {
  VertexSet s(200, {0, 63, 64, 127, 128, 199});
  CHECK(s.count() == 6);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 63, 64, 127, 128, 199});
  const VertexSet c = s.complement();
  CHECK(c.count() == 194);
  CHECK_FALSE(c.contains(199));
  CHECK(c.contains(198));
  CHECK(VertexSet::full(kMaxOrder).count() == kMaxOrder);
}

TEST_CASE("lex order compares sorted member lists") {
  CHECK(lex_less(VertexSet(5, {0, 4}), VertexSet(5, {1, 2})));
  CHECK(lex_less(VertexSet(5, {0, 1}), VertexSet(5, {0, 2})));
  CHECK(lex_less(VertexSet(5, {0}), VertexSet(5, {0, 1})));
  CHECK_FALSE(lex_less(VertexSet(5, {1, 2}), VertexSet(5, {1, 2})));
}

TEST_CASE("graph_from_edge_list") {
  const std::vector<Edge> k2 = {{0, 1}};
  const Graph g = graph_from_edge_list(2, k2);
  CHECK(g.order() == 2);
  CHECK(g.edge_count() == 1);

  const std::vector<Edge> c4 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(graph_from_edge_list(4, c4).edge_count() == 4);

  const std::vector<Edge> dup = {{0, 1}, {0, 1}};
  const Graph d = graph_from_edge_list(3, dup);
  CHECK(d.edge_count() == 1);
  CHECK(d.degree(2) == 0);

  const std::vector<Edge> loop = {{1, 1}};
  CHECK_THROWS_AS(graph_from_edge_list(3, loop), GraphError);
  const std::vector<Edge> out_of_range = {{0, 3}};
  CHECK_THROWS_AS(graph_from_edge_list(3, out_of_range), GraphError);
  CHECK_THROWS_AS(graph_from_edge_list(0, {}), GraphError);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto edges = oracle::random_connected_edges(12, 0.3, rng);
    const Graph g(12, edges);
    for (Vertex u = 0; u < 12; ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      CHECK(g.closed_neighbors(u).contains(u));
      for (Vertex v : g.neighbors(u)) CHECK(g.has_edge(v, u));
    }
  }
}

TEST_CASE("distance matrix matches Floyd-Warshall") {
  CHECK(distance_matrix(path_graph(4)).at(0, 3) == 3);
  CHECK(distance_matrix(cycle_graph(6)).at(0, 3) == 3);
  const std::vector<Edge> split = {{0, 1}};
  CHECK_FALSE(distance_matrix(Graph(3, split)).reachable(0, 2));
  CHECK(distance_matrix(Graph(3, split)).at(0, 2) == DistanceMatrix::kUnreachable);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 20;
    auto edges = oracle::random_connected_edges(n, 0.15, rng);
    // Drop a few edges so some instances are disconnected.
    if (trial % 3 == 0 && !edges.empty()) edges.erase(edges.begin());
    const Graph g(n, edges);
    const auto want = oracle::distances(oracle::from_graph(g));
    const DistanceMatrix got = distance_matrix(g);
    bool all_reachable = true;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (want[u][v] >= oracle::kInf) {
          CHECK_FALSE(got.reachable(u, v));
          all_reachable = false;
        } else {
          CHECK(got.at(u, v) == static_cast<unsigned>(want[u][v]));
        }
      }
    }
    CHECK(is_connected(g) == all_reachable);
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(cycle_graph(5)));
  const std::vector<Edge> one = {{0, 1}};
  CHECK_FALSE(is_connected(Graph(3, one)));
  CHECK(is_connected(Graph(1, {})));
  CHECK_THROWS_AS(require_connected(Graph(3, one), "test"), DisconnectedError);
}

TEST_CASE("induced_subgraph") {
  const Graph c4 = cycle_graph(4);
  CHECK(induced_subgraph(c4, VertexSet(4, {0, 1})).graph.edge_count() == 1);
  const InducedSubgraph anti = induced_subgraph(c4, VertexSet(4, {0, 2}));
  CHECK(anti.graph.order() == 2);
  CHECK(anti.graph.edge_count() == 0);
  CHECK(anti.index_map[0] == 0);
  CHECK(anti.index_map[1] == InducedSubgraph::kNotPresent);
  CHECK(anti.index_map[2] == 1);
  const InducedSubgraph p3 = induced_subgraph(path_graph(4), VertexSet(4, {0, 1, 2}));
  CHECK(p3.graph == path_graph(3));
  CHECK_THROWS_AS(induced_subgraph(c4, VertexSet(4)), GraphError);
}

TEST_CASE("families") {
  CHECK(complete_graph(4).edge_count() == 6);
  const Graph k22 = complete_bipartite_graph(2, 2);
  CHECK(k22.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(k22.degree(v) == 2);
  const Graph star = star_graph(3);
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(0) == 3);
  CHECK(star.name() == "K1,3");
  CHECK(path_graph(4).name() == "P4");
  CHECK(cycle_graph(5).name() == "C5");
  CHECK_THROWS_AS(cycle_graph(2), GraphError);
  CHECK_THROWS_AS(complete_bipartite_graph(0, 3), GraphError);
  const std::size_t params[] = {2, 3};
  CHECK(family(FamilyKind::complete_bipartite, params).edge_count() == 6);
  CHECK(parse_family_kind("star") == FamilyKind::star);
  CHECK_FALSE(parse_family_kind("wheel").has_value());
}

TEST_CASE("graph6 known strings") {
  CHECK(graph_from_graph6("A_") == complete_graph(2));
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(star_graph(3)) == "Cs");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  const std::string p3 = to_graph6(path_graph(3));
  CHECK(p3 == "Bg");
  CHECK(graph_from_graph6(p3).edge_count() == 2);

  const Graph d = graph_from_graph6("D?{");
  CHECK(d.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(to_graph6(d) == "D?{");
  CHECK(graph_from_graph6(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("graph6 long order header") {
  std::vector<Edge> edges = {{0, 62}};
  const Graph g(63, edges);
  const std::string text = to_graph6(g);
  CHECK(text.substr(0, 4) == "~??~");
  CHECK(graph_from_graph6(text) == g);
}

TEST_CASE("graph6 errors carry offsets") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      graph_from_graph6(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error");
    return 0;
  };
  CHECK_THROWS_AS(graph_from_graph6(""), ParseError);
  CHECK(offset_of("C") == 1);       // body too short
  CHECK(offset_of("A_x") == 2);     // trailing byte
  CHECK(offset_of("C\x7f") == 1);   // byte out of range
  CHECK(offset_of("A`") == 1);      // nonzero padding
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.4);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const std::string text = to_graph6(g);
    CHECK(graph_from_graph6(text) == g);
    CHECK(to_graph6(graph_from_graph6(text)) == text);
  }
}

TEST_CASE("edge list io") {
  std::istringstream in("# a comment\n4 3\n0 1\n1 2 # trailing\n\n2 3\n");
  const Graph g = read_edge_list(in);
  CHECK(g == path_graph(4));

  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream s(text);
    try {
      read_edge_list(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error");
    return 0;
  };
  CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("3 1\n0 5\n") == 2);
  CHECK(line_of("3 2\n0 1\n") > 0);
  CHECK(line_of("") > 0);
}

TEST_CASE("graph specs") {
  CHECK(parse_graph_spec("cycle:5") == cycle_graph(5));
  CHECK(parse_graph_spec("complete_bipartite:2,3") == complete_bipartite_graph(2, 3));
  CHECK(parse_graph_spec("g6:C~") == complete_graph(4));
  CHECK(parse_graph_spec("star:3").name() == "K1,3");
  const auto range = expand_graph_spec("path:2..4");
  REQUIRE(range.size() == 3);
  CHECK(range[2] == path_graph(4));
  CHECK(expand_graph_spec("complete_bipartite:1..2,2..3").size() == 4);
  CHECK_THROWS_AS(parse_graph_spec("path:2..4"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("wheel:5"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("cycle"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("cycle:x"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("complete_bipartite:2"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("cycle:2"), GraphError);
  CHECK_THROWS(parse_graph_spec("@/nonexistent/file.g6"));
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK(binomial(1024, 512) == kBinomialSaturated);
}

TEST_CASE("colex cursor enumerates every k-subset once, in colex order") {
  for (std::size_t n : {1u, 5u, 9u, 70u}) {
    for (std::size_t k : {0u, 1u, 2u, 3u}) {
      if (k > n) continue;
      std::vector<std::vector<Vertex>> seen;
      ColexCursor cursor(n, k);
      do {
        seen.push_back(cursor.current().to_vector());
        CHECK(cursor.current().count() == k);
      } while (cursor.advance());
      CHECK(seen.size() == binomial(n, k));
      // Colex: compare reversed member lists.
      for (std::size_t i = 1; i < seen.size(); ++i) {
        auto a = seen[i - 1], b = seen[i];
        std::reverse(a.begin(), a.end());
        std::reverse(b.begin(), b.end());
        CHECK(a < b);
      }
      // Unranking agrees with stepping.
      for (std::size_t r = 0; r < seen.size(); r += 7) {
        CHECK(ColexCursor(n, k, r).current().to_vector() == seen[r]);
      }
    }
  }
}

TEST_CASE("parallel lex-min search matches a serial scan") {
  auto pred = [](const VertexSet& s) {
    std::size_t sum = 0;
    for (Vertex v : s) sum += v;
    return sum % 7 == 3;
  };
  for (unsigned workers : {1u, 2u, 4u}) {
    std::uint64_t examined = 0;
    auto got = find_lex_min_subset(18, 5, workers, pred, examined);
    const auto late = find_lex_min_subset(
        18, 5, workers, [](const VertexSet& s) { return s.contains(17) && s.contains(9); },
        examined);
    REQUIRE(late.has_value());
    CHECK(late->to_vector() == std::vector<Vertex>{0, 1, 2, 9, 17});
    examined = 0;
    got = find_lex_min_subset(18, 5, workers, pred, examined);
    REQUIRE(got.has_value());
    CHECK(examined == binomial(18, 5));
    CHECK(got->to_vector() == std::vector<Vertex>{0, 1, 2, 3, 4});
    std::uint64_t all_examined = 0;
    const auto all = collect_subsets(18, 5, workers, pred, all_examined);
    CHECK(all.front() == *got);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(lex_less(all[i - 1], all[i]));
  }
}

}  // TEST_SUITE
