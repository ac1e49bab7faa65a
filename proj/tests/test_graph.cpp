#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "domgame/families.hpp"
#include "domgame/graph.hpp"
#include "domgame/vertex_set.hpp"

using namespace domgame;

TEST_CASE("vertex set basics") {
  VertexSet s;
  CHECK(s.empty());
  CHECK(s.count() == 0);
  s = VertexSet::single(3);
  CHECK(s.test(3));
  CHECK_FALSE(s.test(2));
  CHECK(s.count() == 1);
  CHECK(s.lowest() == 3);

  VertexSet f = VertexSet::first(4);
  CHECK(f.count() == 4);
  CHECK(f.test(0));
  CHECK(f.test(3));
  CHECK_FALSE(f.test(4));
  CHECK(s.is_subset_of(f));
  CHECK_FALSE(f.is_subset_of(s));

  CHECK((f - s).count() == 3);
  CHECK((f & s) == s);
  CHECK((s | VertexSet::single(0)).count() == 2);

  std::vector<int> seen;
  for (int v : f.with(7)) seen.push_back(v);
  CHECK(seen == std::vector<int>{0, 1, 2, 3, 7});
}

TEST_CASE("graph construction and accessors") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.max_degree() == 2);
  CHECK(g.vertices() == VertexSet::first(4));
  CHECK(g.neighbors(1) == (VertexSet::single(0) | VertexSet::single(2)));
  CHECK(g.closed_neighbors(1) ==
        (VertexSet::single(0) | VertexSet::single(1) | VertexSet::single(2)));
  CHECK(g.edge_list() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  VertexSet ends = VertexSet::single(0) | VertexSet::single(3);
  CHECK(g.neighbors(ends) == (VertexSet::single(1) | VertexSet::single(2)));
  CHECK(g.closed_neighbors(ends) == g.vertices());
}

TEST_CASE("duplicate edges collapse, self loops rejected") {
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
}

TEST_CASE("labels") {
  Graph g(2, {{0, 1}}, {"a", "b"});
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  Graph plain(2, {{0, 1}});
  CHECK(plain.label(1) == "1");
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"a"}), std::invalid_argument);
  CHECK(format_set(g, g.vertices()) == "{a, b}");
}

TEST_CASE("structural equality ignores labels") {
  Graph a(3, {{0, 1}, {1, 2}});
  Graph b(3, {{1, 2}, {0, 1}}, {"x", "y", "z"});
  Graph c(3, {{0, 1}, {0, 2}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(7)));
  CHECK(is_connected(Graph(1, {})));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_connected(Graph(2, {})));

  Graph p3 = path(3);
  CHECK(is_connected_within(p3, VertexSet{}));
  CHECK(is_connected_within(p3, VertexSet::single(2)));
  CHECK(is_connected_within(p3, VertexSet::first(3)));
  CHECK_FALSE(is_connected_within(
      p3, VertexSet::single(0) | VertexSet::single(2)));
}

TEST_CASE("neighborhood inclusion") {
  auto hit = neighborhood_inclusion(path(4));
  REQUIRE(hit.has_value());
  CHECK(hit->first == 0);
  CHECK(hit->second == 1);
  CHECK_FALSE(is_non_inclusive(path(4)));
  CHECK_FALSE(is_non_inclusive(star(4)));
  CHECK_FALSE(is_non_inclusive(complete(5)));

  CHECK(is_non_inclusive(cycle(4)));
  CHECK(is_non_inclusive(cycle(6)));
  CHECK(is_non_inclusive(cycle(64)));
  CHECK_FALSE(is_non_inclusive(path(64)));
}

TEST_CASE("universal vertex") {
  CHECK(has_universal_vertex(paw()));
  CHECK(has_universal_vertex(star(5)));
  CHECK(has_universal_vertex(complete(3)));
  CHECK(has_universal_vertex(Graph(1, {})));
  CHECK_FALSE(has_universal_vertex(path(4)));
  CHECK_FALSE(has_universal_vertex(cycle(5)));
}
