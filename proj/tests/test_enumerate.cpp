#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "domgame/enumerate.hpp"
#include "domgame/graph.hpp"
#include "test_util.hpp"

using namespace domgame;

TEST_CASE("edge mask decoding") {
  CHECK(edge_slot_count(4) == 6);
  Graph g = graph_from_edge_mask(3, 0b001);
  CHECK(g.adjacent(0, 1));
  CHECK(g.size() == 1);
  Graph h = graph_from_edge_mask(4, 0b100110);
  // bits: (0,2), (0,3), (2,3)
  CHECK(h.adjacent(0, 2));
  CHECK(h.adjacent(0, 3));
  CHECK(h.adjacent(2, 3));
  CHECK(h.size() == 3);
}

TEST_CASE("connected counts match independent fold") {
  const std::uint64_t expected[] = {1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_connected_labeled(n) == expected[n - 1]);
  }

  // recount with the matrix oracle, brute force over all masks
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << edge_slot_count(n)); ++mask) {
      testutil::MatrixGraph m(graph_from_edge_mask(n, mask));
      if (testutil::matrix_connected(m)) ++count;
    }
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("stream is ascending and consistent") {
  auto masks = connected_edge_masks(3);
  CHECK(masks == std::vector<std::uint32_t>{3, 5, 6, 7});

  std::size_t i = 0;
  auto masks4 = connected_edge_masks(4);
  for_each_connected_labeled(4, [&](const Graph& g) {
    REQUIRE(i < masks4.size());
    CHECK(g == graph_from_edge_mask(4, masks4[i]));
    CHECK(is_connected(g));
    ++i;
  });
  CHECK(i == masks4.size());
  for (std::size_t j = 1; j < masks4.size(); ++j) {
    CHECK(masks4[j - 1] < masks4[j]);
  }
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(connected_edge_masks(0), std::invalid_argument);
  CHECK_THROWS_AS(connected_edge_masks(8), std::invalid_argument);
  CHECK_THROWS_AS(count_connected_labeled(kEnumerationCap + 1),
                  std::invalid_argument);
}
