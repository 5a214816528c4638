#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "condcolor/coloring.hpp"
#include "condcolor/families.hpp"

using namespace condcolor;

namespace {

Coloring random_coloring(int n, int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(1, k);
  Coloring c;
  c.k = k;
  c.colors.resize(static_cast<std::size_t>(n));
  for (auto& col : c.colors) col = dist(rng);
  return c;
}

std::vector<Graph> small_zoo() {
  return {path(5), cycle(6), complete(4), wheel(5), cycle_square(8),
          cartesian_product(path(2), path(5)), strong_product(path(2), path(4)), web(2, 4)};
}

}  // namespace

TEST_CASE("verify_proper") {
  CHECK(verify_proper(cycle(4), {2, {1, 2, 1, 2}}).valid());
  Verdict bad = verify_proper(cycle(3), {2, {1, 1, 2}});
  REQUIRE(bad.proper.size() == 1);
  CHECK(bad.proper[0].u == 0);
  CHECK(bad.proper[0].v == 1);
  CHECK(bad.proper[0].shared_color == 1);
  CHECK_THROWS_AS(verify_proper(cycle(4), {2, {1, 2, 1}}), std::invalid_argument);
}

TEST_CASE("verify_conditional reports deficits") {
  // parity coloring of C_6: both neighbors of every vertex share one color
  Verdict v = verify_conditional(cycle(6), {2, {1, 2, 1, 2, 1, 2}}, {2, 2});
  CHECK(v.proper.empty());
  CHECK(v.deficits.size() == 6);
  for (const auto& d : v.deficits) {
    CHECK(d.distinct_found == 1);
    CHECK(d.required == 2);
  }
}

TEST_CASE("verify_conditional accepts the mod-5 cycle-square pattern") {
  Graph g = cycle_square(10);
  Coloring c{5, {}};
  for (int i = 1; i <= 10; ++i) c.colors.push_back((i - 1) % 5 + 1);
  CHECK(verify_conditional(g, c, {4, 5}).valid());
}

TEST_CASE("truncated mod-5 pattern breaks near the wrap") {
  Graph g = cycle_square(11);
  Coloring c{5, {}};
  for (int i = 1; i <= 11; ++i) c.colors.push_back((i - 1) % 5 + 1);
  Verdict v = verify_conditional(g, c, {4, 5});
  CHECK_FALSE(v.valid());
  // c(v_1) = c(v_11) = 1 and they are adjacent
  bool wrap_conflict = std::any_of(v.proper.begin(), v.proper.end(), [](const ProperViolation& p) {
    return p.u == 0 && p.v == 10;
  });
  CHECK(wrap_conflict);
}

TEST_CASE("color exceeding k is rejected") {
  CHECK_THROWS_AS(verify_conditional(cycle(3), {2, {1, 2, 3}}, {1, 2}), std::invalid_argument);
}

TEST_CASE("strict surjectivity") {
  Coloring c{5, {1, 2, 3, 4}};  // complete(4), color 5 unused
  Verdict non_strict = verify_conditional(complete(4), c, {2, 5});
  CHECK(non_strict.valid());
  Verdict strict = verify_conditional(complete(4), c, {2, 5}, true);
  REQUIRE(strict.gap.has_value());
  CHECK(strict.gap->missing == std::set<int>{5});
}

TEST_CASE("distinct_colors_used") {
  CHECK(distinct_colors_used({1, {1, 1, 1}}) == 1);
  CHECK(distinct_colors_used({4, {1, 2, 3, 4}}) == 4);
}

TEST_CASE("compact renumbers onto 1..distinct") {
  Coloring c = compact({9, {7, 3, 7, 9}});
  CHECK(c.k == 3);
  CHECK(c.colors == std::vector<int>{1, 2, 1, 3});
}

TEST_CASE("r=1 conditional equals proper on connected graphs") {
  std::mt19937 rng(7);
  for (const Graph& g : small_zoo()) {
    for (int trial = 0; trial < 40; ++trial) {
      Coloring c = random_coloring(g.vertex_count(), 4, rng);
      CHECK(verify_conditional(g, c, {1, 4}).valid() == verify_proper(g, c).valid());
    }
  }
}

TEST_CASE("validity is monotone downward in r") {
  std::mt19937 rng(11);
  for (const Graph& g : small_zoo()) {
    for (int trial = 0; trial < 40; ++trial) {
      Coloring c = random_coloring(g.vertex_count(), 5, rng);
      for (int r = 2; r <= 4; ++r) {
        if (verify_conditional(g, c, {r, 5}).valid())
          CHECK(verify_conditional(g, c, {r - 1, 5}).valid());
      }
    }
  }
}

TEST_CASE("deficit counts match a naive recount") {
  std::mt19937 rng(13);
  for (const Graph& g : small_zoo()) {
    for (int trial = 0; trial < 25; ++trial) {
      Coloring c = random_coloring(g.vertex_count(), 3, rng);
      Verdict v = verify_conditional(g, c, {3, 3});
      for (const auto& d : v.deficits) {
        std::set<int> seen;
        for (VertexId u : g.neighbors(d.v)) seen.insert(c.color(u));
        CHECK(d.distinct_found == static_cast<int>(seen.size()));
        CHECK(d.required == std::min(3, g.degree(d.v)));
      }
    }
  }
}

TEST_CASE("validity is invariant under color permutation") {
  std::mt19937 rng(17);
  std::vector<int> perm{1, 2, 3, 4, 5};
  for (const Graph& g : small_zoo()) {
    for (int trial = 0; trial < 25; ++trial) {
      Coloring c = random_coloring(g.vertex_count(), 5, rng);
      std::shuffle(perm.begin(), perm.end(), rng);
      Coloring mapped = c;
      for (auto& col : mapped.colors) col = perm[static_cast<std::size_t>(col - 1)];
      CHECK(verify_conditional(g, c, {2, 5}).valid() ==
            verify_conditional(g, mapped, {2, 5}).valid());
    }
  }
}
