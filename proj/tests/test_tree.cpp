#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftlab/tree.hpp"

#include <algorithm>
#include <set>

using namespace shiftlab;

namespace {

std::set<Vertex> to_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("smallest truncation") {
  FiniteTree t = make_truncation(1, 1, 1);
  CHECK(t.vertex_count() == 3);
  CHECK(t.contains(Vertex::spine(0)));
  CHECK(t.contains(Vertex::spine(1)));
  CHECK(t.contains(Vertex::branch(1, 1)));
  CHECK_FALSE(t.contains(Vertex::branch(1, 2)));
  CHECK(*t.parent(Vertex::spine(0)) == Vertex::spine(1));
  CHECK(*t.parent(Vertex::branch(1, 1)) == Vertex::spine(0));
  CHECK_FALSE(t.parent(Vertex::spine(1)).has_value());
  CHECK(t.children(Vertex::spine(1)) == std::vector<Vertex>{Vertex::spine(0)});
  CHECK(t.children(Vertex::branch(1, 1)).empty());
}

TEST_CASE("vertex counts") {
  CHECK(make_truncation(2, 3, 2).vertex_count() == 9);
  FiniteTree big = make_truncation(30, 40, 30);
  CHECK(big.vertex_count() == 1231);
  CHECK(big.children(Vertex::spine(0)).size() == 40);
}

TEST_CASE("rejects bad dimensions") {
  CHECK_THROWS_AS(make_truncation(0, 1, 1), invalid_parameter);
  CHECK_THROWS_AS(make_truncation(1, -2, 1), invalid_parameter);
  CHECK_THROWS_AS(make_truncation(1, 1, 0), invalid_parameter);
}

TEST_CASE("deterministic ordering: spine by decreasing label, then branches") {
  FiniteTree t = make_truncation(2, 2, 3);
  CHECK(t.index_of(Vertex::spine(0)) == 0);
  CHECK(t.index_of(Vertex::spine(1)) == 1);
  CHECK(t.index_of(Vertex::spine(2)) == 2);
  CHECK(t.index_of(Vertex::branch(1, 1)) == 3);
  CHECK(t.index_of(Vertex::branch(1, 3)) == 5);
  CHECK(t.index_of(Vertex::branch(2, 1)) == 6);
  for (long i = 0; i < t.vertex_count(); ++i) CHECK(t.index_of(t.vertex_at(i)) == i);
}

TEST_CASE("parent/children round trip") {
  FiniteTree t = make_truncation(4, 3, 4);
  for (const auto& v : t.vertices()) {
    auto p = t.parent(v);
    if (!p) {
      CHECK(v == Vertex::spine(t.spine_depth()));
      continue;
    }
    auto kids = t.children(*p);
    CHECK(std::find(kids.begin(), kids.end(), v) != kids.end());
  }
  for (const auto& u : t.vertices())
    for (const auto& v : t.children(u)) CHECK(*t.parent(v) == u);
}

TEST_CASE("interior vertices: smallest truncation has none") {
  FiniteTree t = make_truncation(1, 1, 1);
  CHECK(interior_vertices(t, 1).empty());
}

TEST_CASE("interior vertices: worked instance") {
  // Balls of radius 2: branch depths 2..3 survive; spine vertices -2 and -3
  // reach the branching vertex only as a ball endpoint, so its fan does not
  // count; everything else leaves the truncation or meets the fan.
  FiniteTree t = make_truncation(5, 2, 5);
  auto got = to_set(interior_vertices(t, 2));
  std::set<Vertex> expect{Vertex::spine(2),     Vertex::spine(3),
                          Vertex::branch(1, 2), Vertex::branch(1, 3),
                          Vertex::branch(2, 2), Vertex::branch(2, 3)};
  CHECK(got == expect);
  CHECK(got.count(Vertex::branch(1, 4)) == 0);
}

TEST_CASE("interior vertices: radius beyond all dimensions") {
  CHECK(interior_vertices(make_truncation(3, 3, 3), 10).empty());
}

TEST_CASE("interior is monotone decreasing in radius") {
  FiniteTree t = make_truncation(6, 3, 6);
  auto prev = to_set(interior_vertices(t, 1));
  for (long r = 2; r <= 4; ++r) {
    auto cur = to_set(interior_vertices(t, r));
    CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
    prev = std::move(cur);
  }
}

TEST_CASE("fan-tail interior extends the strict interior") {
  FiniteTree t = make_truncation(5, 2, 5);
  auto strict = to_set(interior_vertices(t, 2));
  auto ext = to_set(interior_vertices_with_fan_tail(t, 2));
  CHECK(std::includes(ext.begin(), ext.end(), strict.begin(), strict.end()));
  CHECK(ext.count(Vertex::spine(0)) == 1);
  CHECK(ext.count(Vertex::spine(1)) == 1);
  CHECK(ext.count(Vertex::branch(1, 1)) == 1);
  // The spine end still lacks its parent side.
  CHECK(ext.count(Vertex::spine(5)) == 0);
}

TEST_CASE("fan-tail interior still requires existing branches to be deep enough") {
  // J = 1: the existing fan branches stop at depth 1. A radius-2 ball at the
  // branching vertex needs depth 2 on branches k <= I, which the tail does
  // not cover; Spine(1)'s radius-2 ball only needs depth 1 and is fine.
  FiniteTree t = make_truncation(5, 2, 1);
  auto ext2 = to_set(interior_vertices_with_fan_tail(t, 2));
  CHECK(ext2.count(Vertex::spine(0)) == 0);
  CHECK(ext2.count(Vertex::spine(1)) == 1);
  auto ext3 = to_set(interior_vertices_with_fan_tail(t, 3));
  CHECK(ext3.count(Vertex::spine(1)) == 0);
}

TEST_CASE("vertex names and parsing") {
  CHECK(Vertex::spine(3).name() == "s-3");
  CHECK(Vertex::branch(2, 5).name() == "b2.5");
  CHECK(*Vertex::parse("s-3") == Vertex::spine(3));
  CHECK(*Vertex::parse("s0") == Vertex::spine(0));
  CHECK(*Vertex::parse("b2.5") == Vertex::branch(2, 5));
  CHECK_FALSE(Vertex::parse("s2").has_value());
  CHECK_FALSE(Vertex::parse("b0.1").has_value());
  CHECK_FALSE(Vertex::parse("x1").has_value());
}
