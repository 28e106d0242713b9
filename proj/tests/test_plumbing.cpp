#include <doctest.h>

#include "planar_monoid/designs.hpp"
#include "planar_monoid/plumbing.hpp"

using namespace pm;

TEST_CASE("star graphs") {
  const auto g = plumbing_of(BoundaryWord(SurfaceSpec(5), {2, 1, 1, 1}, 1));
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0].weight == -5);
  CHECK(g.vertices[1].weight == -2);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});

  for (int n = 3; n <= 9; ++n) {
    const auto single = plumbing_of(BoundaryWord(SurfaceSpec(n), std::vector<int>(static_cast<std::size_t>(n - 1), 1)));
    CHECK(single.vertices.size() == 1);
    CHECK(single.vertices[0].weight == -n);
    CHECK(single.edges.empty());
  }

  const auto g6 = plumbing_of(BoundaryWord(SurfaceSpec(6), {3, 3, 3, 3, 3}, 1));
  CHECK(g6.vertices.size() == 11);
  CHECK(g6.edges.size() == 10);
  int centre_degree = 0;
  for (const auto& [a, b] : g6.edges) centre_degree += a == 0 ? 1 : 0;
  CHECK(centre_degree == 5);

  CHECK_THROWS(plumbing_of(BoundaryWord(SurfaceSpec(5), {1, 1, 1, 1}, 2)));
  CHECK_THROWS(plumbing_of(BoundaryWord(SurfaceSpec(5), {0, 1, 1, 1}, 1)));
}

TEST_CASE("vertex count is one plus the sum of a_i - 1") {
  for (int n = 5; n <= 8; ++n) {
    for (int i = 2; i < n - 1; ++i) {
      const auto lhs = daisy(n, i).lhs;
      int extra = 0;
      for (int a : lhs.exponents) extra += a - 1;
      CHECK(plumbing_of(lhs).vertices.size() == static_cast<std::size_t>(1 + extra));
    }
  }
}

TEST_CASE("euler characteristic") {
  const Relation d = daisy(6, 2);
  CHECK(euler_characteristic(d.lhs) == 12);
  CHECK(euler_characteristic(d.lhs.expand()) == 12);
  CHECK(euler_characteristic(d.rhs) == 6);
  CHECK(euler_characteristic(TwistWord(SurfaceSpec(5), {})) == -3);
  TwistWord w = d.rhs;
  const int before = euler_characteristic(w);
  w.factors.push_back(ConvexCurve::around({1, 2}));
  CHECK(euler_characteristic(w) == before + 1);
}

TEST_CASE("closed forms match the daisy family") {
  CHECK(chi_formulas(6, 2) == std::pair<int, int>{12, 6});
  CHECK(chi_formulas(5, 3) == std::pair<int, int>{3, 1});
  CHECK(chi_formulas(7, 2) == std::pair<int, int>{20, 10});
  CHECK_THROWS(chi_formulas(6, 5));
  CHECK_THROWS(chi_formulas(6, 1));
  for (int n = 4; n <= 12; ++n) {
    for (int i = 2; i < n - 1; ++i) {
      const Relation r = daisy(n, i);
      CHECK(chi_formulas(n, i) == std::pair<int, int>{euler_characteristic(r.lhs), euler_characteristic(r.rhs)});
    }
  }
}

TEST_CASE("bounds") {
  CHECK(bounds(5) == BoundsReport{5, 6, 9, 3, 6});
  CHECK(bounds(7) == BoundsReport{7, 10, 25, 5, 20});
  CHECK(bounds(6).min_chi == 4);
  CHECK_THROWS(bounds(4));
  for (int n = 5; n <= 12; ++n) {
    const auto b = bounds(n);
    CHECK(b.max_chi - b.min_chi == (n - 2) * (n - 4));
    CHECK(b.min_twists == daisy(n, n - 2).lhs.twist_count());
    CHECK(b.max_twists == daisy(n, 2).lhs.twist_count());
  }
}

TEST_CASE("emit and parse") {
  PlumbingGraph single;
  single.vertices.push_back({0, -5});
  const auto dot = emit(single, GraphFormat::dot);
  CHECK(dot.find("label=\"-5\"") != std::string::npos);
  CHECK(dot.find("--") == std::string::npos);

  const auto g = plumbing_of(BoundaryWord(SurfaceSpec(6), {2, 1, 1, 1, 1}, 1));
  const auto dot2 = emit(g, GraphFormat::dot);
  CHECK(dot2.find("v0 -- v1") != std::string::npos);
  CHECK(dot2.find("label=\"-6\"") != std::string::npos);
  CHECK(dot2.find("label=\"-2\"") != std::string::npos);
  CHECK(emit(g, GraphFormat::json) == R"({"vertices":[{"id":0,"weight":-6},{"id":1,"weight":-2}],"edges":[[0,1]]})");

  for (int n = 5; n <= 8; ++n) {
    for (int i = 2; i < n - 1; ++i) {
      const auto h = plumbing_of(daisy(n, i).lhs);
      CHECK(parse_plumbing_json(emit(h, GraphFormat::json)) == h);
    }
  }
  CHECK_THROWS(parse_plumbing_json(R"({"vertices":[{"id":0,"weight":-5}],"edges":[[0,1]]})"));
}
