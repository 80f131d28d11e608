#include "test_helpers.hpp"

using namespace nmult;
using testutil::zv;

static NewtonRegion region2(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<ZVec> g;
  for (auto row : gens) g.push_back(zv(row));
  return region_from_generators((int)gens.begin()->size(), g);
}

TEST_CASE("region construction") {
  auto s = simplex_region(2);
  REQUIRE(s.vertices() == std::vector<QVec>{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  REQUIRE(s.facets().size() == 1);
  REQUIRE(s.facets()[0].normal == zv({1, 1}));
  REQUIRE(s.facets()[0].offset == 1);

  auto p = region2({{2, 0}, {1, 1}, {0, 3}});
  REQUIRE(p.vertices().size() == 3);  // (1,1) lies below the segment (2,0)-(0,3)

  auto q = region2({{1, 0}, {2, 0}, {1, 1}});
  REQUIRE(q.vertices() == std::vector<QVec>{{Rat(1), Rat(0)}});
  REQUIRE_FALSE(is_co_bounded(q));

  REQUIRE_THROWS_AS(region_from_generators(2, std::vector<ZVec>{}), value_error);
  REQUIRE_THROWS_AS(region_from_generators(2, std::vector<QVec>{{Rat(-1), Rat(0)}}), value_error);
}

TEST_CASE("cross-representation consistency") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 20; ++t) {
    int dim = t % 2 ? 3 : 2;
    auto p = testutil::random_region(rng, dim);
    // Rebuilding from the vertex list reproduces the identical canonical form.
    auto rebuilt = region_from_generators(dim, p.vertices());
    REQUIRE(rebuilt == p);
    for (const auto& v : p.vertices())
      for (const auto& f : p.facets()) REQUIRE(dot(f.normal, v) >= f.offset);
  }
}

TEST_CASE("scale") {
  auto s = simplex_region(2);
  auto s2 = scale(s, Rat(2));
  REQUIRE(s2.facets()[0].offset == 2);
  REQUIRE(scale(s, Rat(1)) == s);
  auto p = region2({{2, 0}, {0, 3}});
  REQUIRE(scale(scale(p, Rat(3)), Rat(1, 3)) == p);
  REQUIRE_THROWS_AS(scale(p, Rat(0)), value_error);
  REQUIRE_THROWS_AS(scale(p, Rat(-1)), value_error);
}

TEST_CASE("minkowski sum") {
  auto s = simplex_region(2);
  REQUIRE(minkowski_sum(s, s) == scale(s, Rat(2)));
  auto sum = minkowski_sum(region2({{2, 0}, {0, 2}}), s);
  REQUIRE(sum == scale(s, Rat(3)));
  REQUIRE_THROWS_AS(minkowski_sum(s, simplex_region(3)), value_error);
}

TEST_CASE("co-boundedness") {
  REQUIRE(is_co_bounded(simplex_region(2)));
  REQUIRE_FALSE(is_co_bounded(region2({{1, 0}})));
  REQUIRE(is_co_bounded(region2({{3, 0}, {0, 2}})));
}

TEST_CASE("covolume examples") {
  REQUIRE(covolume(simplex_region(2)) == Rat(1, 2));
  REQUIRE(covolume(region2({{2, 0}, {0, 3}})) == 3);
  // conv{(0,k+1),(k,1),(2k,0)} at k=4
  REQUIRE(covolume(region2({{0, 5}, {4, 1}, {8, 0}})) == 14);
  REQUIRE_THROWS_AS(covolume(region2({{1, 0}})), value_error);
  REQUIRE(covolume(simplex_region(3)) == Rat(1, 6));
}

TEST_CASE("staircase and triangulation paths agree") {
  std::mt19937 rng(7);
  for (int t = 0; t < 25; ++t) {
    auto p = testutil::random_region(rng, 2);
    REQUIRE(covolume(p) == covolume_by_triangulation(p));
    auto ps = scale(p, Rat(3, 2));
    REQUIRE(covolume(ps) == covolume_by_triangulation(ps));
  }
}

TEST_CASE("grid oracle examples") {
  auto s = simplex_region(2);
  REQUIRE(covolume_grid_oracle(s, 1) == 1);
  Rat e1000 = covolume_grid_oracle(s, 1000) - Rat(1, 2);
  REQUIRE(e1000 >= 0);
  REQUIRE(e1000 <= Rat(3, 1000));
  Rat e500 = covolume_grid_oracle(region2({{2, 0}, {0, 3}}), 500) - 3;
  if (e500 < 0) e500 = -e500;
  REQUIRE(e500 <= Rat(2, 100));
}

TEST_CASE("grid oracle error bound and halving") {
  std::mt19937 rng(99);
  for (int t = 0; t < 12; ++t) {
    int dim = t % 3 == 2 ? 3 : 2;
    auto p = testutil::random_region(rng, dim);
    Rat cv = covolume(p);
    auto reach = axis_reaches_or_throw(p);
    Rat cp = 0;
    for (int i = 0; i < dim; ++i) {
      Rat prod = 1;
      for (int j = 0; j < dim; ++j)
        if (j != i) prod *= reach[j] + 1;
      cp += prod;
    }
    cp *= 2;
    auto err = [&](long n) {
      Rat d = covolume_grid_oracle(p, n) - cv;
      return d < 0 ? -d : d;
    };
    Rat e100 = err(100), e200 = err(200), e400 = err(400);
    REQUIRE(e100 <= cp / 100);
    REQUIRE(e200 <= cp / 200);
    REQUIRE(e400 <= cp / 400);
    REQUIRE(e200 <= e100 / 2 + Rat(4, 200 * 200));
    REQUIRE(e400 <= e200 / 2 + Rat(4, 400 * 400));
  }
}

TEST_CASE("mixed covolume") {
  auto s = simplex_region(2);
  REQUIRE(mixed_covolume({s, s}) == Rat(1, 2));
  auto q = region2({{2, 0}, {0, 2}});
  REQUIRE(mixed_covolume({s, q}) == 1);
  auto a = region2({{2, 0}, {0, 3}});
  auto b = region2({{3, 0}, {0, 2}});
  REQUIRE(mixed_covolume({a, b}) == mixed_covolume({b, a}));
  REQUIRE_THROWS_AS(mixed_covolume({s}), value_error);
  REQUIRE_THROWS_AS(mixed_covolume({s, simplex_region(3)}), value_error);
  REQUIRE_THROWS_AS(mixed_covolume({s, region2({{1, 0}})}), value_error);
}

TEST_CASE("mixed covolume is multilinear") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    auto p = testutil::random_region(rng, 2);
    auto q = testutil::random_region(rng, 2);
    auto r = testutil::random_region(rng, 2);
    Rat tt(3, 2), ss(2, 5);
    auto combo = minkowski_sum(scale(p, tt), scale(q, ss));
    REQUIRE(mixed_covolume({combo, r}) ==
            tt * mixed_covolume({p, r}) + ss * mixed_covolume({q, r}));
  }
}

TEST_CASE("support values") {
  auto s = simplex_region(2);
  REQUIRE(support_value(s, zv({1, 1})) == 1);
  auto p = region2({{2, 0}, {0, 3}});
  REQUIRE(support_value(p, zv({1, 1})) == 2);
  REQUIRE(support_value(p, zv({3, 1})) == 3);
  REQUIRE_THROWS_AS(support_value(p, zv({0, 0})), value_error);
  REQUIRE_THROWS_AS(support_value(p, QVec{Rat(-1), Rat(1)}), value_error);
}

TEST_CASE("support function laws") {
  std::mt19937 rng(55);
  for (int t = 0; t < 15; ++t) {
    auto p = testutil::random_region(rng, 2);
    auto q = testutil::random_region(rng, 2);
    QVec w{Rat(1 + t % 3), Rat(1 + t % 2)};
    REQUIRE(support_value(minkowski_sum(p, q), w) == support_value(p, w) + support_value(q, w));
    REQUIRE(support_value(scale(p, Rat(5, 3)), w) == Rat(5, 3) * support_value(p, w));
  }
}

TEST_CASE("containment") {
  auto s = simplex_region(2);
  REQUIRE(region_contains(s, scale(s, Rat(2))));
  REQUIRE_FALSE(region_contains(scale(s, Rat(2)), s));
  auto p = region2({{2, 0}, {0, 3}});
  REQUIRE(region_contains(p, p));
  REQUIRE_THROWS_AS(region_contains(p, simplex_region(3)), value_error);
}

TEST_CASE("containment matches support comparison on facet normals") {
  std::mt19937 rng(77);
  for (int t = 0; t < 20; ++t) {
    auto p = testutil::random_region(rng, 2);
    auto q = t % 2 ? minkowski_sum(p, testutil::random_region(rng, 2))
                   : testutil::random_region(rng, 2);
    bool by_support = true;
    for (const auto& f : p.facets())
      if (support_value(p, f.normal) > support_value(q, f.normal)) by_support = false;
    REQUIRE(region_contains(p, q) == by_support);
  }
}

TEST_CASE("interior criterion") {
  auto s2 = scale(simplex_region(2), Rat(2));
  REQUIRE_FALSE(interior_contains(s2, QVec{Rat(1), Rat(1)}));
  REQUIRE(interior_contains(s2, QVec{Rat(2), Rat(1)}));
  REQUIRE_FALSE(interior_contains(simplex_region(2), QVec{Rat(0), Rat(0)}));
  REQUIRE_THROWS_AS(interior_contains(s2, QVec{Rat(1)}), value_error);
}

TEST_CASE("covolume homogeneity and monotonicity") {
  std::mt19937 rng(42);
  for (int t = 0; t < 15; ++t) {
    int dim = t % 3 == 2 ? 3 : 2;
    auto p = testutil::random_region(rng, dim);
    Rat cv = covolume(p);
    for (const Rat& f : {Rat(2), Rat(1, 2), Rat(5, 3)}) {
      Rat fn = 1;
      for (int i = 0; i < dim; ++i) fn *= f;
      REQUIRE(covolume(scale(p, f)) == fn * cv);
    }
    // P + R sits inside P, so its complement is at least as large.
    auto q = minkowski_sum(p, testutil::random_region(rng, dim));
    REQUIRE(region_contains(p, q));
    REQUIRE(covolume(q) >= cv);
  }
}

TEST_CASE("covolume Minkowski inequality") {
  std::mt19937 rng(4242);
  int checked = 0;
  while (checked < 12) {
    int dim = checked % 2 ? 3 : 2;
    auto p = testutil::random_region(rng, dim);
    auto q = testutil::random_region(rng, dim);
    if (testutil::rational_homothety(p, q)) continue;
    REQUIRE(testutil::nth_root_subadditive(covolume(minkowski_sum(p, q)), covolume(p),
                                           covolume(q), dim));
    ++checked;
  }
  // Homothetic pairs attain equality exactly.
  auto p = testutil::random_region(rng, 2);
  auto q = scale(p, Rat(2));
  Rat a = covolume(minkowski_sum(p, q)), b = covolume(p), c = covolume(q);
  REQUIRE(a == 9 * b);  // (1+2)^2
  REQUIRE(c == 4 * b);
}

TEST_CASE("covolume in dimension four") {
  REQUIRE(covolume(simplex_region(4)) == Rat(1, 24));
  auto p = region_from_generators(
      4, std::vector<ZVec>{zv({2, 0, 0, 0}), zv({0, 2, 0, 0}), zv({0, 0, 2, 0}),
                           zv({0, 0, 0, 2}), zv({1, 1, 0, 0})});
  REQUIRE(covolume(p) == covolume_by_triangulation(p));
  REQUIRE(covolume(scale(p, Rat(2))) == 16 * covolume(p));
}
