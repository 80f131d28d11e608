#include "test_helpers.hpp"

using namespace nmult;
using testutil::ideal2;
using testutil::zv;

TEST_CASE("minimalize") {
  auto a = minimalize(2, {zv({1, 0}), zv({1, 1}), zv({0, 2})});
  REQUIRE(a.generators() == std::vector<ZVec>{zv({0, 2}), zv({1, 0})});
  auto b = minimalize(2, {zv({2, 1}), zv({1, 2})});
  REQUIRE(b.generators().size() == 2);
  auto u = minimalize(2, {zv({0, 0})});
  REQUIRE(u.is_unit());
  REQUIRE_THROWS_AS(MonomialIdeal::from_generators(2, {}), value_error);
  REQUIRE_THROWS_AS(MonomialIdeal::from_generators(2, {zv({-1, 0})}), value_error);
}

TEST_CASE("membership") {
  auto a = ideal2({{2, 0}, {0, 3}});
  REQUIRE(contains_monomial(a, zv({2, 1})));
  REQUIRE_FALSE(contains_monomial(a, zv({1, 2})));
  auto kw3 = GradedSystem::kw1().ideal_at(3);
  REQUIRE(contains_monomial(kw3, zv({0, 4})));
  REQUIRE_FALSE(contains_monomial(kw3, zv({0, 3})));
  REQUIRE_THROWS_AS(contains_monomial(a, zv({1, 1, 1})), value_error);
}

TEST_CASE("ideal algebra") {
  auto m = maximal_ideal(2);
  auto m2 = product(m, m);
  REQUIRE(m2.generators() == std::vector<ZVec>{zv({0, 2}), zv({1, 1}), zv({2, 0})});
  auto m3 = power(m, 3);
  REQUIRE(m3.generators().size() == 4);
  for (const auto& g : m3.generators()) REQUIRE(g[0] + g[1] == 3);
  auto s = sum(MonomialIdeal::from_generators(2, {zv({2, 0})}),
               MonomialIdeal::from_generators(2, {zv({0, 3})}));
  REQUIRE(s == ideal2({{2, 0}, {0, 3}}));
  REQUIRE_THROWS_AS(product(m, maximal_ideal(3)), value_error);
  REQUIRE_THROWS_AS(power(m, 0), value_error);
}

TEST_CASE("power agrees with iterated products") {
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto a = testutil::random_m_primary(rng, 2);
    MonomialIdeal acc = a;
    for (int k = 2; k <= 4; ++k) {
      acc = product(acc, a);
      REQUIRE(power(a, k) == acc);
    }
  }
}

TEST_CASE("m-primary test") {
  REQUIRE(is_m_primary(ideal2({{2, 0}, {0, 3}})));
  REQUIRE_FALSE(is_m_primary(minimalize(2, {zv({1, 0}), zv({1, 1})})));
  REQUIRE(is_m_primary(unit_ideal(2)));
}

TEST_CASE("colength") {
  REQUIRE(colength(maximal_ideal(2)) == 1);
  REQUIRE(colength(ideal2({{2, 0}, {0, 3}})) == 6);
  REQUIRE(colength(ideal2({{2, 0}, {1, 1}, {0, 2}})) == 3);
  REQUIRE(colength(unit_ideal(3)) == 0);
  REQUIRE_THROWS_AS(colength(minimalize(2, {zv({1, 0})})), value_error);
}

TEST_CASE("samuel multiplicity") {
  REQUIRE(samuel_multiplicity(maximal_ideal(2)) == 1);
  REQUIRE(samuel_multiplicity(ideal2({{2, 0}, {0, 3}})) == 6);
  REQUIRE(samuel_multiplicity(GradedSystem::kw1().ideal_at(4)) == 28);  // k^2 + 3k
  REQUIRE_THROWS_AS(samuel_multiplicity(minimalize(2, {zv({1, 0})})), value_error);
}

TEST_CASE("samuel oracle") {
  auto seq = samuel_oracle(maximal_ideal(2), 4);
  REQUIRE(seq == std::vector<Rat>{Rat(2), Rat(3, 2), Rat(4, 3), Rat(5, 4)});
  auto seq2 = samuel_oracle(ideal2({{2, 0}, {0, 3}}), 3);
  REQUIRE(seq2.front() >= seq2.back());
  REQUIRE(seq2.back() >= 6);
  auto zero = samuel_oracle(unit_ideal(2), 3);
  for (const auto& x : zero) REQUIRE(x == 0);
  REQUIRE_THROWS_AS(samuel_oracle(maximal_ideal(2), 1), value_error);
}

TEST_CASE("oracle converges to the multiplicity") {
  std::mt19937 rng(333);
  for (int t = 0; t < 6; ++t) {
    int dim = t % 2 ? 3 : 2;
    auto a = testutil::random_m_primary(rng, dim, 3, 2);
    Int e = samuel_multiplicity(a);
    auto seq = samuel_oracle(a, 8);
    Rat err = seq.back() - Rat(e);
    if (err < 0) err = -err;
    REQUIRE(err <= Rat(4 * dim * e, 8));
    // the normalized sequence is non-increasing along doubling indices
    REQUIRE(seq[7] <= seq[3]);
    REQUIRE(seq[3] <= seq[1]);
  }
}

TEST_CASE("mixed multiplicity") {
  auto m = maximal_ideal(2);
  REQUIRE(mixed_multiplicity({m, m}) == 1);
  REQUIRE(mixed_multiplicity({m, ideal2({{2, 0}, {0, 2}})}) == 2);
  auto a = ideal2({{2, 0}, {0, 3}});
  auto b = ideal2({{3, 0}, {0, 2}});
  REQUIRE(mixed_multiplicity({a, b}) == mixed_multiplicity({b, a}));
  REQUIRE_THROWS_AS(mixed_multiplicity({m}), value_error);
  REQUIRE_THROWS_AS(mixed_multiplicity({m, maximal_ideal(3)}), value_error);
}

TEST_CASE("mixed multiplicity diagonal") {
  std::mt19937 rng(17);
  for (int t = 0; t < 8; ++t) {
    int dim = t % 2 ? 3 : 2;
    auto a = testutil::random_m_primary(rng, dim);
    std::vector<MonomialIdeal> diag(dim, a);
    REQUIRE(mixed_multiplicity(diag) == samuel_multiplicity(a));
  }
}

TEST_CASE("mixed multiplicity via polarization of multiplicities") {
  auto m = maximal_ideal(2);
  auto b = ideal2({{2, 0}, {0, 2}});
  Int e_ab = samuel_multiplicity(product(m, b));
  Int e_a = samuel_multiplicity(m);
  Int e_b = samuel_multiplicity(b);
  REQUIRE(e_ab == 9);
  REQUIRE((e_ab - e_a - e_b) / 2 == mixed_multiplicity({m, b}));
}

TEST_CASE("integral closure") {
  auto c = integral_closure(ideal2({{2, 0}, {0, 2}}));
  REQUIRE(c.generators() == std::vector<ZVec>{zv({0, 2}), zv({1, 1}), zv({2, 0})});
  auto m = maximal_ideal(2);
  REQUIRE(integral_closure(m) == m);
  auto x3y = ideal2({{3, 0}, {0, 1}});
  REQUIRE(integral_closure(x3y) == x3y);
}

TEST_CASE("integral closure preserves multiplicity and region") {
  std::mt19937 rng(21);
  for (int t = 0; t < 10; ++t) {
    int dim = t % 2 ? 3 : 2;
    auto a = testutil::random_m_primary(rng, dim, 3, 3);
    auto c = integral_closure(a);
    REQUIRE(samuel_multiplicity(c) == samuel_multiplicity(a));
    REQUIRE(newton_region(c) == newton_region(a));
    REQUIRE(ideal_contains(c, a));
  }
}

TEST_CASE("order of vanishing") {
  REQUIRE(ord(maximal_ideal(2)) == 1);
  REQUIRE(ord(ideal2({{2, 0}, {0, 3}})) == 2);
  REQUIRE(ord(unit_ideal(2)) == 0);
}

TEST_CASE("multiplicity homogeneity") {
  std::mt19937 rng(1212);
  for (int t = 0; t < 10; ++t) {
    int dim = t % 3 == 2 ? 3 : 2;
    auto a = testutil::random_m_primary(rng, dim, 3, 2);
    Int e = samuel_multiplicity(a);
    for (int k = 2; k <= 5; ++k) {
      Int kn = 1;
      for (int i = 0; i < dim; ++i) kn *= k;
      REQUIRE(samuel_multiplicity(power(a, k)) == kn * e);
    }
  }
}

TEST_CASE("containment reverses multiplicity") {
  std::mt19937 rng(888);
  for (int t = 0; t < 12; ++t) {
    int dim = t % 2 ? 3 : 2;
    auto b = testutil::random_m_primary(rng, dim);
    auto a = product(b, testutil::random_m_primary(rng, dim));  // a inside b
    REQUIRE(ideal_contains(b, a));
    REQUIRE(samuel_multiplicity(a) >= samuel_multiplicity(b));
  }
}

TEST_CASE("multiplicity Minkowski inequality") {
  std::mt19937 rng(909);
  int checked = 0;
  while (checked < 10) {
    int dim = checked % 2 ? 3 : 2;
    auto a = testutil::random_m_primary(rng, dim);
    auto b = testutil::random_m_primary(rng, dim);
    if (testutil::rational_homothety(newton_region(a), newton_region(b))) continue;
    REQUIRE(testutil::nth_root_subadditive(Rat(samuel_multiplicity(product(a, b))),
                                           Rat(samuel_multiplicity(a)),
                                           Rat(samuel_multiplicity(b)), dim));
    ++checked;
  }
}

TEST_CASE("dimension one works end to end") {
  auto a = MonomialIdeal::from_generators(1, {zv({3})});
  REQUIRE(is_m_primary(a));
  REQUIRE(colength(a) == 3);
  REQUIRE(samuel_multiplicity(a) == 3);
  REQUIRE(covolume_grid_oracle(newton_region(a), 10) == 3);
  // the interior shift is by a single unit in dimension one: J((x^3)) = (x^3)
  REQUIRE(howald_multiplier(a, Rat(1)) == MonomialIdeal::from_generators(1, {zv({3})}));
  REQUIRE(howald_multiplier(a, Rat(1)) == testutil::howald_box_oracle(a, Rat(1)));
  REQUIRE(mixed_multiplicity({a}) == 3);
  auto s = GradedSystem::power(a);
  REQUIRE(asymptotic_multiplicity(s, {1, 2, 4}).estimate == 3);
}
