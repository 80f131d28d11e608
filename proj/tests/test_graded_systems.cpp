#include "test_helpers.hpp"

using namespace nmult;
using testutil::ideal2;
using testutil::zv;

TEST_CASE("chains") {
  REQUIRE(make_chain(1, 2, 7) == Chain{1, 2, 4, 8, 16, 32, 64});
  REQUIRE_NOTHROW(validate_chain({1, 2, 6, 24}));
  REQUIRE_THROWS_AS(validate_chain({2, 3}), value_error);
  REQUIRE_THROWS_AS(validate_chain({4, 2}), value_error);
  REQUIRE_THROWS_AS(validate_chain({}), value_error);
}

TEST_CASE("system ideals") {
  auto pw = GradedSystem::power(maximal_ideal(2));
  auto a3 = pw.ideal_at(3);
  for (const auto& g : a3.generators()) REQUIRE(g[0] + g[1] == 3);

  auto kw1 = GradedSystem::kw1();
  REQUIRE(kw1.ideal_at(2).generators() ==
          std::vector<ZVec>{zv({0, 3}), zv({1, 2}), zv({2, 1}), zv({4, 0})});

  std::map<int, MonomialIdeal> t;
  t.emplace(1, maximal_ideal(2));
  t.emplace(2, ideal2({{2, 0}, {1, 1}, {0, 2}}));
  auto table = GradedSystem::table(2, std::move(t));
  REQUIRE(table.ideal_at(2) == ideal2({{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE_THROWS_AS(table.ideal_at(3), value_error);
  REQUIRE_THROWS_AS(table.ideal_at(0), value_error);
}

TEST_CASE("affine families") {
  // a_k = m^k * (x^2,y^3)^{floor(k/2)}
  auto s = GradedSystem::affine(
      2, {AffineFactor{maximal_ideal(2), Rat(1), Rat(0)},
          AffineFactor{ideal2({{2, 0}, {0, 3}}), Rat(1, 2), Rat(0)}});
  REQUIRE(s.ideal_at(2) == product(power(maximal_ideal(2), 2), ideal2({{2, 0}, {0, 3}})));
  // degenerate index: all exponents floor to zero
  auto d = GradedSystem::affine(2, {AffineFactor{maximal_ideal(2), Rat(1, 3), Rat(0)}});
  REQUIRE(d.ideal_at(1).is_unit());
  REQUIRE_FALSE(d.ideal_at(3).is_unit());
  REQUIRE(d.primary_from(12) == 1);  // the unit ideal itself is m-primary
}

TEST_CASE("superadditivity validation") {
  REQUIRE(validate_superadditive(GradedSystem::power(maximal_ideal(2)), 8));
  REQUIRE(validate_superadditive(GradedSystem::kw1(), 12));

  // The genuine counterexample: a_1 = (x,y), a_2 = (x^3,y^3) fails at (1,1).
  std::map<int, MonomialIdeal> bad;
  bad.emplace(1, maximal_ideal(2));
  bad.emplace(2, ideal2({{3, 0}, {0, 3}}));
  REQUIRE_THROWS_AS(GradedSystem::table(2, std::move(bad)), value_error);

  // An affine family whose degenerate early indices break the contract.
  auto degenerate = GradedSystem::affine(2, {AffineFactor{maximal_ideal(2), Rat(1, 2), Rat(0)}});
  auto check = validate_superadditive(degenerate, 6);
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.m == 1);
}

TEST_CASE("limit region of power systems") {
  auto s = GradedSystem::power(ideal2({{2, 0}, {0, 3}}));
  auto lr = limit_region(s, {1, 2});
  REQUIRE(lr.stabilized);
  REQUIRE(lr.region == newton_region(ideal2({{2, 0}, {0, 3}})));
  REQUIRE(lr.chain.size() == 2);
  REQUIRE(lr.chain[0].second == lr.chain[1].second);
}

TEST_CASE("limit region of the kw1 example") {
  auto chain = default_chain();
  auto bare = GradedSystem::kw1().without_known_limit();
  auto lr = limit_region(bare, chain);
  REQUIRE_FALSE(lr.stabilized);
  REQUIRE_FALSE(lr.asserted);
  // chain covolumes decrease toward 1/2: (1 + 3/k)/2
  for (std::size_t i = 0; i < chain.size(); ++i) {
    int k = chain[i];
    REQUIRE(lr.chain[i].second == Rat(k + 3, 2 * k));
  }
  // the inner approximation at k=64 still has the vertex (0, 1 + 1/64)
  REQUIRE(lr.region.vertices().front() == QVec{Rat(0), Rat(65, 64)});

  auto asserted = limit_region(GradedSystem::kw1(), chain);
  REQUIRE(asserted.asserted);
  REQUIRE_FALSE(asserted.stabilized);
  REQUIRE(asserted.region == simplex_region(2));

  // a wrong asserted limit is caught by containment
  auto wrong = bare.with_known_limit(scale(simplex_region(2), Rat(2)));
  REQUIRE_THROWS_AS(limit_region(wrong, chain), value_error);
}

TEST_CASE("asymptotic multiplicity") {
  auto chain = default_chain();
  auto pw = GradedSystem::m_powers();
  auto am = asymptotic_multiplicity(pw, chain);
  REQUIRE(am.exact);
  REQUIRE(am.estimate == 1);

  auto kw1 = asymptotic_multiplicity(GradedSystem::kw1(), chain);
  REQUIRE(kw1.exact);
  REQUIRE(kw1.estimate == 1);
  for (const auto& [k, ea] : kw1.table) REQUIRE(ea == Rat(k + 3, k));

  auto p23 = asymptotic_multiplicity(GradedSystem::power(ideal2({{2, 0}, {0, 3}})), chain);
  REQUIRE(p23.exact);
  REQUIRE(p23.estimate == 6);

  // without the asserted limit the kw1 estimate is an upper bound
  auto inner = asymptotic_multiplicity(GradedSystem::kw1().without_known_limit(), chain);
  REQUIRE_FALSE(inner.exact);
  REQUIRE(inner.estimate == Rat(67, 64));
}

TEST_CASE("normalized multiplicities do not increase along the chain") {
  auto chain = default_chain();
  std::mt19937 rng(5150);
  std::vector<GradedSystem> systems = {GradedSystem::kw1(), GradedSystem::m_powers()};
  systems.push_back(GradedSystem::affine(
      2, {AffineFactor{maximal_ideal(2), Rat(1), Rat(1)},
          AffineFactor{ideal2({{2, 0}, {0, 2}}), Rat(1, 2), Rat(1)}}));
  for (int t = 0; t < 3; ++t)
    systems.push_back(GradedSystem::power(testutil::random_m_primary(rng, 2)));
  for (const auto& s : systems) {
    auto am = asymptotic_multiplicity(s, chain);
    for (std::size_t i = 1; i < am.table.size(); ++i)
      REQUIRE(am.table[i].second <= am.table[i - 1].second);
  }
}

TEST_CASE("asymptotic order and stability") {
  auto chain = default_chain();
  REQUIRE(asymptotic_ord(GradedSystem::m_powers(), chain) == 1);
  REQUIRE(is_stable(GradedSystem::m_powers(), chain));
  REQUIRE(asymptotic_ord(GradedSystem::kw1(), chain) == 1);
  REQUIRE(is_stable(GradedSystem::kw1(), chain));
  auto unit = GradedSystem::power(unit_ideal(2));
  REQUIRE(asymptotic_ord(unit, chain) == 0);
  REQUIRE_FALSE(is_stable(unit, chain));
  // Power systems: the asymptotic order equals ord of the base exactly.
  std::mt19937 rng(31337);
  for (int t = 0; t < 6; ++t) {
    auto base = testutil::random_m_primary(rng, t % 2 ? 3 : 2);
    REQUIRE(asymptotic_ord(GradedSystem::power(base), chain) == Rat(ord(base)));
  }
}
