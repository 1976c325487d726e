#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor/group.hpp"
#include "milnor/parse.hpp"

using namespace milnor;

namespace {

ActionSpec action(std::vector<unsigned long> orders, std::vector<std::vector<long long>> rows) {
  ActionSpec a;
  a.group = AbelianGroup(std::move(orders));
  for (auto& r : rows) a.chars.emplace_back(a.group, r);
  return a;
}

const std::vector<std::string> kXY = {"x", "y"};

}  // namespace

TEST_CASE("characters form the dual group", "[group]") {
  AbelianGroup g({4, 6});
  Character a(g, {3, 5});
  Character b(g, {2, 4});
  REQUIRE(add(g, a, b) == Character(g, {1, 3}));
  REQUIRE(add(g, a, negate(g, a)).is_trivial());
  REQUIRE(Character::trivial(g).is_trivial());
  // reduction mod the orders, including negatives
  REQUIRE(Character(g, {-1, 7}) == Character(g, {3, 1}));
  REQUIRE_THROWS_AS(Character(g, {1}), DimensionMismatch);
  REQUIRE_THROWS_AS(AbelianGroup({0}), Error);
}

TEST_CASE("character order is the kernel index", "[group]") {
  AbelianGroup z6({6});
  REQUIRE(character_order(z6, Character(z6, {1})) == 6);
  REQUIRE(character_order(z6, Character(z6, {2})) == 3);
  REQUIRE(character_order(z6, Character(z6, {3})) == 2);
  REQUIRE(character_order(z6, Character(z6, {0})) == 1);
  AbelianGroup z2z4({2, 4});
  REQUIRE(character_order(z2z4, Character(z2z4, {1, 1})) == 4);
  REQUIRE(character_order(z2z4, Character(z2z4, {1, 2})) == 2);

  // order(chi) * chi = trivial and no smaller positive multiple is
  for (unsigned long d1 = 1; d1 <= 4; ++d1)
    for (unsigned long d2 = 1; d2 <= 3; ++d2) {
      AbelianGroup g({d1, d2});
      for (unsigned long c1 = 0; c1 < d1; ++c1)
        for (unsigned long c2 = 0; c2 < d2; ++c2) {
          Character chi(g, {static_cast<long long>(c1), static_cast<long long>(c2)});
          const unsigned long long ord = character_order(g, chi);
          REQUIRE(scaled(g, chi, ord).is_trivial());
          for (unsigned long long k = 1; k < ord; ++k) REQUIRE(!scaled(g, chi, k).is_trivial());
        }
    }
}

TEST_CASE("monomial weights", "[group]") {
  ActionSpec z3 = action({3}, {{1}, {2}});
  REQUIRE(monomial_weight(Monomial({3, 0}), z3).is_trivial());
  REQUIRE(monomial_weight(Monomial({1, 1}), z3).is_trivial());
  REQUIRE(monomial_weight(Monomial({0, 0}), z3).is_trivial());
  REQUIRE(monomial_weight(Monomial({1, 0}), z3) == Character(z3.group, {1}));
  REQUIRE_THROWS_AS(monomial_weight(Monomial({1}), z3), DimensionMismatch);
}

TEST_CASE("weight is a monoid morphism", "[group]") {
  std::mt19937_64 rng(31337);
  ActionSpec a = action({2, 6}, {{1, 2}, {0, 5}, {1, 1}});
  for (int i = 0; i < 200; ++i) {
    Monomial m1(3), m2(3);
    for (std::size_t v = 0; v < 3; ++v) {
      m1[v] = static_cast<unsigned>(rng() % 6);
      m2[v] = static_cast<unsigned>(rng() % 6);
    }
    REQUIRE(monomial_weight(m1 * m2, a) ==
            add(a.group, monomial_weight(m1, a), monomial_weight(m2, a)));
  }
}

TEST_CASE("invariance of germs", "[group]") {
  Polynomial cubic = parse_polynomial("x^3 + y^3", kXY);
  REQUIRE(is_invariant(cubic, action({3}, {{1}, {2}})));
  REQUIRE(is_invariant(cubic, action({3}, {{1}, {1}})));
  REQUIRE(!is_invariant(parse_polynomial("x^2*y", kXY), action({3}, {{1}, {0}})));
}

TEST_CASE("partials of invariant germs are weight-homogeneous", "[group]") {
  ActionSpec a = action({3}, {{1}, {2}});
  for (const char* text : {"x^3 + y^3", "x^3 + x*y + y^3", "x^2*y^2 + x^3"}) {
    Polynomial f = parse_polynomial(text, kXY);
    if (!is_invariant(f, a)) continue;
    for (std::size_t i = 0; i < 2; ++i)
      REQUIRE(is_weight_homogeneous(f.derivative(i), a, negate(a.group, a.chars[i])));
  }
}

TEST_CASE("shortest orbit length formula", "[group]") {
  // any nontrivial character of a prime-order group has full order
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
    ActionSpec a = action({p}, {{1}, {0}});
    REQUIRE(shortest_orbit_length(a) == p);
  }
  REQUIRE(shortest_orbit_length(action({6}, {{3}, {1}})) == 2);
  REQUIRE(shortest_orbit_length(action({2, 2}, {{1, 0}, {0, 1}})) == 2);
  REQUIRE_THROWS_AS(shortest_orbit_length(action({3}, {{0}, {0}})), TrivialAction);
}

TEST_CASE("orbit length oracle", "[group]") {
  REQUIRE(orbit_length_oracle(action({5}, {{1}})) == 5);
  REQUIRE(orbit_length_oracle(action({4}, {{2}, {2}})) == 2);
  REQUIRE_THROWS_AS(orbit_length_oracle(action({3}, {{0}})), TrivialAction);
  OrbitOracleOptions tiny;
  tiny.max_group_order = 8;
  REQUIRE_THROWS_AS(orbit_length_oracle(action({3, 3}, {{1, 1}}), tiny), CapExceeded);
}

TEST_CASE("formula agrees with the oracle on small groups", "[group]") {
  // all character triples over a few groups
  for (const auto& orders :
       {std::vector<unsigned long>{2}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {12}}) {
    AbelianGroup g(orders);
    const std::size_t size = static_cast<std::size_t>(g.order());
    std::vector<Character> all;
    for (std::size_t e = 0; e < size; ++e) {
      std::vector<long long> exps(g.rank());
      std::size_t v = e;
      for (std::size_t j = 0; j < g.rank(); ++j) {
        exps[j] = static_cast<long long>(v % g.orders()[j]);
        v /= g.orders()[j];
      }
      all.emplace_back(g, exps);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        ActionSpec a;
        a.group = g;
        a.chars = {all[i], all[j]};
        if (!a.nontrivial()) continue;
        REQUIRE(shortest_orbit_length(a) == orbit_length_oracle(a));
      }
  }
}

TEST_CASE("fixed points outside the origin", "[group]") {
  REQUIRE(has_fixed_points_outside_origin(action({3}, {{0}, {1}})));
  REQUIRE(!has_fixed_points_outside_origin(action({6}, {{2}, {3}})));
  REQUIRE(has_fixed_points_outside_origin(action({1}, {{0}, {0}})));
}
