#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sfc/catalog.hpp"
#include "sfc/cocycles.hpp"
#include "sfc/envelope.hpp"

using namespace sfc;

namespace {

std::set<oracle::Quad> as_quads(const CheckReport& r) {
  std::set<oracle::Quad> out;
  for (const auto& v : r.violations) out.insert({v.index[0], v.index[1], v.index[2], v.index[3]});
  return out;
}

SuperCocycle z2_super(const Cyclotomic& f111) {
  ThreeCocycle f = ThreeCocycle::constant(2, 1);
  f.set(1, 1, 1, f111);
  return {TwoCocycleZ2(2, {0, 0, 0, 1}), f};
}

int element_order(const GroupTable& g, int x) {
  int n = 1;
  for (int y = x; y != g.identity(); y = g.mul(y, x)) ++n;
  return n;
}

}  // namespace

TEST_CASE("GroupTable validation") {
  CHECK_NOTHROW(GroupTable::cyclic(5));
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}, 0), StructureError);  // no inverse
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 0, 1}, 0), StructureError);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1}, 0), StructureError);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 0}, 2), StructureError);
  // Non-associative Latin square of order 5 with identity 0.
  const std::vector<int> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(GroupTable(5, loop, 0), StructureError);
  const GroupTable v4 = direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
  for (int x = 0; x < 4; ++x) CHECK(v4.mul(x, x) == v4.identity());
}

TEST_CASE("check_2cocycle") {
  const GroupTable z2 = GroupTable::cyclic(2);
  CHECK(check_2cocycle(z2, TwoCocycleZ2::zero(2)).passed());
  CHECK(check_2cocycle(GroupTable::cyclic(5), TwoCocycleZ2::zero(5)).passed());
  CHECK(check_2cocycle(z2, TwoCocycleZ2(2, {0, 0, 0, 1})).passed());
  const CheckReport r = check_2cocycle(z2, TwoCocycleZ2(2, {0, 0, 1, 1}), {100, 1});  // w(g,h) = g
  CHECK_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations) found = found || v.index == std::vector<int>{1, 0, 0};
  CHECK(found);
}

TEST_CASE("check_3cocycle") {
  const GroupTable z2 = GroupTable::cyclic(2);
  CHECK(check_3cocycle(z2, ThreeCocycle::constant(2, 1)).passed());
  ThreeCocycle f = ThreeCocycle::constant(2, 1);
  f.set(1, 1, 1, -1);
  CHECK(check_3cocycle(z2, f).passed());
  f.set(1, 1, 1, 0);
  CHECK_THROWS_AS(check_3cocycle(z2, f), StructureError);
  for (int n = 2; n <= 6; ++n)
    for (long r = 0; r < n; ++r) CHECK(check_3cocycle(GroupTable::cyclic(n), standard_cyclic_cocycle(n, r)).passed());
}

TEST_CASE("check_3cocycle agrees with the brute-force oracle on random candidates") {
  std::mt19937 rng(2024);
  for (int n : {2, 3, 4}) {
    const GroupTable g = GroupTable::cyclic(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Cyclotomic> v;
      for (int x = 0; x < n * n * n; ++x) v.push_back(root_of_unity(2 * n, static_cast<long>(rng() % (2 * n))));
      const ThreeCocycle f(n, v);
      const CheckReport r = check_3cocycle(g, f, {1u << 20, 1});
      const auto expect = oracle::cocycle_witnesses(g, [&](int a, int b, int c) { return f(a, b, c); },
                                                    [](int, int, int, int) { return 0; });
      CHECK(as_quads(r) == expect);
    }
  }
}

TEST_CASE("coboundaries and products of cocycles are cocycles") {
  std::mt19937 rng(11);
  const GroupTable g = direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3));
  std::vector<Cyclotomic> f;
  for (int x = 0; x < 36; ++x) f.push_back(root_of_unity(6, static_cast<long>(rng() % 6)));
  CHECK(check_3cocycle(g, coboundary(g, f)).passed());
  const std::vector<int> p2{0, 0, 0, 1, 1, 1};
  const ThreeCocycle pulled = pullback(standard_cyclic_cocycle(2), p2);
  CHECK(check_3cocycle(g, pointwise_product(pulled, coboundary(g, f))).passed());
}

TEST_CASE("check_supercocycle") {
  const GroupTable z2 = GroupTable::cyclic(2);
  SUBCASE("w = 0 reduces to the 3-cocycle check") {
    ThreeCocycle f = ThreeCocycle::constant(2, 1);
    f.set(1, 1, 1, -1);
    CHECK(check_supercocycle(z2, {TwoCocycleZ2::zero(2), f}).passed());
    f.set(1, 1, 1, 2);
    CHECK(check_supercocycle(z2, {TwoCocycleZ2::zero(2), f}).passed() == check_3cocycle(z2, f).passed());
  }
  SUBCASE("w = gh, F~(1,1,1) = z4 passes") { CHECK(check_supercocycle(z2, z2_super(root_of_unity(4, 1))).passed()); }
  SUBCASE("w = gh, F~ = 1 fails exactly at (1,1,1,1)") {
    const CheckReport r = check_supercocycle(z2, z2_super(1), {100, 1});
    REQUIRE(r.total_violations == 1);
    CHECK(r.violations.front().index == std::vector<int>{1, 1, 1, 1});
    CHECK(r.violations.front().lhs == Cyclotomic(1));
    CHECK(r.violations.front().rhs == Cyclotomic(-1));
  }
  SUBCASE("non-cocycle omega is a precondition failure") {
    CHECK_THROWS_AS(check_supercocycle(z2, {TwoCocycleZ2(2, {0, 0, 1, 1}), ThreeCocycle::constant(2, 1)}),
                    PreconditionError);
  }
}

TEST_CASE("central_extension") {
  const GroupTable z2 = GroupTable::cyclic(2);
  SUBCASE("w = 0 gives Z/2 x Z/2") {
    const CentralExtension e = central_extension(z2, TwoCocycleZ2::zero(2));
    for (int x = 0; x < 4; ++x) CHECK(e.group.mul(x, x) == e.group.identity());
  }
  SUBCASE("w = gh gives Z/4, 1^0 of order 4") {
    const CentralExtension e = central_extension(z2, TwoCocycleZ2(2, {0, 0, 0, 1}));
    CHECK(element_order(e.group, extension_index(1, 0)) == 4);
    CHECK(e.normalized_input);
  }
  SUBCASE("non-normalized input is shifted to a normalized cocycle") {
    const TwoCocycleZ2 raw(2, {1, 1, 1, 0});  // gh + 1
    CHECK(check_2cocycle(z2, raw).passed());
    CHECK_FALSE(is_normalized(z2, raw));
    const CentralExtension e = central_extension(z2, raw);
    CHECK_FALSE(e.normalized_input);
    CHECK(is_normalized(z2, e.omega_used));
    const int id = e.group.identity();
    for (int x = 0; x < 4; ++x) {
      CHECK(e.group.mul(id, x) == x);
      CHECK(e.group.mul(x, id) == x);
    }
  }
  SUBCASE("non-cocycle omega is refused") {
    CHECK_THROWS_AS(central_extension(z2, TwoCocycleZ2(2, {0, 0, 1, 1})), PreconditionError);
  }
  SUBCASE("grade subgroup is central") {
    const GroupTable g = direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    const TwoCocycleZ2 w = pullback(TwoCocycleZ2(2, {0, 0, 0, 1}), {0, 0, 1, 1});
    const CentralExtension e = central_extension(g, w);
    const int z = extension_index(g.identity(), 1);
    for (int x = 0; x < e.group.order(); ++x) CHECK(e.group.mul(x, z) == e.group.mul(z, x));
  }
}

TEST_CASE("lift_supercocycle") {
  const GroupTable z2 = GroupTable::cyclic(2);
  const SuperCocycle sc = z2_super(root_of_unity(4, 1));
  const LiftedCocycle l = lift_supercocycle(z2, sc);
  CHECK(l.extension.order() == 4);
  CHECK(check_3cocycle(l.extension, l.cocycle).passed());
  CHECK(oracle::cocycle_witnesses(l.extension, [&](int a, int b, int c) { return l.cocycle(a, b, c); },
                                  [](int, int, int, int) { return 0; })
            .empty());
  CHECK(restrict_to_grade_zero(l.cocycle) == sc.values);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(l.cocycle(extension_index(1, static_cast<Bit>(a)), extension_index(1, static_cast<Bit>(b)), extension_index(1, 1)) == -root_of_unity(4, 1));

  SUBCASE("w = 0: pullback along the projection") {
    ThreeCocycle f = standard_cyclic_cocycle(3);
    const LiftedCocycle l3 = lift_supercocycle(GroupTable::cyclic(3), {TwoCocycleZ2::zero(3), f});
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        for (int z = 0; z < 6; ++z) CHECK(l3.cocycle(x, y, z) == f(x / 2, y / 2, z / 2));
  }
  SUBCASE("refusals") {
    CHECK_THROWS_AS(lift_supercocycle(z2, z2_super(1)), PreconditionError);
    CHECK_THROWS_AS(lift_supercocycle(z2, {TwoCocycleZ2(2, {1, 1, 1, 0}), ThreeCocycle::constant(2, 1)}),
                    PreconditionError);
  }
}

TEST_CASE("pointed pipeline agrees with the general pipeline") {
  for (const std::string name : {"z2-super", "z4-super", "z2xz2-super", "z3-super-bosonic"}) {
    CAPTURE(name);
    const CategoryFile e = catalog_entry(name);
    const int n = e.super->rank();
    GroupTable g = [&] {
      std::vector<int> p;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) p.push_back(e.super->base().channels(x, y).front().target);
      return GroupTable(n, p, e.super->base().unit());
    }();
    std::vector<Bit> w;
    std::vector<Cyclotomic> f;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) w.push_back(e.super->parity(x, y, g.mul(x, y), 1));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          f.push_back(e.sixj->value({x, y, g.mul(x, y), z, g.mul(g.mul(x, y), z), g.mul(y, z), 1, 1, 1, 1}));
    const SuperCocycle sc{TwoCocycleZ2(n, w), ThreeCocycle(n, f)};
    const LiftedCocycle l = lift_supercocycle(g, sc);
    const auto [rules, table] = pointed_table(l.extension, l.cocycle);
    // The underlying label g^a sits at index 2g + a, matching the extension encoding.
    const FusionData u = underlying_fusion_rules(*e.super);
    CHECK(u.multiplicities() == rules.multiplicities());
    CHECK(lift_6j(*e.super, *e.sixj) == table);
  }
}
