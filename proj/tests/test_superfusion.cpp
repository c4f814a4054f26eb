#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sfc/catalog.hpp"
#include "sfc/superfusion.hpp"

using namespace sfc;

namespace {

SuperCocycle z2_super(const Cyclotomic& f111) {
  ThreeCocycle f = ThreeCocycle::constant(2, 1);
  f.set(1, 1, 1, f111);
  return {TwoCocycleZ2(2, {0, 0, 0, 1}), f};
}

std::set<std::vector<int>> outer_indices(const CheckReport& r) {
  std::set<std::vector<int>> out;
  for (const auto& v : r.violations) out.insert({v.index.begin(), v.index.begin() + 4});
  return out;
}

}  // namespace

TEST_CASE("classify_objects") {
  SUBCASE("Ising: 1 Bosonic, X Majorana") {
    const Classification c = classify_objects(ising_super());
    CHECK(c.bosonic == 1);
    CHECK(c.majorana == 1);
    CHECK(c.types == std::vector<ObjectType>{ObjectType::bosonic, ObjectType::majorana});
  }
  SUBCASE("C_2: V0 Bosonic, V1 Majorana") {
    const Classification c = classify_objects(ck_super(2));
    CHECK(c.types == std::vector<ObjectType>{ObjectType::bosonic, ObjectType::majorana});
  }
  SUBCASE("pointed all-Bosonic") {
    const auto [d, t] = pointed_superfusion(GroupTable::cyclic(2), z2_super(root_of_unity(4, 1)));
    const Classification c = classify_objects(d);
    CHECK(c.bosonic == 2);
    CHECK(c.majorana == 0);
  }
  SUBCASE("a Majorana unit is refused") {
    const SuperFusionData s = ising_super();
    const SuperFusionData bad(s.base(), s.parities(), {ObjectType::majorana, ObjectType::majorana});
    CHECK_THROWS_AS(classify_objects(bad), StructureError);
    CHECK_FALSE(validate_superfusion(bad).passed());
  }
  SUBCASE("declared type must match End data") {
    const SuperFusionData s = ising_super();
    const SuperFusionData bad(s.base(), s.parities(), {ObjectType::bosonic, ObjectType::bosonic});
    CHECK_THROWS_AS(classify_objects(bad), StructureError);
  }
}

TEST_CASE("SuperFusionData structural errors") {
  const SuperFusionData s = ising_super();
  auto parities = s.parities();
  SUBCASE("missing parity") {
    parities.erase(parities.begin());
    CHECK_THROWS_AS(SuperFusionData(s.base(), parities, s.types()), StructureError);
  }
  SUBCASE("parity on non-admissable quadruple") {
    parities[{0, 0, 1, 1}] = 0;
    CHECK_THROWS_AS(SuperFusionData(s.base(), parities, s.types()), StructureError);
  }
  SUBCASE("type count mismatch") { CHECK_THROWS_AS(SuperFusionData(s.base(), parities, {ObjectType::bosonic}), StructureError); }
}

TEST_CASE("Majorana parity balance is enforced") {
  const SuperFusionData s = ising_super();
  CHECK(validate_superfusion(s).passed());
  auto parities = s.parities();
  parities[{1, 1, 0, 2}] = 0;  // both basis vectors of Hom(X (x) X, 1) even
  const SuperFusionData bad(s.base(), parities, s.types());
  const CheckReport r = validate_superfusion(bad);
  CHECK_FALSE(r.passed());
  bool balance = false;
  for (const auto& v : r.violations)
    if (v.index == std::vector<int>{1, 1, 0}) balance = true;
  CHECK(balance);
}

TEST_CASE("is_parity_admissible") {
  const auto [d, t] = pointed_superfusion(GroupTable::cyclic(2), z2_super(root_of_unity(4, 1)));
  // (g,h,k) = (1,1,1): parities (w(1,1), w(0,1), w(1,1), w(1,0)) = (1,0,1,0).
  CHECK(is_parity_admissible(d, {1, 1, 0, 1, 1, 0, 1, 1, 1, 1}));
  CHECK(is_parity_admissible(d, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1}));
  CHECK_THROWS_AS(is_parity_admissible(d, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), StructureError);

  // Parities s(g,h) = g on Z/2 (not a cocycle, so some decuples are not
  // parity admissable).
  std::map<MultiplicityKey, int> mult{{{0, 0, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}};
  std::map<Quadruple, Bit> par{{{0, 0, 0, 1}, 0}, {{0, 1, 1, 1}, 0}, {{1, 0, 1, 1}, 1}, {{1, 1, 0, 1}, 1}};
  const SuperFusionData odd(FusionData({"1", "a"}, 0, mult), par, {ObjectType::bosonic, ObjectType::bosonic});
  CHECK_FALSE(is_parity_admissible(odd, {1, 0, 1, 0, 1, 0, 1, 1, 1, 1}));  // (1,1,0,1)
  CHECK(is_parity_admissible(odd, {0, 1, 1, 1, 0, 0, 1, 1, 1, 1}));          // (0,1,1,0)

  SixJTable bad;
  bad.set({1, 0, 1, 0, 1, 0, 1, 1, 1, 1}, 1);
  const CheckReport r = check_support(odd, bad);
  CHECK_FALSE(r.passed());
  CHECK(r.violations.front().index == std::vector<int>{1, 0, 1, 0, 1, 0, 1, 1, 1, 1});
  CHECK(check_support(odd, SixJTable{}).passed());
  CHECK_THROWS_AS(check_super_pentagon(odd, bad), StructureError);
}

TEST_CASE("check_super_pentagon on the Z/2 supercocycle") {
  const GroupTable z2 = GroupTable::cyclic(2);
  SUBCASE("F~(1,1,1) = z4 passes") {
    const auto [d, t] = pointed_superfusion(z2, z2_super(root_of_unity(4, 1)));
    const CheckReport r = check_super_pentagon(d, t);
    CHECK(r.passed());
    CHECK(r.instances_checked == 16);
  }
  SUBCASE("F~ = 1 fails exactly at (1,1,1,1)") {
    const auto [d, t] = pointed_table(z2, ThreeCocycle::constant(2, 1));
    std::map<Quadruple, Bit> par;
    for (int g = 0; g < 2; ++g)
      for (int h = 0; h < 2; ++h) par[{g, h, (g + h) % 2, 1}] = static_cast<Bit>(g * h);
    const SuperFusionData s(d, par, {ObjectType::bosonic, ObjectType::bosonic});
    const CheckReport r = check_super_pentagon(s, t, {100, 1});
    REQUIRE(r.total_violations == 1);
    CHECK(outer_indices(r) == std::set<std::vector<int>>{{1, 1, 1, 1}});
    CHECK(r.violations.front().lhs == Cyclotomic(1));
    CHECK(r.violations.front().rhs == Cyclotomic(-1));
    // Dense oracle with the super sign.
    auto sign = [&s](const std::vector<int>& x) {
      return s.parity(x[0], x[1], x[4], x[9]) * s.parity(x[2], x[3], x[7], x[13]);
    };
    std::set<std::vector<int>> engine;
    for (const auto& v : r.violations) engine.insert(v.index);
    CHECK(engine == oracle::pentagon_witnesses(s.base(), t, sign));
  }
}

TEST_CASE("all-even Bosonic data: super pentagon agrees with the ordinary pentagon instance by instance") {
  const GroupTable z3 = GroupTable::cyclic(3);
  ThreeCocycle f = standard_cyclic_cocycle(3);
  f.set(1, 2, 2, f(1, 2, 2) * root_of_unity(3, 1));  // break it somewhere
  const auto [d, t] = pointed_table(z3, f);
  std::map<Quadruple, Bit> par;
  for (const auto& [k, n] : d.multiplicities()) par[{k[0], k[1], k[2], 1}] = 0;
  const SuperFusionData s(d, par, std::vector<ObjectType>(3, ObjectType::bosonic));
  const CheckReport a = check_pentagon(d, t, {1000, 1});
  const CheckReport b = check_super_pentagon(s, t, {1000, 1});
  CHECK_FALSE(a.passed());
  CHECK(a.total_violations == b.total_violations);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t x = 0; x < a.violations.size(); ++x) {
    CHECK(a.violations[x].index == b.violations[x].index);
    CHECK(a.violations[x].lhs == b.violations[x].lhs);
    CHECK(a.violations[x].rhs == b.violations[x].rhs);
  }
}

TEST_CASE("super pentagon agrees with check_supercocycle on random candidates") {
  const GroupTable z2 = GroupTable::cyclic(2);
  const TwoCocycleZ2 omega(2, {0, 0, 0, 1});
  for (int e = 0; e < 8; ++e)
    for (int e2 = 0; e2 < 4; ++e2) {
      ThreeCocycle f = ThreeCocycle::constant(2, 1);
      f.set(1, 1, 1, root_of_unity(8, e));
      f.set(0, 1, 1, root_of_unity(4, e2));
      const auto [d, t] = pointed_table(z2, f);
      std::map<Quadruple, Bit> par;
      for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h) par[{g, h, (g + h) % 2, 1}] = omega(g, h);
      const SuperFusionData s(d, par, {ObjectType::bosonic, ObjectType::bosonic});
      const CheckReport sp = check_super_pentagon(s, t, {1000, 1});
      const CheckReport sc = check_supercocycle(z2, {omega, f}, {1000, 1});
      CHECK(sp.passed() == sc.passed());
      std::set<std::vector<int>> a = outer_indices(sp), b;
      for (const auto& v : sc.violations) b.insert(v.index);
      CHECK(a == b);
    }
}
