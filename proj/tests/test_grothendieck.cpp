#include <doctest.h>

#include <random>

#include "sfc/catalog.hpp"
#include "sfc/grothendieck.hpp"

using namespace sfc;

namespace {

ZPi random_zpi(std::mt19937& rng, int lo = -5) {
  std::uniform_int_distribution<long> c(lo, 5);
  return {c(rng), c(rng)};
}

int find(const SGrRing& r, const std::string& name) {
  for (int i = 0; i < r.rank(); ++i)
    if (r.labels()[static_cast<std::size_t>(i)] == name) return i;
  FAIL("no label " << name);
  return -1;
}

}  // namespace

TEST_CASE("ZPi is a commutative ring with pi^2 = 1") {
  CHECK(ZPi::pi() * ZPi::pi() == ZPi{1, 0});
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const ZPi x = random_zpi(rng), y = random_zpi(rng), z = random_zpi(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(x * ZPi{1, 0} == x);
  }
}

TEST_CASE("the cone Z^pi_+ is closed under + and *") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const ZPi x = random_zpi(rng, 0), y = random_zpi(rng, 0);
    REQUIRE(x.is_positive());
    CHECK((x + y).is_positive());
    CHECK((x * y).is_positive());
  }
  CHECK_FALSE((ZPi{1, 0} - ZPi::pi()).is_positive());
}

TEST_CASE("ZPi rendering") {
  CHECK(ZPi{1, 0}.to_string() == "1+0*pi");
  CHECK(ZPi{2, -1}.to_string() == "2+-1*pi");
  CHECK(ZPi{1, 1}.pretty() == "(1+pi)");
  CHECK(ZPi{0, 1}.pretty() == "pi");
  CHECK(ZPi{0, 2}.pretty() == "2pi");
  CHECK(ZPi{0, 0}.pretty() == "0");
}

TEST_CASE("multiplicity counts basis vectors by parity") {
  const SuperFusionData s = ising_super();
  CHECK(multiplicity(s, 1, 1, 0) == ZPi{1, 1});
  CHECK(multiplicity(s, 0, 1, 1) == ZPi{1, 1});
  CHECK(multiplicity(s, 0, 0, 0) == ZPi{1, 0});
  CHECK(multiplicity(s, 0, 0, 1).is_zero());
  const CategoryFile z2 = catalog_entry("z2-super");
  CHECK(multiplicity(*z2.super, 1, 1, 0) == ZPi::pi());
}

TEST_CASE("Ising: [X]^2 = (1+pi)[1], [X] = pi[X]") {
  const SGrRing r = build_sgr(ising_super());
  const int one = find(r, "1"), x = find(r, "X");
  SgrVector expect(2);
  expect[static_cast<std::size_t>(one)] = {1, 1};
  CHECK(r.multiply(r.basis(x), r.basis(x)) == expect);
  CHECK(r.format(r.multiply(r.basis(x), r.basis(x))) == "(1+pi)[1]");
  SgrVector pix(2);
  pix[static_cast<std::size_t>(x)] = ZPi::pi();
  CHECK(r.canonical(pix) == r.basis(x));
  CHECK(r.multiply(r.basis(one), r.basis(x)) == r.basis(x));
  const auto rel = r.relations();
  CHECK(std::find(rel.begin(), rel.end(), "[X] = pi[X]") != rel.end());
  CHECK(std::find(rel.begin(), rel.end(), "[X]^2 = (1+pi)[1]") != rel.end());
  CHECK(std::find(rel.begin(), rel.end(), "[1][X] = [X]") != rel.end());
}

TEST_CASE("C_2: [V1]^2 = (1+pi)[V0]") {
  const SGrRing r = build_sgr(ck_super(2));
  SgrVector expect(2);
  expect[0] = {1, 1};
  CHECK(r.multiply(r.basis(1), r.basis(1)) == expect);
}

TEST_CASE("C_k structure constants against the unfolded rules") {
  for (int k : {2, 6, 10, 14, 18}) {
    CAPTURE(k);
    const FusionData ck = ck_fusion(k);
    const SuperFusionData s = ck_super(k);
    const SGrRing r = build_sgr(s);
    REQUIRE(r.rank() == k / 2 + 1);
    for (int i = 0; i < r.rank(); ++i)
      for (int j = 0; j < r.rank(); ++j)
        for (int m = 0; m < r.rank(); ++m) {
          // Representative V_m pairs with pi (x) V_m = V_{k-m}.
          const ZPi expect = 2 * m == k ? ZPi{ck.N(i, j, m), 0} : ZPi{ck.N(i, j, m), ck.N(i, j, k - m)};
          CHECK(r.constant(i, j, m) == expect);
        }
    CHECK(r.check_associativity().passed());
    CHECK(r.check_unit().passed());
  }
}

TEST_CASE("canonical is idempotent and multiplication respects it") {
  const SGrRing r = build_sgr(ck_super(6));
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    SgrVector x(4), y(4);
    for (auto& c : x) c = random_zpi(rng, 0);
    for (auto& c : y) c = random_zpi(rng, 0);
    CHECK(r.canonical(r.canonical(x)) == r.canonical(x));
    CHECK(r.multiply(x, y) == r.multiply(r.canonical(x), r.canonical(y)));
    CHECK(r.multiply(x, y) == r.multiply(y, x));
    for (const auto& c : r.multiply(x, y)) CHECK(c.is_positive());
  }
}

TEST_CASE("all-even data: setting pi = 1 recovers the fusion ring") {
  const CategoryFile e = catalog_entry("z3-super-bosonic");
  const SGrRing r = build_sgr(*e.super);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        CHECK(r.constant(i, j, m).b == 0);
        CHECK(r.constant(i, j, m).a == e.super->base().N(i, j, m));
      }
}

TEST_CASE("check_associativity detects a non-associative presentation") {
  // {1, a, b} with [a][a] = [b], [a][b] = [1], [b][b] = 0: ([a][a])[b] = 0 but [a]([a][b]) = [a].
  std::vector<ZPi> c(27);
  auto at = [&c](int i, int j, int m) -> ZPi& { return c[static_cast<std::size_t>((i * 3 + j) * 3 + m)]; };
  for (int x = 0; x < 3; ++x) at(0, x, x) = at(x, 0, x) = {1, 0};
  at(1, 1, 2) = {1, 0};
  at(1, 2, 0) = at(2, 1, 0) = {1, 0};
  const SGrRing bad({"1", "a", "b"}, {false, false, false}, 0, c);
  CHECK(bad.check_unit().passed());
  const CheckReport r = bad.check_associativity();
  CHECK_FALSE(r.passed());
  CHECK(r.total_violations > 0);
}
