#include <algorithm>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "veronese/builders.hpp"
#include "veronese/errors.hpp"
#include "veronese/monomial.hpp"

using namespace veronese;

namespace {

ExponentVector ev(const BlockStructure& b, std::vector<Exponent> e) { return ExponentVector(b, std::move(e)); }

ExponentVector mono(const BlockStructure& b, const std::string& s) { return ev(b, oracle::parseMonomial(b, s)); }

MonomialIdeal ideal(const BlockStructure& b, const std::vector<std::string>& gens) {
  std::vector<ExponentVector> v;
  for (const auto& g : gens) v.push_back(mono(b, g));
  return minimalize(b, v);
}

ExponentVector randomVector(const BlockStructure& b, std::mt19937& rng, Exponent max) {
  std::uniform_int_distribution<Exponent> d(0, max);
  std::vector<Exponent> e(static_cast<std::size_t>(b.variableCount()));
  for (auto& x : e) x = d(rng);
  return ev(b, e);
}

}  // namespace

TEST_CASE("block structure layout and names") {
  const BlockStructure b({2, 3});
  CHECK(b.blockCount() == 2);
  CHECK(b.variableCount() == 5);
  CHECK(b.index(1, 2) == 4);
  CHECK(b.position(3) == std::pair{1, 1});
  CHECK(b.variableName(0) == "x11");
  CHECK(b.variableName(4) == "x23");
  CHECK(b.toString() == "2,3");
  CHECK(b.minBlockSize() == 2);
  CHECK_FALSE(b.allBlocksEqual());
  CHECK(BlockStructure({2, 3}) == b);
  CHECK_FALSE(BlockStructure({3, 2}) == b);
  CHECK_THROWS_AS(BlockStructure({}), Error);
  CHECK_THROWS_AS(BlockStructure({2, 0}), Error);
}

TEST_CASE("divides, lcm, gcd") {
  const BlockStructure b({2, 2});
  for (auto any : {ev(b, {1, 2, 3, 4}), ev(b, {0, 0, 0, 0})}) CHECK(divides(ExponentVector::zero(b), any));
  CHECK(divides(ev(b, {1, 0, 1, 0}), ev(b, {2, 1, 1, 0})));
  CHECK_FALSE(divides(ev(b, {2, 0, 0, 0}), ev(b, {1, 2, 2, 2})));

  const auto a = ev(b, {2, 0, 1, 0});
  CHECK(lcm(a, a) == a);
  CHECK(lcm(a, ev(b, {0, 2, 1, 2})) == ev(b, {2, 2, 1, 2}));
  CHECK(gcd(a, ev(b, {1, 2, 3, 0})) == ev(b, {1, 0, 1, 0}));

  const auto l15 = buildGeneralized(IdealParameters::make(b, 15, 4));
  CHECK(lcmOfGenerators(l15) == ev(b, {4, 4, 4, 4}));

  const BlockStructure other({4});
  CHECK_THROWS_AS(divides(a, ev(other, {0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(lcm(a, ev(other, {0, 0, 0, 0})), Error);
}

TEST_CASE("multiply detects overflow") {
  const BlockStructure b({1});
  const auto big = ev(b, {std::numeric_limits<Exponent>::max()});
  CHECK_THROWS_AS(multiply(big, ev(b, {1})), Error);
  CHECK(multiply(ev(b, {2}), ev(b, {3})) == ev(b, {5}));
}

TEST_CASE("string form") {
  const BlockStructure b({2, 2});
  CHECK(ev(b, {2, 0, 1, 0}).toString() == "x11^2*x21");
  CHECK(ExponentVector::zero(b).toString() == "1");
}

TEST_CASE("membership") {
  const BlockStructure b({2, 2});
  const auto l22 = buildGeneralized(IdealParameters::make(b, 2, 2));
  CHECK(membership(mono(b, "x11x21"), l22));
  CHECK_FALSE(membership(mono(b, "x11^2"), l22));
  CHECK(membership(mono(b, "x12^5x22"), MonomialIdeal::unit(b)));
  CHECK_FALSE(membership(mono(b, "x12"), MonomialIdeal::zero(b)));
}

TEST_CASE("minimalize") {
  const BlockStructure one({1});
  const auto m = minimalize(one, {ev(one, {2}), ev(one, {1})});
  REQUIRE(m.size() == 1);
  CHECK(m.generators()[0] == ev(one, {1}));

  const BlockStructure b({2, 2});
  CHECK(ideal(b, {"x11x21", "x11x22", "x11x21x22"}) == ideal(b, {"x11x21", "x11x22"}));
  CHECK(minimalize(b, {}).isZero());
  CHECK(minimalize(b, {ExponentVector::zero(b), mono(b, "x11")}).isUnit());

  // canonical order is lex on entries
  const auto g = ideal(b, {"x12x22", "x11x21", "x12x21", "x11x22"}).generators();
  CHECK(std::is_sorted(g.begin(), g.end()));
}

TEST_CASE("minimalize of every composition product gives the 17 generators") {
  const BlockStructure b({2, 2});
  std::vector<ExponentVector> all;
  for (const auto& q : compositions(4, 2)) {
    if (q[0] > 4 || q[1] > 4) continue;
    const auto prod = idealProduct(veroneseType(b, 0, q[0], 2), veroneseType(b, 1, q[1], 2));
    all.insert(all.end(), prod.generators().begin(), prod.generators().end());
  }
  CHECK(minimalize(b, all).size() == 17);
}

TEST_CASE("colon ideal") {
  const BlockStructure b({2, 2});
  const auto l22 = buildGeneralized(IdealParameters::make(b, 2, 2));
  CHECK(colonIdeal(l22, ExponentVector::zero(b)) == l22);
  CHECK(colonIdeal(l22, mono(b, "x11")) == ideal(b, {"x21", "x22"}));

  const auto l15 = buildGeneralized(IdealParameters::make(b, 15, 4));
  const auto f = mono(b, "x11^3x12^3x21^4x22^4");
  CHECK(colonIdeal(l15, f) == ideal(b, {"x11", "x12"}));
  CHECK(membership(multiply(f, mono(b, "x11")), l15));
  CHECK(membership(multiply(f, mono(b, "x12")), l15));
  CHECK_FALSE(membership(multiply(f, mono(b, "x21")), l15));
  CHECK_FALSE(membership(multiply(f, mono(b, "x22")), l15));
}

TEST_CASE("sum and product") {
  const BlockStructure b({2, 2});
  const auto l22 = buildGeneralized(IdealParameters::make(b, 2, 2));
  CHECK(idealSum(l22, MonomialIdeal::zero(b)) == l22);
  CHECK(idealProduct(l22, MonomialIdeal::unit(b)) == l22);
  CHECK(idealProduct(l22, MonomialIdeal::zero(b)).isZero());

  const auto l11 = veroneseType(b, 0, 1, 2), l21 = veroneseType(b, 1, 1, 2);
  CHECK(idealProduct(l11, l21) == l22);

  const auto l42 = idealSum(idealSum(idealProduct(veroneseType(b, 0, 3, 2), l21),
                                     idealProduct(l11, veroneseType(b, 1, 3, 2))),
                            idealProduct(veroneseType(b, 0, 2, 2), veroneseType(b, 1, 2, 2)));
  CHECK(l42.size() == 17);
  CHECK(l42 == buildGeneralized(IdealParameters::make(b, 4, 2)));
}

TEST_CASE("asPrime and PrimeSupport") {
  const BlockStructure b({2, 2});
  const auto p = asPrime(ideal(b, {"x21", "x22"}));
  REQUIRE(p);
  CHECK(p->indices() == std::vector<int>{b.index(1, 0), b.index(1, 1)});
  CHECK(p->toString() == "(x21, x22)");
  CHECK_FALSE(asPrime(buildGeneralized(IdealParameters::make(b, 2, 2))));
  CHECK_FALSE(asPrime(MonomialIdeal::zero(b)));
  CHECK(PrimeSupport(b, {3, 1, 3}).indices() == std::vector<int>{1, 3});
  CHECK(PrimeSupport(b, {2}) < PrimeSupport(b, {0, 1}));
  CHECK_THROWS_AS(PrimeSupport(b, {}), Error);
  CHECK_THROWS_AS(PrimeSupport(b, {4}), Error);
}

TEST_CASE("property: minimalize is idempotent and order-insensitive") {
  std::mt19937 rng(7);
  const BlockStructure b({2, 1});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExponentVector> gens;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) gens.push_back(randomVector(b, rng, 3));
    const auto m = minimalize(b, gens);
    CHECK(minimalize(b, m.generators()) == m);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(b, gens) == m);

    // membership agrees with the raw set on the box up to lcm + 1
    std::set<oracle::Vec> raw;
    for (const auto& g : gens) raw.insert(oracle::entries(g));
    auto bound = lcmOfGenerators(m);
    for (Exponent x = 0; x <= bound[0] + 1; ++x)
      for (Exponent y = 0; y <= bound[1] + 1; ++y)
        for (Exponent z = 0; z <= bound[2] + 1; ++z)
          CHECK(membership(ev(b, {x, y, z}), m) == oracle::member({x, y, z}, raw));
  }
}

TEST_CASE("property: iterated colon and distributivity") {
  std::mt19937 rng(11);
  const BlockStructure b({2, 1});
  auto randomIdeal = [&] {
    std::vector<ExponentVector> gens;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) gens.push_back(randomVector(b, rng, 3));
    return minimalize(b, gens);
  };
  for (int trial = 0; trial < 150; ++trial) {
    const auto i = randomIdeal();
    const auto f = randomVector(b, rng, 2), g = randomVector(b, rng, 2);
    CHECK(colonIdeal(colonIdeal(i, f), g) == colonIdeal(i, multiply(f, g)));

    const auto j = randomIdeal(), k = randomIdeal();
    const auto lhs = idealProduct(i, idealSum(j, k));
    const auto rhs = idealSum(idealProduct(i, j), idealProduct(i, k));
    CHECK(lhs == rhs);
  }
}
