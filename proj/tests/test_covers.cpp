#include "doctest.h"
#include "oracles.hpp"
#include "veronese/associated_primes.hpp"
#include "veronese/covers.hpp"
#include "veronese/errors.hpp"
#include "veronese/report.hpp"

using namespace veronese;

namespace {

MonomialIdeal lstar(std::vector<int> blocks, int t, int s) {
  return buildGeneralized(IdealParameters::make(BlockStructure(std::move(blocks)), t, s));
}

std::set<std::vector<int>> coverSets(const MonomialIdeal& i) {
  std::set<std::vector<int>> out;
  for (const auto& c : minimalVertexCovers(i)) out.insert(c.indices);
  return out;
}

}  // namespace

TEST_CASE("isVertexCover") {
  const auto i = lstar({2, 2}, 3, 2);
  CHECK(isVertexCover(i, {0, 1, 2, 3}));
  CHECK(isVertexCover(i, {0, 1}));
  CHECK_FALSE(isVertexCover(i, {0}));
}

TEST_CASE("minimal vertex covers on worked instances") {
  CHECK(coverSets(lstar({2, 2}, 3, 2)) == std::set<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(coverSets(lstar({2, 2}, 11, 3)) == std::set<std::vector<int>>{{0}, {1}, {2}, {3}});
  CHECK(coverSets(lstar({2, 2, 2}, 3, 2)) == std::set<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});

  // mixed cover outside the small-t regime
  CHECK(coverSets(lstar({2, 3}, 8, 2)).count({0, 2}));

  CHECK(coverNumber(lstar({2, 2}, 3, 2)) == 2);
  CHECK(coverNumber(lstar({2, 2}, 11, 3)) == 1);
  const BlockStructure b({2, 2});
  CHECK(coverNumber(PrimeSupport(b, {0, 1}).toIdeal()) == 2);

  CHECK_THROWS_AS(minimalVertexCovers(MonomialIdeal::zero(b)), Error);
  CHECK_THROWS_AS(minimalVertexCovers(MonomialIdeal::unit(b)), Error);
  Limits tight;
  tight.maxVariables = 3;
  try {
    minimalVertexCovers(lstar({2, 2}, 2, 2), tight);
    FAIL("expected a guard error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Guard);
  }
}

TEST_CASE("dimension and unmixedness examples") {
  const auto p = [](std::vector<int> b, int t, int s) { return IdealParameters::make(BlockStructure(std::move(b)), t, s); };
  CHECK(dimFormula(p({2, 2, 2}, 3, 2)) == 4);
  CHECK(dimOracle(lstar({2, 2, 2}, 3, 2)) == 4);
  CHECK(dimFormula(p({2, 2}, 11, 3)) == 3);
  CHECK(dimOracle(lstar({2, 2}, 11, 3)) == 3);
  CHECK(dimFormula(p({2, 2}, 2, 2)) == 2);
  CHECK(dimOracle(lstar({2, 2}, 2, 2)) == 2);

  CHECK(unmixedPredicate(p({2, 2}, 3, 2)));
  CHECK(isUnmixed(lstar({2, 2}, 3, 2)));
  CHECK_FALSE(unmixedPredicate(p({2, 3}, 3, 2)));
  CHECK_FALSE(isUnmixed(lstar({2, 3}, 3, 2)));
  CHECK(unmixedPredicate(p({2, 2}, 11, 3)));
  CHECK(isUnmixed(lstar({2, 2}, 11, 3)));

  CHECK(regularityFormula(p({2, 2, 2}, 3, 2)) == 2);
  CHECK(regularityFormula(p({1}, 4, 4)) == 3);
  CHECK(regularityFormula(p({2, 2}, 2, 2)) == 1);

  // t = sN sits outside both cases
  CHECK_THROWS_AS(dimFormula(p({2, 2}, 8, 2)), Error);
  CHECK_THROWS_AS(unmixedPredicate(p({2, 2}, 8, 2)), Error);
  CHECK(dimensionCase(p({2, 2}, 6, 2)) == DimensionCase::Generic);
  CHECK(dimensionCase(p({2, 2}, 7, 2)) == DimensionCase::NearTop);
  CHECK_FALSE(dimensionCase(p({2, 2}, 8, 2)));
}

TEST_CASE("cover enumeration matches the subset oracle") {
  for (const auto& p : coverGrid(false)) {
    if (p.variableCount() > 7) continue;
    const auto i = buildGeneralized(p);
    CAPTURE(p.structure.toString());
    CAPTURE(p.t);
    CAPTURE(p.s);
    const auto expected = oracle::minimalCovers(oracle::entrySet(i.generators()), p.variableCount());
    CHECK(coverSets(i) == expected);
  }
}

TEST_CASE("formula equals oracle on the verified grid") {
  for (const auto& p : coverGrid(true)) {
    const auto i = buildGeneralized(p);
    CAPTURE(p.structure.toString());
    CAPTURE(p.t);
    CAPTURE(p.s);
    CHECK(dimFormula(p) == dimOracle(i));
    CHECK(unmixedPredicate(p) == isUnmixed(i));
  }
}

TEST_CASE("cover number equals the smallest minimal prime") {
  for (const auto& p : assGrid()) {
    const auto i = buildGeneralized(p);
    const auto minimal = minimalPrimes(assOracle(i));
    std::set<std::vector<int>> fromPrimes;
    std::size_t smallest = 1000;
    for (const auto& f : minimal) {
      fromPrimes.insert(f.indices());
      smallest = std::min(smallest, f.size());
    }
    CHECK(fromPrimes == coverSets(i));
    CHECK(static_cast<int>(smallest) == coverNumber(i));
  }
}
