#include "doctest.h"
#include "oracles.hpp"
#include "veronese/builders.hpp"
#include "veronese/errors.hpp"
#include "veronese/walk_graphs.hpp"

using namespace veronese;

namespace {

MonomialIdeal lstar(const BlockStructure& b, int t, int s) { return buildGeneralized(IdealParameters::make(b, t, s)); }

std::set<oracle::Vec> walkSet(const LoopGraph& g, int length, const WalkOptions& o) {
  return oracle::entrySet(walkMonomials(g, length, o));
}

std::set<oracle::Vec> dfsWalks(const LoopGraph& g, int length, const WalkOptions& o) {
  const auto& b = g.structure();
  auto adjacent = [&](int u, int v) {
    if (u == v) return true;
    const int bu = b.blockOf(u), bv = b.blockOf(v);
    if (bu == bv) return false;
    if (g.mode() == AdjacencyMode::ConsecutiveBlocks && std::abs(bu - bv) != 1) return false;
    return !o.ordered || v > u;
  };
  auto keep = [&](const oracle::Vec& counts) {
    for (auto c : counts)
      if (c > static_cast<Exponent>(o.maxVisits)) return false;
    if (!o.spanning) return true;
    for (int i = 0; i < b.blockCount(); ++i) {
      unsigned d = 0;
      for (int j = 0; j < b.blockSize(i); ++j) d += counts[static_cast<std::size_t>(b.index(i, j))];
      if (!d) return false;
    }
    return true;
  };
  return oracle::walksByDfs(b.variableCount(), length + 1, adjacent, keep);
}

}  // namespace

TEST_CASE("strong graphs") {
  const auto k22 = buildStrongGraph(BlockStructure({2, 2}));
  CHECK(k22.loopCount() == 4);
  CHECK(k22.crossEdgeCount() == 4);
  const auto k222 = buildStrongGraph(BlockStructure({2, 2, 2}));
  CHECK(k222.loopCount() == 6);
  CHECK(k222.crossEdgeCount() == 12);
  CHECK(buildStrongGraph(BlockStructure({2, 2, 2}), AdjacencyMode::ConsecutiveBlocks).crossEdgeCount() == 8);
  const auto k11 = buildStrongGraph(BlockStructure({1, 1}));
  CHECK(k11.loopCount() == 2);
  CHECK(k11.crossEdgeCount() == 1);
  CHECK(k22.adjacent(0, 2));
  CHECK_FALSE(k22.adjacent(0, 1));
  CHECK(k22.hasLoop(1));
  CHECK(k22.toDot().find("x11 -- x21") != std::string::npos);

  CHECK_THROWS_AS(LoopGraph(BlockStructure({2}), {{0, 1}}, AdjacencyMode::AllDistinctBlocks), Error);
}

TEST_CASE("walk monomials") {
  const BlockStructure b222({2, 2, 2});
  const auto k222 = buildStrongGraph(b222);
  CHECK(oracle::entrySet(walkMonomials(k222, 2)) ==
        oracle::parseList(b222, {"x11x21x31", "x11x21x32", "x11x22x31", "x11x22x32", "x12x21x31", "x12x21x32",
                                 "x12x22x31", "x12x22x32"}));
  const BlockStructure b22({2, 2});
  CHECK(oracle::entrySet(walkMonomials(buildStrongGraph(b22), 3)) == oracle::entrySet(lstar(b22, 4, 2).generators()));
  const BlockStructure b11({1, 1});
  CHECK(oracle::entrySet(walkMonomials(buildStrongGraph(b11), 2)) == oracle::parseList(b11, {"x11x21^2", "x11^2x21"}));
  for (const auto& w : walkMonomials(buildStrongGraph(BlockStructure({2, 3})), 5)) {
    CHECK(w.totalDegree() == 6);
    CHECK(w.maxEntry() <= 2);
  }
}

TEST_CASE("walk enumeration matches DFS in every mode") {
  for (auto blocks : {std::vector<int>{2, 2}, {1, 3}, {2, 1, 2}, {1, 1, 1, 1}})
    for (auto mode : {AdjacencyMode::AllDistinctBlocks, AdjacencyMode::ConsecutiveBlocks}) {
      const auto g = buildStrongGraph(BlockStructure(blocks), mode);
      for (bool ordered : {false, true})
        for (bool spanning : {false, true})
          for (int length = 1; length <= 5; ++length) {
            WalkOptions o;
            o.ordered = ordered;
            o.spanning = spanning;
            CAPTURE(g.structure().toString());
            CAPTURE(modeName(mode));
            CAPTURE(ordered);
            CAPTURE(spanning);
            CAPTURE(length);
            CHECK(walkSet(g, length, o) == dfsWalks(g, length, o));
          }
    }
}

TEST_CASE("generalized graph ideals") {
  const BlockStructure b222({2, 2, 2});
  CHECK(generalizedGraphIdeal(buildStrongGraph(b222), 3) == lstar(b222, 3, 2));
  const BlockStructure b22({2, 2});
  CHECK(generalizedGraphIdeal(buildStrongGraph(b22), 4) == lstar(b22, 4, 2));
  const BlockStructure b11({1, 1});
  CHECK(oracle::entrySet(generalizedGraphIdeal(buildStrongGraph(b11), 3).generators()) ==
        oracle::parseList(b11, {"x11^2x21", "x11x21^2"}));
  CHECK_THROWS_AS(generalizedGraphIdeal(buildStrongGraph(b22), 2), Error);

  // a block of three vertices needs separators the walk cannot afford
  const BlockStructure b13({1, 3});
  const auto walks = generalizedGraphIdeal(buildStrongGraph(b13), 4);
  CHECK_FALSE(membership(ExponentVector(b13, {1, 1, 1, 1}), walks));
  CHECK(membership(ExponentVector(b13, {1, 1, 1, 1}), lstar(b13, 4, 2)));
}

TEST_CASE("edge ideal") {
  const BlockStructure b22({2, 2});
  const auto e = edgeIdeal(buildStrongGraph(b22));
  CHECK(oracle::entrySet(e.generators()) ==
        oracle::parseList(b22, {"x11x21", "x11x22", "x12x21", "x12x22", "x11^2", "x12^2", "x21^2", "x22^2"}));
  CHECK_FALSE(e == lstar(b22, 2, 2));
  const LoopGraph loops(b22, {{0, 0}, {1, 1}}, AdjacencyMode::AllDistinctBlocks);
  CHECK(oracle::entrySet(edgeIdeal(loops).generators()) == oracle::parseList(b22, {"x11^2", "x12^2"}));
}
