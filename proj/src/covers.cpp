#include "veronese/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

using Mask = std::uint64_t;

/// Distinct, inclusion-minimal generator supports. A set meets every
/// support iff it meets every minimal one.
std::vector<Mask> supportMasks(const MonomialIdeal& ideal) {
  std::vector<Mask> masks;
  for (const auto& g : ideal.generators()) {
    Mask m = 0;
    for (int k : g.support()) m |= Mask{1} << k;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(),
            [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> minimal;
  for (Mask m : masks)
    if (std::none_of(minimal.begin(), minimal.end(), [m](Mask k) { return (k & m) == k; })) minimal.push_back(m);
  return minimal;
}

bool covers(const std::vector<Mask>& gens, Mask w) {
  return std::all_of(gens.begin(), gens.end(), [w](Mask g) { return (g & w) != 0; });
}

std::vector<int> maskToIndices(Mask m) {
  std::vector<int> out;
  for (int k = 0; m != 0; ++k, m >>= 1)
    if (m & 1) out.push_back(k);
  return out;
}

}  // namespace

bool isVertexCover(const MonomialIdeal& ideal, const std::vector<int>& indices) {
  for (const auto& g : ideal.generators()) {
    const bool hit = std::any_of(indices.begin(), indices.end(), [&](int k) {
      return k >= 0 && k < g.size() && g[k] > 0;
    });
    if (!hit) return false;
  }
  return true;
}

std::vector<VertexCover> minimalVertexCovers(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.isZero() || ideal.isUnit())
    fail(ErrorKind::Domain, "vertex covers need a proper nonzero ideal");
  const int n = ideal.structure().variableCount();
  if (n > limits.maxVariables || n > 62)
    fail(ErrorKind::Guard, "cover enumeration over " + std::to_string(n) +
                               " variables exceeds cap " + std::to_string(limits.maxVariables));
  const auto gens = supportMasks(ideal);
  Mask universe = 0;
  for (Mask g : gens) universe |= g;
  const std::vector<int> pool = maskToIndices(universe);
  const std::size_t count = std::size_t{1} << pool.size();

  std::vector<VertexCover> out;
  for (std::size_t bits = 1; bits < count; ++bits) {
    Mask w = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (bits >> i & 1) w |= Mask{1} << pool[i];
    if (!covers(gens, w)) continue;
    bool minimal = true;
    for (Mask rest = w; rest != 0 && minimal; rest &= rest - 1) {
      const Mask drop = rest & (~rest + 1);
      minimal = !covers(gens, w & ~drop);
    }
    if (minimal) out.push_back({maskToIndices(w)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int coverNumber(const MonomialIdeal& ideal, const Limits& limits) {
  const auto all = minimalVertexCovers(ideal, limits);
  return static_cast<int>(all.front().size());
}

int dimOracle(const MonomialIdeal& ideal, const Limits& limits) {
  return ideal.structure().variableCount() - coverNumber(ideal, limits);
}

bool isUnmixed(const MonomialIdeal& ideal, const Limits& limits) {
  const auto all = minimalVertexCovers(ideal, limits);
  return all.front().size() == all.back().size();
}

std::optional<DimensionCase> dimensionCase(const IdealParameters& params) noexcept {
  const int top = params.s * params.variableCount();
  if (params.t >= 2 && params.t <= top - params.s) return DimensionCase::Generic;
  const int r = top - params.t;
  if (r >= 1 && r <= params.s - 1) return DimensionCase::NearTop;
  return std::nullopt;
}

namespace {

DimensionCase requireCase(const IdealParameters& params, const char* what) {
  auto c = dimensionCase(params);
  if (!c)
    fail(ErrorKind::Range, std::string(what) + " is stated only for 2 <= t <= sN-1 (got t=" +
                               std::to_string(params.t) + ", sN=" +
                               std::to_string(params.s * params.variableCount()) + ")");
  return *c;
}

}  // namespace

int dimFormula(const IdealParameters& params) {
  const int n = params.variableCount();
  return requireCase(params, "dimension formula") == DimensionCase::Generic
             ? n - params.structure.minBlockSize()
             : n - 1;
}

bool unmixedPredicate(const IdealParameters& params) {
  return requireCase(params, "unmixedness criterion") == DimensionCase::Generic
             ? params.structure.allBlocksEqual()
             : true;
}

int regularityFormula(const IdealParameters& params) { return params.t - 1; }

}  // namespace veronese
