#pragma once

#include <optional>
#include <vector>

#include "veronese/builders.hpp"
#include "veronese/limits.hpp"
#include "veronese/monomial.hpp"

namespace veronese {

/// A set W of variable indices, sorted.
struct VertexCover {
  std::vector<int> indices;

  std::size_t size() const noexcept { return indices.size(); }
  friend bool operator==(const VertexCover&, const VertexCover&) = default;
  /// By cardinality, then lexicographically.
  friend auto operator<=>(const VertexCover& a, const VertexCover& b) {
    if (auto c = a.indices.size() <=> b.indices.size(); c != 0) return c;
    return a.indices <=> b.indices;
  }
};

bool isVertexCover(const MonomialIdeal& ideal, const std::vector<int>& indices);

/// Every inclusion-minimal cover, found by exhaustive subset enumeration over
/// the union of generator supports. Guard error above limits.maxVariables.
std::vector<VertexCover> minimalVertexCovers(const MonomialIdeal& ideal,
                                             const Limits& limits = {});

/// h(I), the least cover cardinality.
int coverNumber(const MonomialIdeal& ideal, const Limits& limits = {});
/// N - h(I).
int dimOracle(const MonomialIdeal& ideal, const Limits& limits = {});
bool isUnmixed(const MonomialIdeal& ideal, const Limits& limits = {});

/// Which closed form applies: Generic for 2 <= t <= sN - s, NearTop for
/// t = sN - r with 1 <= r <= s - 1.
enum class DimensionCase { Generic, NearTop };
std::optional<DimensionCase> dimensionCase(const IdealParameters& params) noexcept;

/// N - min m_i (Generic) or N - 1 (NearTop); range error elsewhere.
int dimFormula(const IdealParameters& params);
/// m_1 = ... = m_n (Generic) or true (NearTop); range error elsewhere.
bool unmixedPredicate(const IdealParameters& params);
/// reg(T / L*_{t,s}) = t - 1.
int regularityFormula(const IdealParameters& params);

}  // namespace veronese
