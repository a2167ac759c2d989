#pragma once

#include <vector>

#include "veronese/monomial.hpp"

namespace veronese {

/// (structure, t, s) for L*_{t,s}. make() enforces s <= t, n <= t <= s*N.
struct IdealParameters {
  BlockStructure structure;
  int t = 0;
  int s = 0;

  static IdealParameters make(BlockStructure structure, int t, int s);
  /// True when make() would accept the triple.
  static bool admissible(const BlockStructure& structure, int t, int s) noexcept;

  int variableCount() const noexcept { return structure.variableCount(); }
  /// s*N - t.
  int excess() const noexcept { return s * variableCount() - t; }
};

/// L_{i,q,s}: monomials supported on `block` of degree q with entries <= s.
MonomialIdeal veroneseType(const BlockStructure& structure, int block, int q, int s);

/// All (q_1..q_n) with q_i >= 1 summing to total, lexicographically.
std::vector<std::vector<int>> compositions(int total, int parts);

/// L*_{t,s} from its direct description: degree t, entries <= s, every
/// block touched.
MonomialIdeal buildGeneralized(const IdealParameters& params);

/// L*_{t,s} as the sum over compositions of products of Veronese-type ideals.
MonomialIdeal buildGeneralizedByCompositions(const IdealParameters& params);

}  // namespace veronese
