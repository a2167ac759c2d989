#pragma once

// Multigraded Betti numbers of monomial ideals through upper Koszul
// simplicial complexes:
//
//   beta_{i,a}(I) = dim_Q  H~_{i-1}( K^a(I) ),
//   K^a(I) = { squarefree W within supp(a) : x^(a-W) in I }.
//
// Only multidegrees a <= lcm(G(I)) can carry Betti numbers, so the box below
// the lcm is enumerated exhaustively.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "veronese/limits.hpp"
#include "veronese/monomial.hpp"

namespace veronese {

/// Simplicial complex on a labelled vertex set. Faces are bitmasks over the
/// positions of `vertices` (bit i <-> vertices[i]). The void complex has no
/// faces; the irrelevant complex {∅} has only the empty face.
class SimplicialComplex {
 public:
  using Face = std::uint64_t;

  /// Downward closure of the given facets.
  static SimplicialComplex fromFacets(std::vector<int> vertices, const std::vector<Face>& facets);
  /// Exact face family; domain error unless it is closed under subsets.
  static SimplicialComplex fromFaces(std::vector<int> vertices, std::vector<Face> faces);

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::vector<Face> facets() const;
  bool isVoid() const noexcept { return faces_.empty(); }
  bool contains(Face f) const;
  /// sum_{k >= -1} (-1)^k f_k
  std::int64_t reducedEulerCharacteristic() const;

 private:
  SimplicialComplex(std::vector<int> vertices, std::vector<Face> faces)
      : vertices_(std::move(vertices)), faces_(std::move(faces)) {}

  std::vector<int> vertices_;
  std::vector<Face> faces_;  // sorted
};

/// K^a(I) on the vertex set supp(a).
SimplicialComplex upperKoszulComplex(const MonomialIdeal& ideal, const ExponentVector& a);

/// ranks[k + 1] = dim H~_k over Q for k = -1 .. dim C. Empty for the void
/// complex.
std::vector<std::uint64_t> reducedHomologyRanks(const SimplicialComplex& complex);

/// Exact rank over Q of an integer matrix (fraction-free elimination).
std::size_t exactRank(std::vector<std::vector<std::int64_t>> matrix);

struct BettiTable {
  enum class Convention { Ideal, Quotient };

  /// (homological index i, multidegree a) -> beta_{i,a}; zero entries omitted.
  using FineKey = std::pair<int, std::vector<Exponent>>;
  Convention convention = Convention::Ideal;
  std::map<FineKey, std::uint64_t> fine;

  /// (i, j) -> sum over |a| = j.
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> coarse() const;
  /// beta_{i,j}(T/I) = beta_{i-1,j}(I) for i >= 1 and beta_{0,0}(T/I) = 1.
  BettiTable toQuotient() const;
  /// max{ j - i : beta_{i,j} != 0 } in the table's own convention.
  std::int64_t regularity() const;
  /// Total Betti numbers per homological index.
  std::vector<std::uint64_t> totals() const;
};

/// Betti table of I (ideal convention); guard error when the lcm box exceeds
/// limits.maxBettiBox.
BettiTable bettiNumbers(const MonomialIdeal& ideal, const Limits& limits = {});

/// reg(T/I).
int regularityOracle(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace veronese
