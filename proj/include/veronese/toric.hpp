#pragma once

// Sorting of degree-t exponent vectors and the toric ideal of K[f_1..f_p].
//
// sort(u, v): write x^u x^v = z_{i_1} ... z_{i_2t} with i_1 <= ... <= i_2t;
// u' collects the odd positions and v' the even positions.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veronese/limits.hpp"
#include "veronese/monomial.hpp"

namespace veronese {

struct SortPair {
  ExponentVector first;
  ExponentVector second;

  friend bool operator==(const SortPair&, const SortPair&) = default;
};

SortPair sortPair(const ExponentVector& u, const ExponentVector& v);
/// sort(u, v) is (u, v) or (v, u).
bool isSortedPair(const ExponentVector& u, const ExponentVector& v);

/// True iff both components of sort(u, v) lie in the set for every pair.
bool isSortable(std::span<const ExponentVector> gens);

/// Generators f_1..f_p of K[f_1..f_p], indexed 0..p-1 in canonical order.
class ToricPresentation {
 public:
  explicit ToricPresentation(const MonomialIdeal& ideal);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<ExponentVector>& generators() const noexcept { return ideal_.generators(); }
  std::size_t size() const noexcept { return ideal_.size(); }
  const ExponentVector& operator[](std::size_t i) const { return ideal_.generators()[i]; }
  std::optional<std::size_t> indexOf(const ExponentVector& v) const;
  bool sortable() const noexcept { return sortable_; }

 private:
  MonomialIdeal ideal_;
  bool sortable_;
};

/// t_u t_v - t_u' t_v' with {u, v} unsorted; indices into the presentation.
struct SortingRelation {
  std::size_t lhsFirst, lhsSecond;  // lhsFirst < lhsSecond
  std::size_t rhsFirst, rhsSecond;  // (u', v') = sort(u, v)

  friend bool operator==(const SortingRelation&, const SortingRelation&) = default;
};

/// One relation per unsorted unordered pair; domain error if not sortable.
std::vector<SortingRelation> sortingRelations(const ToricPresentation& presentation);
std::size_t sortingRelationCount(const ToricPresentation& presentation);

/// Sorted list of generator indices with repetition: a monomial of R.
using GeneratorMultiset = std::vector<std::size_t>;

ExponentVector multisetDegree(const ToricPresentation& presentation, const GeneratorMultiset& m);

/// Every multiset of `degree` generators whose exponent sum equals target.
std::vector<GeneratorMultiset> fiber(const ToricPresentation& presentation, int degree,
                                     const ExponentVector& target);

struct NormalFormResult {
  GeneratorMultiset form;
  std::size_t steps = 0;
  bool terminated = true;  // false when the step cap tripped or a cycle was seen
  bool cycled = false;
};

/// Rewrites the first unsorted pair (in canonical pair order) by its sorted
/// image until no pair is unsorted.
NormalFormResult normalForm(const ToricPresentation& presentation, GeneratorMultiset multiset,
                            std::size_t stepCap = 10000);

struct FiberViolation {
  int degree;
  ExponentVector target;
  std::string kind;  // "disconnected", "normal-form", "nontermination", "sorted-count"
  std::string detail;
};

struct GroebnerEvidence {
  bool sortable = false;
  std::size_t relationCount = 0;
  std::size_t fibersChecked = 0;
  std::size_t nontrivialFibers = 0;
  /// Sum over degree-2 fibers of (|fiber| - 1).
  std::size_t quadraticKernelRank = 0;
  std::vector<FiberViolation> violations;

  bool passed() const noexcept { return sortable && violations.empty(); }
};

/// For every fiber of degree 2..maxDegree: connectivity under single sorting
/// moves, unique normal form under directed rewriting, termination, and
/// exactly one fully sorted member. Domain error for unsortable input.
GroebnerEvidence quadraticGBEvidence(const ToricPresentation& presentation, int maxDegree = 3,
                                     const Limits& limits = {});

}  // namespace veronese
