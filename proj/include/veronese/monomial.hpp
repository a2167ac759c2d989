#pragma once

// Exact arithmetic on monomials and monomial ideals of
// T = K[x_11..x_1m_1, ..., x_n1..x_nm_n].
//
// Variables are addressed internally by a flattened 0-based index k in
// [0, N). Block and position indices are 0-based in this API; the 1-based
// names x{i}{j} only appear in printed forms.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace veronese {

using Exponent = std::uint32_t;

/// Partition of the variables into n blocks of sizes m_1..m_n.
/// Cheap to copy; instances with equal block sizes compare equal.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> blockSizes);

  int blockCount() const noexcept { return static_cast<int>(layout_->sizes.size()); }
  int variableCount() const noexcept { return layout_->total; }
  int blockSize(int block) const { return layout_->sizes.at(block); }
  int blockOffset(int block) const { return layout_->offsets.at(block); }
  std::span<const int> blockSizes() const noexcept { return layout_->sizes; }
  int minBlockSize() const noexcept;
  bool allBlocksEqual() const noexcept;

  int index(int block, int position) const;
  std::pair<int, int> position(int k) const;
  int blockOf(int k) const { return position(k).first; }

  /// "x{i}{j}" with 1-based block and position.
  std::string variableName(int k) const;
  /// "2,2,3"
  std::string toString() const;

  friend bool operator==(const BlockStructure& a, const BlockStructure& b) noexcept {
    return a.layout_ == b.layout_ || a.layout_->sizes == b.layout_->sizes;
  }

 private:
  struct Layout {
    std::vector<int> sizes;
    std::vector<int> offsets;
    std::vector<int> blockOfVariable;
    int total = 0;
  };
  std::shared_ptr<const Layout> layout_;
};

/// A monomial of T, stored as its exponent vector.
class ExponentVector {
 public:
  ExponentVector(BlockStructure structure, std::vector<Exponent> entries);

  static ExponentVector zero(const BlockStructure& structure);
  static ExponentVector unit(const BlockStructure& structure, int k);

  const BlockStructure& structure() const noexcept { return structure_; }
  std::span<const Exponent> entries() const noexcept { return entries_; }
  Exponent operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }

  std::uint64_t totalDegree() const noexcept;
  std::uint64_t blockDegree(int block) const;
  std::span<const Exponent> block(int block) const;
  Exponent maxEntry() const noexcept;
  bool isZero() const noexcept;
  /// Indices k with a positive entry.
  std::vector<int> support() const;

  /// Pretty form "x11^2*x21", "1" for the zero vector.
  std::string toString() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return a.entries_ == b.entries_ && a.structure_ == b.structure_;
  }
  /// Canonical order: lexicographic on the flattened entries.
  friend std::strong_ordering operator<=>(const ExponentVector& a,
                                          const ExponentVector& b) noexcept {
    return a.entries_ <=> b.entries_;
  }

 private:
  BlockStructure structure_;
  std::vector<Exponent> entries_;
};

/// Componentwise a <= b.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
/// Monomial product a*b; exponent overflow is a parameter error.
ExponentVector multiply(const ExponentVector& a, const ExponentVector& b);
/// g / gcd(g, f).
ExponentVector quotientByGcd(const ExponentVector& g, const ExponentVector& f);

/// Ideal given by its minimal generating set G(I), sorted canonically.
/// No generators: the zero ideal. A single zero vector: the unit ideal.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(const BlockStructure& structure);
  static MonomialIdeal unit(const BlockStructure& structure);

  const BlockStructure& structure() const noexcept { return structure_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool isZero() const noexcept { return generators_.empty(); }
  bool isUnit() const noexcept;

  std::string toString() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(const BlockStructure&, std::vector<ExponentVector>);
  MonomialIdeal(BlockStructure structure, std::vector<ExponentVector> generators)
      : structure_(std::move(structure)), generators_(std::move(generators)) {}

  BlockStructure structure_;
  std::vector<ExponentVector> generators_;
};

/// Divisibility antichain of gens, deduplicated and canonically ordered.
MonomialIdeal minimalize(const BlockStructure& structure, std::vector<ExponentVector> gens);

bool membership(const ExponentVector& f, const MonomialIdeal& ideal);
MonomialIdeal colonIdeal(const MonomialIdeal& ideal, const ExponentVector& f);
MonomialIdeal idealSum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal idealProduct(const MonomialIdeal& a, const MonomialIdeal& b);
/// lcm of all minimal generators; zero vector for the zero ideal.
ExponentVector lcmOfGenerators(const MonomialIdeal& ideal);

/// Support F of the monomial prime P_F, kept sorted.
class PrimeSupport {
 public:
  PrimeSupport(BlockStructure structure, std::vector<int> indices);

  const BlockStructure& structure() const noexcept { return structure_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(int k) const;

  MonomialIdeal toIdeal() const;
  /// "(x11, x21)"
  std::string toString() const;

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) noexcept {
    return a.indices_ == b.indices_ && a.structure_ == b.structure_;
  }
  /// By cardinality, then lexicographically.
  friend std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b) noexcept;

 private:
  BlockStructure structure_;
  std::vector<int> indices_;
};

/// The prime P_F when every generator is a single variable.
std::optional<PrimeSupport> asPrime(const MonomialIdeal& ideal);

}  // namespace veronese
