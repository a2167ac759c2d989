#include "veronese/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

void requireSameStructure(const BlockStructure& a, const BlockStructure& b, const char* op) {
  if (!(a == b)) {
    fail(ErrorKind::Structure, std::string(op) + ": block structures differ (" + a.toString() +
                                   " vs " + b.toString() + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- structure

BlockStructure::BlockStructure(std::vector<int> blockSizes) {
  if (blockSizes.empty()) fail(ErrorKind::Parameter, "block structure needs at least one block");
  auto layout = std::make_shared<Layout>();
  for (int m : blockSizes) {
    if (m < 1) fail(ErrorKind::Parameter, "block sizes must be positive");
    layout->offsets.push_back(layout->total);
    for (int j = 0; j < m; ++j)
      layout->blockOfVariable.push_back(static_cast<int>(layout->sizes.size()));
    layout->sizes.push_back(m);
    layout->total += m;
  }
  layout_ = std::move(layout);
}

int BlockStructure::minBlockSize() const noexcept {
  return *std::min_element(layout_->sizes.begin(), layout_->sizes.end());
}

bool BlockStructure::allBlocksEqual() const noexcept {
  const auto& s = layout_->sizes;
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

int BlockStructure::index(int block, int position) const {
  if (block < 0 || block >= blockCount() || position < 0 || position >= blockSize(block))
    fail(ErrorKind::Parameter, "variable position out of range");
  return layout_->offsets[block] + position;
}

std::pair<int, int> BlockStructure::position(int k) const {
  if (k < 0 || k >= variableCount()) fail(ErrorKind::Parameter, "variable index out of range");
  const int block = layout_->blockOfVariable[k];
  return {block, k - layout_->offsets[block]};
}

std::string BlockStructure::variableName(int k) const {
  auto [block, pos] = position(k);
  return "x" + std::to_string(block + 1) + std::to_string(pos + 1);
}

std::string BlockStructure::toString() const {
  std::string out;
  for (std::size_t i = 0; i < layout_->sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(layout_->sizes[i]);
  }
  return out;
}

// ------------------------------------------------------------ exponent vector

ExponentVector::ExponentVector(BlockStructure structure, std::vector<Exponent> entries)
    : structure_(std::move(structure)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != structure_.variableCount())
    fail(ErrorKind::Structure, "exponent vector length " + std::to_string(entries_.size()) +
                                   " does not match N = " +
                                   std::to_string(structure_.variableCount()));
}

ExponentVector ExponentVector::zero(const BlockStructure& structure) {
  return {structure, std::vector<Exponent>(static_cast<std::size_t>(structure.variableCount()), 0)};
}

ExponentVector ExponentVector::unit(const BlockStructure& structure, int k) {
  auto v = std::vector<Exponent>(static_cast<std::size_t>(structure.variableCount()), 0);
  if (k < 0 || k >= structure.variableCount())
    fail(ErrorKind::Parameter, "variable index out of range");
  v[static_cast<std::size_t>(k)] = 1;
  return {structure, std::move(v)};
}

std::uint64_t ExponentVector::totalDegree() const noexcept {
  std::uint64_t sum = 0;
  for (Exponent e : entries_) sum += e;
  return sum;
}

std::span<const Exponent> ExponentVector::block(int b) const {
  return std::span<const Exponent>(entries_).subspan(
      static_cast<std::size_t>(structure_.blockOffset(b)),
      static_cast<std::size_t>(structure_.blockSize(b)));
}

std::uint64_t ExponentVector::blockDegree(int b) const {
  std::uint64_t sum = 0;
  for (Exponent e : block(b)) sum += e;
  return sum;
}

Exponent ExponentVector::maxEntry() const noexcept {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool ExponentVector::isZero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
}

std::vector<int> ExponentVector::support() const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (entries_[static_cast<std::size_t>(k)] > 0) out.push_back(k);
  return out;
}

std::string ExponentVector::toString() const {
  std::string out;
  for (int k = 0; k < size(); ++k) {
    const Exponent e = entries_[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += structure_.variableName(k);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  requireSameStructure(a.structure(), b.structure(), "divides");
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k)
    if (ea[k] > eb[k]) return false;
  return true;
}

namespace {

template <class Op>
ExponentVector combine(const ExponentVector& a, const ExponentVector& b, const char* name, Op op) {
  requireSameStructure(a.structure(), b.structure(), name);
  std::vector<Exponent> out(a.entries().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(a.entries()[k], b.entries()[k]);
  return {a.structure(), std::move(out)};
}

}  // namespace

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  return combine(a, b, "lcm", [](Exponent x, Exponent y) { return std::max(x, y); });
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  return combine(a, b, "gcd", [](Exponent x, Exponent y) { return std::min(x, y); });
}

ExponentVector multiply(const ExponentVector& a, const ExponentVector& b) {
  return combine(a, b, "multiply", [](Exponent x, Exponent y) {
    if (x > std::numeric_limits<Exponent>::max() - y)
      fail(ErrorKind::Parameter, "exponent overflow in monomial product");
    return static_cast<Exponent>(x + y);
  });
}

ExponentVector quotientByGcd(const ExponentVector& g, const ExponentVector& f) {
  return combine(g, f, "colon", [](Exponent x, Exponent y) { return x - std::min(x, y); });
}

// ------------------------------------------------------------------- ideals

MonomialIdeal MonomialIdeal::zero(const BlockStructure& structure) { return {structure, {}}; }

MonomialIdeal MonomialIdeal::unit(const BlockStructure& structure) {
  return {structure, {ExponentVector::zero(structure)}};
}

bool MonomialIdeal::isUnit() const noexcept {
  return generators_.size() == 1 && generators_.front().isZero();
}

std::string MonomialIdeal::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].toString();
  }
  return out + ")";
}

MonomialIdeal minimalize(const BlockStructure& structure, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) requireSameStructure(structure, g.structure(), "minimalize");
  // A divisor never has larger total degree, so scanning by degree lets each
  // candidate be tested only against already accepted generators.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.totalDegree();
    const auto db = b.totalDegree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Distinct vectors of equal degree never divide each other, so only the
  // strictly lower degrees are consulted.
  std::vector<ExponentVector> kept;
  std::size_t lower = 0;  // kept[0, lower) has degree below the current one
  for (auto& g : gens) {
    if (!kept.empty() && kept.back().totalDegree() < g.totalDegree()) lower = kept.size();
    const bool redundant = std::any_of(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(lower),
                                       [&](const ExponentVector& h) { return divides(h, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return {structure, std::move(kept)};
}

bool membership(const ExponentVector& f, const MonomialIdeal& ideal) {
  requireSameStructure(f.structure(), ideal.structure(), "membership");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& g) { return divides(g, f); });
}

MonomialIdeal colonIdeal(const MonomialIdeal& ideal, const ExponentVector& f) {
  requireSameStructure(f.structure(), ideal.structure(), "colonIdeal");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(quotientByGcd(g, f));
  return minimalize(ideal.structure(), std::move(gens));
}

MonomialIdeal idealSum(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameStructure(a.structure(), b.structure(), "idealSum");
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.structure(), std::move(gens));
}

MonomialIdeal idealProduct(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameStructure(a.structure(), b.structure(), "idealProduct");
  std::vector<ExponentVector> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(multiply(g, h));
  return minimalize(a.structure(), std::move(gens));
}

ExponentVector lcmOfGenerators(const MonomialIdeal& ideal) {
  auto acc = ExponentVector::zero(ideal.structure());
  for (const auto& g : ideal.generators()) acc = lcm(acc, g);
  return acc;
}

// ------------------------------------------------------------------- primes

PrimeSupport::PrimeSupport(BlockStructure structure, std::vector<int> indices)
    : structure_(std::move(structure)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) fail(ErrorKind::Parameter, "prime support must be non-empty");
  if (indices_.front() < 0 || indices_.back() >= structure_.variableCount())
    fail(ErrorKind::Parameter, "prime support index out of range");
}

bool PrimeSupport::contains(int k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

MonomialIdeal PrimeSupport::toIdeal() const {
  std::vector<ExponentVector> gens;
  for (int k : indices_) gens.push_back(ExponentVector::unit(structure_, k));
  return minimalize(structure_, std::move(gens));
}

std::string PrimeSupport::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ", ";
    out += structure_.variableName(indices_[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b) noexcept {
  if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0) return c;
  return a.indices_ <=> b.indices_;
}

std::optional<PrimeSupport> asPrime(const MonomialIdeal& ideal) {
  if (ideal.isZero()) return std::nullopt;
  std::vector<int> indices;
  for (const auto& g : ideal.generators()) {
    if (g.totalDegree() != 1) return std::nullopt;
    indices.push_back(g.support().front());
  }
  return PrimeSupport(ideal.structure(), std::move(indices));
}

}  // namespace veronese
