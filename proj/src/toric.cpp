#include "veronese/toric.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "veronese/errors.hpp"
#include "veronese/parallel.hpp"

namespace veronese {

namespace {

void requireSameDegree(const ExponentVector& u, const ExponentVector& v) {
  if (!(u.structure() == v.structure()))
    fail(ErrorKind::Structure, "sort: exponent vectors over different structures");
  if (u.totalDegree() != v.totalDegree())
    fail(ErrorKind::Parameter, "sort: both monomials must have the same degree");
}

// ---- packed fast path: one 4-bit field per variable ------------------------

constexpr int kMaxPackedVariables = 16;

std::uint64_t nibbleMask(int n, std::uint64_t pattern) {
  std::uint64_t m = 0;
  for (int k = 0; k < n; ++k) m |= pattern << (4 * k);
  return m;
}

std::uint64_t pack(const ExponentVector& v) {
  std::uint64_t out = 0;
  for (int k = 0; k < v.size(); ++k) out |= static_cast<std::uint64_t>(v[k]) << (4 * k);
  return out;
}

/// Odd-position half of the merged sequence w = u + v: entry k receives
/// ceil(w_k / 2) when an even number of occurrences precede it, else floor.
std::uint64_t packedOddHalf(std::uint64_t w, std::uint64_t ones, std::uint64_t sevens) {
  const std::uint64_t low = w & ones;
  std::uint64_t prefix = low;  // inclusive prefix parity, per nibble
  prefix ^= prefix << 4;
  prefix ^= prefix << 8;
  prefix ^= prefix << 16;
  prefix ^= prefix << 32;
  const std::uint64_t before = (prefix & ones) ^ low;
  return ((w + (ones & ~before)) >> 1) & sevens;
}

/// Squeezes the low `bits` of every nibble together (bits in 1..3).
std::uint64_t compress(std::uint64_t x, int bits) {
  switch (bits) {
    case 1:
      x = (x | x >> 3) & 0x0303030303030303ull;
      x = (x | x >> 6) & 0x000F000F000F000Full;
      x = (x | x >> 12) & 0x000000FF000000FFull;
      return (x | x >> 24) & 0xFFFFull;
    case 2:
      x = (x | x >> 2) & 0x0F0F0F0F0F0F0F0Full;
      x = (x | x >> 4) & 0x00FF00FF00FF00FFull;
      x = (x | x >> 8) & 0x0000FFFF0000FFFFull;
      return (x | x >> 16) & 0xFFFFFFFFull;
    default:
      x = (x | x >> 1) & 0x3F3F3F3F3F3F3F3Full;
      x = (x | x >> 2) & 0x0FFF0FFF0FFF0FFFull;
      x = (x | x >> 4) & 0x00FFFFFF00FFFFFFull;
      return (x | x >> 8) & 0xFFFFFFFFFFFFull;
  }
}

class PackedSet {
 public:
  PackedSet(std::span<const ExponentVector> gens, int n, Exponent maxEntry) {
    bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(maxEntry))));
    if (bits_ * n <= 26) {
      // anything with a bit outside the low fields cannot be a generator
      outside_ = ~nibbleMask(n, (std::uint64_t{1} << bits_) - 1);
      bitmap_.assign((std::size_t{1} << (bits_ * n)) / 64 + 1, 0);
      for (const auto& g : gens) {
        const auto idx = compress(pack(g), bits_);
        bitmap_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      }
    } else {
      for (const auto& g : gens) hashed_.insert(pack(g));
    }
  }

  bool contains(std::uint64_t packed) const {
    if (!bitmap_.empty()) {
      if (packed & outside_) return false;
      const auto idx = compress(packed, bits_);
      return bitmap_[idx >> 6] >> (idx & 63) & 1;
    }
    return hashed_.count(packed) != 0;
  }

 private:
  int bits_ = 1;
  std::uint64_t outside_ = 0;
  std::vector<std::uint64_t> bitmap_;
  std::unordered_set<std::uint64_t> hashed_;
};

bool isSortablePacked(std::span<const ExponentVector> gens, int n, Exponent maxEntry) {
  const std::uint64_t ones = nibbleMask(n, 0x1);
  const std::uint64_t sevens = nibbleMask(n, 0x7);
  std::vector<std::uint64_t> packed(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) packed[i] = pack(gens[i]);
  const PackedSet set(gens, n, maxEntry);
  for (std::size_t i = 0; i < packed.size(); ++i) {
    for (std::size_t j = i; j < packed.size(); ++j) {
      const std::uint64_t w = packed[i] + packed[j];
      const std::uint64_t odd = packedOddHalf(w, ones, sevens);
      if (!set.contains(odd) || !set.contains(w - odd)) return false;
    }
  }
  return true;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Exponent>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

}  // namespace

SortPair sortPair(const ExponentVector& u, const ExponentVector& v) {
  requireSameDegree(u, v);
  const auto n = static_cast<std::size_t>(u.size());
  std::vector<Exponent> odd(n), even(n);
  std::uint64_t before = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t c = static_cast<std::uint64_t>(u.entries()[k]) + v.entries()[k];
    // positions before+1 .. before+c of the merged sequence, 1-based
    const std::uint64_t oddCount = (before % 2 == 0) ? (c + 1) / 2 : c / 2;
    odd[k] = static_cast<Exponent>(oddCount);
    even[k] = static_cast<Exponent>(c - oddCount);
    before += c;
  }
  return {ExponentVector(u.structure(), std::move(odd)), ExponentVector(u.structure(), std::move(even))};
}

bool isSortedPair(const ExponentVector& u, const ExponentVector& v) {
  const auto s = sortPair(u, v);
  return (s.first == u && s.second == v) || (s.first == v && s.second == u);
}

bool isSortable(std::span<const ExponentVector> gens) {
  if (gens.empty()) return true;
  const auto& structure = gens.front().structure();
  const auto degree = gens.front().totalDegree();
  Exponent maxEntry = 0;
  for (const auto& g : gens) {
    if (!(g.structure() == structure) || g.totalDegree() != degree)
      fail(ErrorKind::Parameter, "isSortable: generators must share structure and degree");
    maxEntry = std::max(maxEntry, g.maxEntry());
  }
  const int n = structure.variableCount();
  if (n <= kMaxPackedVariables && 2 * static_cast<std::uint64_t>(maxEntry) + 1 <= 15)
    return isSortablePacked(gens, n, maxEntry);

  std::unordered_set<std::vector<Exponent>, VectorHash> set;
  for (const auto& g : gens) set.emplace(g.entries().begin(), g.entries().end());
  auto member = [&](const ExponentVector& v) {
    return set.count(std::vector<Exponent>(v.entries().begin(), v.entries().end())) != 0;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const auto s = sortPair(gens[i], gens[j]);
      if (!member(s.first) || !member(s.second)) return false;
    }
  return true;
}

// ------------------------------------------------------------ presentation

ToricPresentation::ToricPresentation(const MonomialIdeal& ideal)
    : ideal_(ideal), sortable_(false) {
  if (ideal_.isZero()) fail(ErrorKind::Domain, "toric presentation of the zero ideal");
  const auto degree = ideal_.generators().front().totalDegree();
  for (const auto& g : ideal_.generators())
    if (g.totalDegree() != degree)
      fail(ErrorKind::Domain, "toric presentation needs generators of one degree");
  sortable_ = isSortable(ideal_.generators());
}

std::optional<std::size_t> ToricPresentation::indexOf(const ExponentVector& v) const {
  const auto& gens = ideal_.generators();
  auto it = std::lower_bound(gens.begin(), gens.end(), v);
  if (it == gens.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - gens.begin());
}

namespace {

void requireSortable(const ToricPresentation& p, const char* op) {
  if (!p.sortable())
    fail(ErrorKind::Domain, std::string(op) + ": generator set is not sortable");
}

/// Sorted image of the pair (i, j) as generator indices.
std::pair<std::size_t, std::size_t> sortedImage(const ToricPresentation& p, std::size_t i,
                                                std::size_t j) {
  const auto s = sortPair(p[i], p[j]);
  const auto a = p.indexOf(s.first);
  const auto b = p.indexOf(s.second);
  if (!a || !b) fail(ErrorKind::Domain, "sorted image left the generator set");
  return {*a, *b};
}

bool pairSorted(std::size_t i, std::size_t j, std::pair<std::size_t, std::size_t> image) {
  return (image.first == i && image.second == j) || (image.first == j && image.second == i);
}

}  // namespace

std::vector<SortingRelation> sortingRelations(const ToricPresentation& presentation) {
  requireSortable(presentation, "sortingRelations");
  std::vector<SortingRelation> out;
  for (std::size_t i = 0; i < presentation.size(); ++i)
    for (std::size_t j = i + 1; j < presentation.size(); ++j) {
      const auto image = sortedImage(presentation, i, j);
      if (!pairSorted(i, j, image)) out.push_back({i, j, image.first, image.second});
    }
  return out;
}

std::size_t sortingRelationCount(const ToricPresentation& presentation) {
  requireSortable(presentation, "sortingRelationCount");
  std::size_t count = 0;
  for (std::size_t i = 0; i < presentation.size(); ++i)
    for (std::size_t j = i + 1; j < presentation.size(); ++j)
      if (!isSortedPair(presentation[i], presentation[j])) ++count;
  return count;
}

ExponentVector multisetDegree(const ToricPresentation& presentation, const GeneratorMultiset& m) {
  auto acc = ExponentVector::zero(presentation.ideal().structure());
  for (std::size_t i : m) acc = multiply(acc, presentation[i]);
  return acc;
}

std::vector<GeneratorMultiset> fiber(const ToricPresentation& presentation, int degree,
                                     const ExponentVector& target) {
  std::vector<GeneratorMultiset> out;
  if (degree < 1) return out;
  const auto& gens = presentation.generators();
  if (target.totalDegree() != gens.front().totalDegree() * static_cast<std::uint64_t>(degree))
    return out;
  GeneratorMultiset current;
  auto rec = [&](auto&& self, std::size_t from, const ExponentVector& remaining) -> void {
    if (static_cast<int>(current.size()) == degree) {
      if (remaining.isZero()) out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (!divides(gens[i], remaining)) continue;
      current.push_back(i);
      self(self, i, quotientByGcd(remaining, gens[i]));
      current.pop_back();
    }
  };
  rec(rec, 0, target);
  return out;
}

NormalFormResult normalForm(const ToricPresentation& presentation, GeneratorMultiset multiset,
                            std::size_t stepCap) {
  requireSortable(presentation, "normalForm");
  std::sort(multiset.begin(), multiset.end());
  NormalFormResult result;
  std::set<GeneratorMultiset> seen{multiset};
  for (;;) {
    bool rewrote = false;
    for (std::size_t a = 0; a < multiset.size() && !rewrote; ++a)
      for (std::size_t b = a + 1; b < multiset.size() && !rewrote; ++b) {
        const auto image = sortedImage(presentation, multiset[a], multiset[b]);
        if (pairSorted(multiset[a], multiset[b], image)) continue;
        multiset[a] = image.first;
        multiset[b] = image.second;
        std::sort(multiset.begin(), multiset.end());
        rewrote = true;
      }
    if (!rewrote) break;
    ++result.steps;
    if (!seen.insert(multiset).second) {
      result.cycled = true;
      result.terminated = false;
      break;
    }
    if (result.steps >= stepCap) {
      result.terminated = false;
      break;
    }
  }
  result.form = std::move(multiset);
  return result;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::string describe(const ToricPresentation& p, const GeneratorMultiset& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += p[m[i]].toString();
  }
  return out + "}";
}

std::vector<FiberViolation> checkFiber(const ToricPresentation& p, int degree,
                                       const ExponentVector& target,
                                       const std::vector<GeneratorMultiset>& members,
                                       std::size_t stepCap) {
  std::vector<FiberViolation> out;
  std::map<GeneratorMultiset, std::size_t> id;
  for (std::size_t i = 0; i < members.size(); ++i) id.emplace(members[i], i);

  UnionFind components(members.size());
  std::size_t sortedMembers = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    bool allSorted = true;
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        const auto image = sortedImage(p, m[a], m[b]);
        if (pairSorted(m[a], m[b], image)) continue;
        allSorted = false;
        auto moved = m;
        moved[a] = image.first;
        moved[b] = image.second;
        std::sort(moved.begin(), moved.end());
        const auto it = id.find(moved);
        if (it == id.end()) {
          out.push_back({degree, target, "disconnected", "sorting move left the fiber from " + describe(p, m)});
          continue;
        }
        components.unite(i, it->second);
      }
    if (allSorted) ++sortedMembers;
  }
  const auto root = components.find(0);
  for (std::size_t i = 1; i < members.size(); ++i)
    if (components.find(i) != root) {
      out.push_back({degree, target, "disconnected", describe(p, members[i]) + " not reachable from " + describe(p, members[0])});
      break;
    }
  if (sortedMembers != 1)
    out.push_back({degree, target, "sorted-count", std::to_string(sortedMembers) + " fully sorted members"});

  std::optional<GeneratorMultiset> shared;
  for (const auto& m : members) {
    const auto nf = normalForm(p, m, stepCap);
    if (!nf.terminated) {
      out.push_back({degree, target, "nontermination",
                     describe(p, m) + (nf.cycled ? " cycles" : " exceeded the step cap")});
      continue;
    }
    if (!shared) {
      shared = nf.form;
    } else if (*shared != nf.form) {
      out.push_back({degree, target, "normal-form",
                     describe(p, m) + " reduces to " + describe(p, nf.form) + ", not " + describe(p, *shared)});
    }
  }
  return out;
}

}  // namespace

GroebnerEvidence quadraticGBEvidence(const ToricPresentation& presentation, int maxDegree,
                                     const Limits& limits) {
  requireSortable(presentation, "quadraticGBEvidence");
  if (maxDegree < 2) fail(ErrorKind::Parameter, "GB evidence needs max degree >= 2");
  GroebnerEvidence evidence;
  evidence.sortable = true;
  evidence.relationCount = sortingRelationCount(presentation);

  const std::size_t p = presentation.size();
  for (int degree = 2; degree <= maxDegree; ++degree) {
    // group all multisets of this degree by exponent sum
    std::map<ExponentVector, std::vector<GeneratorMultiset>> fibers;
    std::uint64_t visited = 0;
    GeneratorMultiset current;
    auto rec = [&](auto&& self, std::size_t from, const ExponentVector& sum) -> void {
      if (static_cast<int>(current.size()) == degree) {
        if (++visited > limits.maxFiberMultisets)
          fail(ErrorKind::Guard, "fiber enumeration exceeds cap " + std::to_string(limits.maxFiberMultisets));
        fibers[sum].push_back(current);
        return;
      }
      for (std::size_t i = from; i < p; ++i) {
        current.push_back(i);
        self(self, i, multiply(sum, presentation[i]));
        current.pop_back();
      }
    };
    rec(rec, 0, ExponentVector::zero(presentation.ideal().structure()));

    std::vector<const std::pair<const ExponentVector, std::vector<GeneratorMultiset>>*> order;
    for (const auto& entry : fibers) order.push_back(&entry);
    std::vector<std::vector<FiberViolation>> found(order.size());
    parallelFor(order.size(), limits.threads, [&](std::size_t i) {
      found[i] = checkFiber(presentation, degree, order[i]->first, order[i]->second,
                            limits.maxNormalFormSteps);
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto size = order[i]->second.size();
      ++evidence.fibersChecked;
      if (size > 1) ++evidence.nontrivialFibers;
      if (degree == 2) evidence.quadraticKernelRank += size - 1;
      for (auto& v : found[i]) evidence.violations.push_back(std::move(v));
    }
  }
  return evidence;
}

}  // namespace veronese
