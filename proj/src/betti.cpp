#include "veronese/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "veronese/errors.hpp"
#include "veronese/parallel.hpp"

namespace veronese {

namespace {

using Face = SimplicialComplex::Face;

int faceDimension(Face f) { return std::popcount(f) - 1; }

void requireVertexCount(std::size_t count) {
  if (count > 62) fail(ErrorKind::Guard, "simplicial complexes are limited to 62 vertices");
}

}  // namespace

// --------------------------------------------------------------- complexes

SimplicialComplex SimplicialComplex::fromFacets(std::vector<int> vertices,
                                                const std::vector<Face>& facets) {
  requireVertexCount(vertices.size());
  const Face all = vertices.empty() ? 0 : (Face{1} << vertices.size()) - 1;
  std::vector<Face> faces;
  for (Face facet : facets) {
    if ((facet & ~all) != 0) fail(ErrorKind::Domain, "facet uses a vertex outside the vertex set");
    // every submask of the facet, including the empty face
    for (Face sub = facet;; sub = (sub - 1) & facet) {
      faces.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return {std::move(vertices), std::move(faces)};
}

SimplicialComplex SimplicialComplex::fromFaces(std::vector<int> vertices, std::vector<Face> faces) {
  requireVertexCount(vertices.size());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c(std::move(vertices), std::move(faces));
  for (Face f : c.faces_)
    for (Face rest = f; rest != 0; rest &= rest - 1)
      if (!c.contains(f & ~(rest & (~rest + 1))))
        fail(ErrorKind::Domain, "face family is not closed under taking subsets");
  return c;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (Face f : faces_) {
    const bool maximal = std::none_of(faces_.begin(), faces_.end(), [f](Face g) {
      return g != f && (g & f) == f;
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::int64_t SimplicialComplex::reducedEulerCharacteristic() const {
  std::int64_t chi = 0;
  for (Face f : faces_) chi += (faceDimension(f) % 2 == 0) ? 1 : -1;
  return chi;
}

// ------------------------------------------------------------- exact rank

std::size_t exactRank(std::vector<std::vector<std::int64_t>> matrix) {
  // Bareiss elimination: after step k every entry is a (k+1)-minor of the
  // input, so the division by the previous pivot is exact.
  const std::size_t rows = matrix.size();
  if (rows == 0) return 0;
  const std::size_t cols = matrix.front().size();
  std::int64_t previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[rank]);
    const __int128 p = matrix[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const __int128 lead = matrix[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        const __int128 value = (p * matrix[r][c] - lead * matrix[rank][c]) / previous;
        if (value > std::numeric_limits<std::int64_t>::max() ||
            value < std::numeric_limits<std::int64_t>::min())
          fail(ErrorKind::Guard, "exact rank: intermediate minor exceeds 64 bits");
        matrix[r][c] = static_cast<std::int64_t>(value);
      }
      matrix[r][col] = 0;
    }
    previous = matrix[rank][col];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- homology

std::vector<std::uint64_t> reducedHomologyRanks(const SimplicialComplex& complex) {
  if (complex.isVoid()) return {};
  int top = -1;
  for (Face f : complex.faces()) top = std::max(top, faceDimension(f));
  // byDim[d + 1] = faces of dimension d
  std::vector<std::vector<Face>> byDim(static_cast<std::size_t>(top + 2));
  for (Face f : complex.faces()) byDim[static_cast<std::size_t>(faceDimension(f) + 1)].push_back(f);

  // boundaryRank[d + 1] = rank of the boundary map from d-faces to (d-1)-faces
  std::vector<std::size_t> boundaryRank(byDim.size() + 1, 0);
  for (int d = 0; d <= top; ++d) {
    const auto& lower = byDim[static_cast<std::size_t>(d)];
    const auto& upper = byDim[static_cast<std::size_t>(d + 1)];
    std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      const Face face = upper[c];
      int position = 0;
      for (Face rest = face; rest != 0; rest &= rest - 1, ++position) {
        const Face drop = rest & (~rest + 1);
        const auto it = std::lower_bound(lower.begin(), lower.end(), face & ~drop);
        m[static_cast<std::size_t>(it - lower.begin())][c] = (position % 2 == 0) ? 1 : -1;
      }
    }
    boundaryRank[static_cast<std::size_t>(d + 1)] = exactRank(std::move(m));
  }

  std::vector<std::uint64_t> ranks(byDim.size());
  for (std::size_t i = 0; i < byDim.size(); ++i) {
    // H~_{i-1} = ker(boundary out of dim i-1) / im(boundary out of dim i)
    ranks[i] = byDim[i].size() - boundaryRank[i] - boundaryRank[i + 1];
  }
  return ranks;
}

// ------------------------------------------------------------ Koszul complex

namespace {

/// Mixed-radix box [0, bound] with a precomputed membership table.
class MembershipBox {
 public:
  MembershipBox(const MonomialIdeal& ideal, const ExponentVector& bound) : bound_(bound) {
    const int n = bound.size();
    strides_.assign(static_cast<std::size_t>(n), 1);
    std::uint64_t size = 1;
    for (int k = n - 1; k >= 0; --k) {
      strides_[static_cast<std::size_t>(k)] = size;
      size *= static_cast<std::uint64_t>(bound[k]) + 1;
    }
    inIdeal_.assign(size, 0);
    for (const auto& g : ideal.generators())
      if (divides(g, bound)) inIdeal_[encode(g.entries())] = 1;
    // Closure upward: a is in I iff a is a generator or a - e_k is in I.
    std::vector<Exponent> a(static_cast<std::size_t>(n), 0);
    for (std::uint64_t code = 0; code < size; ++code) {
      decodeInto(code, a);
      if (inIdeal_[code]) continue;
      for (int k = 0; k < n; ++k)
        if (a[static_cast<std::size_t>(k)] > 0 && inIdeal_[code - strides_[static_cast<std::size_t>(k)]]) {
          inIdeal_[code] = 1;
          break;
        }
    }
  }

  std::uint64_t size() const noexcept { return inIdeal_.size(); }
  std::uint64_t stride(int k) const { return strides_[static_cast<std::size_t>(k)]; }
  bool contains(std::uint64_t code) const { return inIdeal_[code] != 0; }

  std::uint64_t encode(std::span<const Exponent> a) const {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < a.size(); ++k) code += a[k] * strides_[k];
    return code;
  }

  void decodeInto(std::uint64_t code, std::vector<Exponent>& a) const {
    for (std::size_t k = 0; k < a.size(); ++k) {
      a[k] = static_cast<Exponent>(code / strides_[k]);
      code %= strides_[k];
    }
  }

 private:
  ExponentVector bound_;
  std::vector<std::uint64_t> strides_;
  std::vector<char> inIdeal_;
};

SimplicialComplex koszulFromBox(const MembershipBox& box, const std::vector<Exponent>& a,
                                std::uint64_t code) {
  std::vector<int> vertices;
  std::vector<std::uint64_t> steps;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0) {
      vertices.push_back(static_cast<int>(k));
      steps.push_back(box.stride(static_cast<int>(k)));
    }
  std::vector<Face> faces;
  const Face count = Face{1} << vertices.size();
  for (Face w = 0; w < count; ++w) {
    std::uint64_t shifted = code;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (w >> i & 1) shifted -= steps[i];
    if (box.contains(shifted)) faces.push_back(w);
  }
  return SimplicialComplex::fromFaces(std::move(vertices), std::move(faces));
}

/// A cone over some vertex is contractible, so all its reduced homology
/// vanishes.
bool isCone(const SimplicialComplex& c) {
  for (std::size_t v = 0; v < c.vertices().size(); ++v) {
    const Face bit = Face{1} << v;
    const bool apex = std::all_of(c.faces().begin(), c.faces().end(),
                                  [&](Face f) { return c.contains(f | bit); });
    if (apex) return true;
  }
  return false;
}

}  // namespace

SimplicialComplex upperKoszulComplex(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (!(a.structure() == ideal.structure()))
    fail(ErrorKind::Structure, "upperKoszulComplex: multidegree over a different structure");
  const auto support = a.support();
  requireVertexCount(support.size());
  std::vector<Face> faces;
  const Face count = Face{1} << support.size();
  std::vector<Exponent> shifted(a.entries().begin(), a.entries().end());
  for (Face w = 0; w < count; ++w) {
    std::copy(a.entries().begin(), a.entries().end(), shifted.begin());
    for (std::size_t i = 0; i < support.size(); ++i)
      if (w >> i & 1) --shifted[static_cast<std::size_t>(support[i])];
    if (membership(ExponentVector(a.structure(), shifted), ideal)) faces.push_back(w);
  }
  return SimplicialComplex::fromFaces(support, std::move(faces));
}

// ------------------------------------------------------------------- tables

std::map<std::pair<int, std::uint64_t>, std::uint64_t> BettiTable::coarse() const {
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> out;
  for (const auto& [key, rank] : fine) {
    std::uint64_t degree = 0;
    for (Exponent e : key.second) degree += e;
    out[{key.first, degree}] += rank;
  }
  return out;
}

BettiTable BettiTable::toQuotient() const {
  if (convention == Convention::Quotient) return *this;
  BettiTable q;
  q.convention = Convention::Quotient;
  if (!fine.empty()) {
    const auto width = fine.begin()->first.second.size();
    q.fine[{0, std::vector<Exponent>(width, 0)}] = 1;
  }
  for (const auto& [key, rank] : fine) q.fine[{key.first + 1, key.second}] = rank;
  return q;
}

std::int64_t BettiTable::regularity() const {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, rank] : coarse())
    if (rank != 0) best = std::max(best, static_cast<std::int64_t>(key.second) - key.first);
  return best;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (const auto& [key, rank] : fine) {
    if (static_cast<std::size_t>(key.first) >= out.size())
      out.resize(static_cast<std::size_t>(key.first) + 1, 0);
    out[static_cast<std::size_t>(key.first)] += rank;
  }
  return out;
}

BettiTable bettiNumbers(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.isZero()) return {};
  const auto bound = lcmOfGenerators(ideal);
  std::uint64_t size = 1;
  for (Exponent e : bound.entries()) {
    size *= static_cast<std::uint64_t>(e) + 1;
    if (size > limits.maxBettiBox)
      fail(ErrorKind::Guard, "Betti box below lcm exceeds cap " + std::to_string(limits.maxBettiBox));
  }
  requireVertexCount(static_cast<std::size_t>(bound.size()));
  const MembershipBox box(ideal, bound);

  // ranks per multidegree, filled independently
  std::vector<std::vector<std::uint64_t>> perDegree(box.size());
  parallelFor(box.size(), limits.threads, [&](std::size_t code) {
    std::vector<Exponent> a(static_cast<std::size_t>(bound.size()));
    box.decodeInto(code, a);
    const auto complex = koszulFromBox(box, a, code);
    if (complex.isVoid() || isCone(complex)) return;
    perDegree[code] = reducedHomologyRanks(complex);
  });

  BettiTable table;
  std::vector<Exponent> a(static_cast<std::size_t>(bound.size()));
  for (std::uint64_t code = 0; code < box.size(); ++code) {
    const auto& ranks = perDegree[code];
    if (ranks.empty()) continue;
    box.decodeInto(code, a);
    for (std::size_t i = 0; i < ranks.size(); ++i)
      if (ranks[i] != 0) table.fine[{static_cast<int>(i), a}] = ranks[i];
  }
  return table;
}

int regularityOracle(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.isZero() || ideal.isUnit())
    fail(ErrorKind::Domain, "regularity oracle needs a proper nonzero ideal");
  return static_cast<int>(bettiNumbers(ideal, limits).toQuotient().regularity());
}

}  // namespace veronese
