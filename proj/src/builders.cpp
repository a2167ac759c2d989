#include "veronese/builders.hpp"

#include <functional>
#include <string>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

// Calls emit(entries) for every vector in [0, cap]^length with the given sum,
// in lexicographically decreasing order of the first entry.
void forEachBoundedComposition(int length, int sum, int cap,
                               const std::function<void(const std::vector<Exponent>&)>& emit) {
  std::vector<Exponent> current(static_cast<std::size_t>(length), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == length - 1) {
      if (remaining <= cap) {
        current[static_cast<std::size_t>(pos)] = static_cast<Exponent>(remaining);
        emit(current);
      }
      return;
    }
    const int slotsLeft = length - pos - 1;
    for (int e = std::min(cap, remaining); e >= 0; --e) {
      if (remaining - e > cap * slotsLeft) break;
      current[static_cast<std::size_t>(pos)] = static_cast<Exponent>(e);
      rec(pos + 1, remaining - e);
    }
  };
  if (length > 0 && sum >= 0) rec(0, sum);
}

}  // namespace

bool IdealParameters::admissible(const BlockStructure& structure, int t, int s) noexcept {
  return s >= 1 && t >= 1 && s <= t && structure.blockCount() <= t &&
         static_cast<long long>(t) <= static_cast<long long>(s) * structure.variableCount();
}

IdealParameters IdealParameters::make(BlockStructure structure, int t, int s) {
  if (s < 1 || t < 1) fail(ErrorKind::Parameter, "t and s must be positive");
  if (s > t) fail(ErrorKind::Parameter, "requires s <= t (got s=" + std::to_string(s) +
                                            ", t=" + std::to_string(t) + ")");
  if (structure.blockCount() > t)
    fail(ErrorKind::Parameter, "requires n <= t: every block needs degree >= 1");
  if (static_cast<long long>(t) > static_cast<long long>(s) * structure.variableCount())
    fail(ErrorKind::Parameter, "requires t <= s*N, otherwise L*_{t,s} has no generators");
  return {std::move(structure), t, s};
}

MonomialIdeal veroneseType(const BlockStructure& structure, int block, int q, int s) {
  if (block < 0 || block >= structure.blockCount())
    fail(ErrorKind::Parameter, "block index out of range");
  if (s < 1) fail(ErrorKind::Parameter, "cap s must be positive");
  const int m = structure.blockSize(block);
  if (q < 1 || q > s * m)
    fail(ErrorKind::Parameter, "Veronese-type degree q must satisfy 1 <= q <= s*m_i");
  std::vector<ExponentVector> gens;
  const auto offset = static_cast<std::size_t>(structure.blockOffset(block));
  forEachBoundedComposition(m, q, s, [&](const std::vector<Exponent>& local) {
    auto entries = std::vector<Exponent>(static_cast<std::size_t>(structure.variableCount()), 0);
    std::copy(local.begin(), local.end(), entries.begin() + static_cast<std::ptrdiff_t>(offset));
    gens.emplace_back(structure, std::move(entries));
  });
  return minimalize(structure, std::move(gens));
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts < 1 || total < parts) return out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == parts - 1) {
      current[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int q = 1; q <= remaining - (parts - pos - 1); ++q) {
      current[static_cast<std::size_t>(pos)] = q;
      rec(pos + 1, remaining - q);
    }
  };
  rec(0, total);
  return out;
}

MonomialIdeal buildGeneralized(const IdealParameters& params) {
  const auto& structure = params.structure;
  std::vector<ExponentVector> gens;
  forEachBoundedComposition(
      structure.variableCount(), params.t, params.s, [&](const std::vector<Exponent>& entries) {
        ExponentVector v(structure, entries);
        for (int b = 0; b < structure.blockCount(); ++b)
          if (v.blockDegree(b) == 0) return;
        gens.push_back(std::move(v));
      });
  return minimalize(structure, std::move(gens));
}

MonomialIdeal buildGeneralizedByCompositions(const IdealParameters& params) {
  const auto& structure = params.structure;
  auto total = MonomialIdeal::zero(structure);
  for (const auto& q : compositions(params.t, structure.blockCount())) {
    bool feasible = true;
    for (int b = 0; b < structure.blockCount(); ++b)
      feasible = feasible && q[static_cast<std::size_t>(b)] <= params.s * structure.blockSize(b);
    if (!feasible) continue;  // L_{i,q_i,s} = 0 when q_i > s*m_i
    auto product = MonomialIdeal::unit(structure);
    for (int b = 0; b < structure.blockCount(); ++b)
      product = idealProduct(product,
                             veroneseType(structure, b, q[static_cast<std::size_t>(b)], params.s));
    total = idealSum(total, product);
  }
  return total;
}

}  // namespace veronese
