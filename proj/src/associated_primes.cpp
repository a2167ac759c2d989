#include "veronese/associated_primes.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "veronese/errors.hpp"
#include "veronese/parallel.hpp"

namespace veronese {

namespace {

int requireExcess(const IdealParameters& params) {
  const int r = params.excess();
  if (r < 1 || r > params.s - 1)
    fail(ErrorKind::Range, "associated-prime formula needs r = sN - t in [1, s-1] (got r=" +
                               std::to_string(r) + ")");
  return r;
}

}  // namespace

std::vector<PrimeSupport> assFormula(const IdealParameters& params) {
  const int r = requireExcess(params);
  const int n = params.variableCount();
  const int maxSize = std::min(r + 1, n);
  std::vector<PrimeSupport> out;
  std::vector<int> chosen;
  // subsets of {0..n-1} with 1..maxSize elements
  auto rec = [&](auto&& self, int next) -> void {
    if (!chosen.empty()) out.emplace_back(params.structure, chosen);
    if (static_cast<int>(chosen.size()) == maxSize) return;
    for (int k = next; k < n; ++k) {
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AssociatedPrime> assOracle(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.isZero() || ideal.isUnit())
    fail(ErrorKind::Domain, "associated primes need a proper nonzero ideal");
  const auto& structure = ideal.structure();
  const auto bound = lcmOfGenerators(ideal);
  std::uint64_t box = 1;
  for (Exponent e : bound.entries()) {
    box *= static_cast<std::uint64_t>(e) + 1;
    if (box > limits.maxWitnessCandidates)
      fail(ErrorKind::Guard, "witness box exceeds cap " +
                                 std::to_string(limits.maxWitnessCandidates));
  }
  const int n = structure.variableCount();

  auto decode = [&](std::uint64_t code) {
    std::vector<Exponent> entries(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      const std::uint64_t radix = static_cast<std::uint64_t>(bound[k]) + 1;
      entries[static_cast<std::size_t>(k)] = static_cast<Exponent>(code % radix);
      code /= radix;
    }
    return ExponentVector(structure, std::move(entries));
  };

  // Per candidate: index of the prime it witnesses, or nothing.
  std::vector<std::optional<PrimeSupport>> hits(box);
  parallelFor(box, limits.threads, [&](std::size_t code) {
    const auto f = decode(code);
    if (membership(f, ideal)) return;
    hits[code] = asPrime(colonIdeal(ideal, f));
  });

  std::map<PrimeSupport, std::uint64_t> first;
  for (std::uint64_t code = 0; code < box; ++code)
    if (hits[code]) first.try_emplace(*hits[code], code);

  std::vector<AssociatedPrime> out;
  for (const auto& [prime, code] : first) out.push_back({prime, decode(code)});
  return out;
}

ExponentVector witnessMonomial(const IdealParameters& params, const PrimeSupport& support) {
  const int r = requireExcess(params);
  if (!(support.structure() == params.structure))
    fail(ErrorKind::Structure, "witnessMonomial: support built over a different structure");
  const int size = static_cast<int>(support.size());
  if (size > r + 1)
    fail(ErrorKind::Range, "witnessMonomial: |F| = " + std::to_string(size) +
                               " exceeds r + 1 = " + std::to_string(r + 1));
  const int n = params.variableCount();
  std::vector<Exponent> entries(static_cast<std::size_t>(n), static_cast<Exponent>(params.s));
  int remaining = params.t - 1 - params.s * (n - size);
  for (int k : support.indices()) {
    const int d = std::min(remaining, params.s - 1);
    entries[static_cast<std::size_t>(k)] = static_cast<Exponent>(d);
    remaining -= d;
  }
  if (remaining != 0) fail(ErrorKind::Range, "witnessMonomial: degree cannot be distributed");
  return {params.structure, std::move(entries)};
}

std::vector<PrimeSupport> minimalPrimes(const std::vector<AssociatedPrime>& primes) {
  std::vector<PrimeSupport> out;
  for (const auto& p : primes) {
    const bool hasSmaller = std::any_of(primes.begin(), primes.end(), [&](const auto& q) {
      return q.prime.size() < p.prime.size() &&
             std::includes(p.prime.indices().begin(), p.prime.indices().end(),
                           q.prime.indices().begin(), q.prime.indices().end());
    });
    if (!hasSmaller) out.push_back(p.prime);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace veronese
