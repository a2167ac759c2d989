#pragma once

#include <vector>

#include "veronese/builders.hpp"
#include "veronese/limits.hpp"
#include "veronese/monomial.hpp"

namespace veronese {

struct AssociatedPrime {
  PrimeSupport prime;
  /// A monomial f with I : f = P_F.
  ExponentVector witness;
};

/// All nonempty F with |F| <= r + 1 where r = sN - t; range error unless
/// 1 <= r <= s - 1.
std::vector<PrimeSupport> assFormula(const IdealParameters& params);

/// Ass(T/I) by exhaustive search: every f <= lcm(G(I)) with f not in I whose
/// colon ideal is generated by variables. Each prime carries the first
/// witness in mixed-radix order (entry 0 varies slowest).
std::vector<AssociatedPrime> assOracle(const MonomialIdeal& ideal, const Limits& limits = {});

/// Degree t-1 witness: s on every variable outside F, and t-1-s(N-|F|)
/// distributed greedily over F in index order, each at most s-1.
ExponentVector witnessMonomial(const IdealParameters& params, const PrimeSupport& support);

/// Inclusion-minimal elements.
std::vector<PrimeSupport> minimalPrimes(const std::vector<AssociatedPrime>& primes);

}  // namespace veronese
