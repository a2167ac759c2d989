#pragma once

#include <cstdint>

namespace veronese {

/// Caps on the exponential oracles. Defaults can be overridden through the
/// environment (see fromEnvironment) and per call through the CLI flags.
struct Limits {
  int maxVariables = 20;                       // subset enumeration for covers
  std::uint64_t maxWitnessCandidates = 1u << 20;  // Ass colon search box
  std::uint64_t maxBettiBox = 4096;            // multidegrees a <= lcm
  std::uint64_t maxNormalFormSteps = 10000;
  std::uint64_t maxFiberMultisets = 200000;    // GB evidence enumeration
  int threads = 1;

  /// Reads VERONESE_MAX_VARIABLES, VERONESE_MAX_CANDIDATES,
  /// VERONESE_MAX_BETTI_BOX, VERONESE_MAX_STEPS, VERONESE_MAX_MULTISETS and
  /// VERONESE_THREADS. Unset or unparsable values keep the default.
  static Limits fromEnvironment();
};

}  // namespace veronese
