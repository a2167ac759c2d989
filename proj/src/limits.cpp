#include "veronese/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace veronese {

namespace {

template <class T>
void readEnv(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  T value{};
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc() && ptr == end && value > 0) target = value;
}

}  // namespace

Limits Limits::fromEnvironment() {
  Limits limits;
  readEnv("VERONESE_MAX_VARIABLES", limits.maxVariables);
  readEnv("VERONESE_MAX_CANDIDATES", limits.maxWitnessCandidates);
  readEnv("VERONESE_MAX_BETTI_BOX", limits.maxBettiBox);
  readEnv("VERONESE_MAX_STEPS", limits.maxNormalFormSteps);
  readEnv("VERONESE_MAX_MULTISETS", limits.maxFiberMultisets);
  readEnv("VERONESE_THREADS", limits.threads);
  return limits;
}

}  // namespace veronese
