#pragma once

#include <cstdint>
#include <string>

#include "regsched/core.hpp"

namespace regsched {

// SplitMix64; the documented PRNG behind all instance sampling.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi]; modulo draw, documented as part of the
  // deterministic generation contract.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() %
                                 static_cast<uint64_t>(hi - lo + 1));
  }
};

enum class GenKind { HalfUncertain, HighUncertainty };

struct GenProfile {
  GenKind kind = GenKind::HalfUncertain;
  int n = 2;
  uint64_t seed = 0;
};

inline const char* to_string(GenKind k) {
  return k == GenKind::HalfUncertain ? "half" : "high";
}

// Deterministic instance sampling.  Draw order: certain dues, then uncertain
// lower bounds, then widths, then weights, each pass in job id order.
inline Instance generate(const GenProfile& profile, bool unit_weights = false) {
  if (profile.n < 2) throw InvalidSize("generator requires n >= 2");
  const int n = profile.n;
  SplitMix64 rng(profile.seed);

  Instance inst;
  inst.name = std::string(to_string(profile.kind)) + "_n" + std::to_string(n) +
              "_s" + std::to_string(profile.seed) +
              (unit_weights ? "_unit" : "");
  inst.jobs.resize(n);
  for (int i = 0; i < n; ++i) inst.jobs[i].id = i + 1;

  const int third = std::max(1, n / 3);
  if (profile.kind == GenKind::HalfUncertain) {
    const int certain = (n + 1) / 2;
    for (int i = 0; i < certain; ++i) {
      const int d = rng.uniform(1, n);
      inst.jobs[i].due_lo = inst.jobs[i].due_hi = d;
    }
    for (int i = certain; i < n; ++i)
      inst.jobs[i].due_lo = rng.uniform(1, third);
    for (int i = certain; i < n; ++i)
      inst.jobs[i].due_hi = inst.jobs[i].due_lo + rng.uniform(1, third);
  } else {
    for (int i = 0; i < n; ++i) inst.jobs[i].due_lo = rng.uniform(1, third);
    for (int i = 0; i < n; ++i)
      inst.jobs[i].due_hi = inst.jobs[i].due_lo + rng.uniform(0, 5 * n / 6);
  }
  for (int i = 0; i < n; ++i)
    inst.jobs[i].weight = unit_weights ? 1 : rng.uniform(1, 100);

  return validate_and_normalize(inst);
}

}  // namespace regsched
