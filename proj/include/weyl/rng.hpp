#pragma once

#include <cstdint>
#include <random>

namespace weyl {

/// Deterministic case generator. Identical seeds reproduce identical
/// streams on every platform: raw mt19937_64 words, no distribution
/// objects (their output is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Inclusive range.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace weyl
