#pragma once

#include <cstdint>
#include <random>

#include "nakayama/rational.hpp"

namespace nakayama {

inline constexpr std::uint64_t kDefaultSeed = 0xA17;

// Deterministic source of small scalars for Schwartz-Zippel style sampling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    // uniform integer scalar in [-8, 8]
    Rational small_scalar() {
        std::uniform_int_distribution<int> d(-8, 8);
        return Rational(d(gen_));
    }

    // uniform nonzero integer scalar in [-8, 8] \ {0}
    Rational nonzero_scalar() {
        std::uniform_int_distribution<int> d(1, 16);
        int v = d(gen_);
        return Rational(v <= 8 ? v : 8 - v);
    }

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace nakayama
