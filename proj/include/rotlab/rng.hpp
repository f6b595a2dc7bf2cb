#pragma once

#include <cstdint>
#include <random>

#include "rotlab/linalg.hpp"

namespace rotlab {

/// Deterministic RNG with an explicit Gaussian so streams are identical
/// across standard libraries. Trial streams derive from (seed, index).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64() { return engine_(); }
    double uniform();        // [0, 1)
    double gaussian();       // Box-Muller, mean 0, variance 1

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
Matrix haar_unitary(Eigen::Index n, Rng& rng);

/// Gaussian skew-Hermitian matrix clipped to the requested operator norm.
Matrix random_skew_hermitian(Eigen::Index n, double norm, Rng& rng);

} // namespace rotlab
