#pragma once

// Direct simulation of the game. Trials run in batches; batch i draws from
// substream i (see rng.hpp), so a SimConfig fully determines the result.

#include <cstddef>
#include <cstdint>

namespace hhht {

struct SimConfig {
  std::size_t n = 100;
  double p = 0.5;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1U << 16;
};

struct SimResult {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t winsA = 0;
  std::uint64_t winsB = 0;
  std::uint64_t ties = 0;
  double pA = 0.0;
  double pB = 0.0;
  double pTie = 0.0;
  double seA = 0.0;
  double seB = 0.0;
  double seTie = 0.0;

  double diff() const { return pB - pA; }
  /// Standard error of pB - pA from the multinomial covariance.
  double diff_stderr() const;
};

/// Throws DomainError for n = 0, trials = 0 or p outside (0, 1).
SimResult simulate_game(const SimConfig& config);

}  // namespace hhht
