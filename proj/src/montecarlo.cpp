#include "hhht/montecarlo.hpp"

#include <cmath>

#include "batch_runner.hpp"
#include "hhht/core.hpp"
#include "hhht/rng.hpp"

namespace hhht {

namespace {

struct Tally {
  std::uint64_t a = 0, b = 0, tie = 0;
};

template <class NextFlip>
std::int64_t play(std::size_t n, NextFlip&& next_head) {
  std::int64_t score = 0;
  bool prev_head = next_head();
  for (std::size_t k = 1; k < n; ++k) {
    const bool head = next_head();
    if (prev_head) score += head ? -1 : 1;
    prev_head = head;
  }
  return score;
}

void record(Tally& t, std::int64_t score) {
  if (score < 0) {
    ++t.a;
  } else if (score > 0) {
    ++t.b;
  } else {
    ++t.tie;
  }
}

}  // namespace

double SimResult::diff_stderr() const {
  const double t = static_cast<double>(trials);
  return std::sqrt((pA + pB - (pB - pA) * (pB - pA)) / t);
}

SimResult simulate_game(const SimConfig& config) {
  if (config.n < 1) throw DomainError("mc: horizon must be at least 1");
  if (config.trials < 1) throw DomainError("mc: trials must be at least 1");
  if (!(config.p > 0.0 && config.p < 1.0)) {
    throw DomainError("mc: head probability must lie strictly between 0 and 1");
  }

  const bool fair = config.p == 0.5;
  auto tallies = detail::run_batches<Tally>(
      config.trials, config.batch_size, [&config, fair](std::uint64_t index, std::uint64_t count) {
        Engine engine = make_substream(config.seed, index);
        Tally t;
        if (fair) {
          BitStream bits(engine);
          for (std::uint64_t i = 0; i < count; ++i) {
            record(t, play(config.n, [&bits] { return bits.next(); }));
          }
        } else {
          const double p = config.p;
          for (std::uint64_t i = 0; i < count; ++i) {
            record(t, play(config.n, [&engine, p] { return uniform01(engine) < p; }));
          }
        }
        return t;
      });

  SimResult r;
  r.trials = config.trials;
  r.seed = config.seed;
  for (const auto& t : tallies) {
    r.winsA += t.a;
    r.winsB += t.b;
    r.ties += t.tie;
  }
  const double total = static_cast<double>(r.trials);
  r.pA = static_cast<double>(r.winsA) / total;
  r.pB = static_cast<double>(r.winsB) / total;
  r.pTie = static_cast<double>(r.ties) / total;
  auto se = [total](double q) { return std::sqrt(q * (1.0 - q) / total); };
  r.seA = se(r.pA);
  r.seB = se(r.pB);
  r.seTie = se(r.pTie);
  return r;
}

}  // namespace hhht
