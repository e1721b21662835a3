#pragma once

// Exact and floating-point win/tie probabilities after n flips.
//
// Two independent routes: brute-force enumeration of all 2^n sequences, and a
// forward DP over (last flip, score) states. With head probability p:
//   (H, s) --H--> (H, s-1)    (H, s) --T--> (T, s+1)
//   (T, s) --H--> (H, s)      (T, s) --T--> (T, s)
// A zero final score is a tie.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hhht/rational.hpp"

namespace hhht {

struct ExactDistribution {
  std::size_t n = 0;
  Rational p;
  Rational pA;    ///< P(S_n < 0), Alice wins
  Rational pB;    ///< P(S_n > 0), Bob wins
  Rational pTie;  ///< P(S_n = 0)

  Rational diff() const { return pB - pA; }
};

struct FloatDistribution {
  std::size_t n = 0;
  double p = 0.5;
  double pA = 0.0;
  double pB = 0.0;
  double pTie = 0.0;
  /// Bound on |pA + pB + pTie - 1| and on each component's absolute error.
  double rounding_bound = 0.0;

  double diff() const { return pB - pA; }
};

inline constexpr std::size_t kMaxEnumerationHorizon = 30;
inline constexpr std::size_t kMaxExactDpHorizon = 4096;

/// Sums p^{#H} (1-p)^{#T} over Omega_n, bucketed by the sign of S_n.
/// Throws ResourceError for n > kMaxEnumerationHorizon, DomainError for n = 0
/// or p outside (0, 1).
ExactDistribution enumerate_distribution(std::size_t n, const Rational& p);

/// Incremental exact DP. With p = a/b the state weights are kept as integers
/// over the common denominator b^k, so each step is integer arithmetic.
class ExactScoreDp {
 public:
  /// Prepares states for horizons up to `max_n`.
  ExactScoreDp(const Rational& p, std::size_t max_n);

  /// Advances one flip; the first call produces the n = 1 distribution.
  void step();
  std::size_t horizon() const noexcept { return k_; }

  ExactDistribution distribution() const;
  /// Sign of pB - pA at the current horizon without forming rationals.
  int diff_sign() const;

 private:
  BigInt& h_at(std::int64_t s) { return heads_[static_cast<std::size_t>(s + offset_)]; }
  BigInt& t_at(std::int64_t s) { return tails_[static_cast<std::size_t>(s + offset_)]; }
  void bucket_numerators(BigInt& neg, BigInt& pos, BigInt& zero) const;

  Rational p_;
  BigInt head_w_;  // a
  BigInt tail_w_;  // b - a
  BigInt denom_;   // b^k
  std::size_t max_n_;
  std::size_t k_ = 0;
  std::int64_t offset_;
  std::vector<BigInt> heads_, tails_;
  std::vector<BigInt> next_heads_, next_tails_;
};

class FloatScoreDp {
 public:
  FloatScoreDp(double p, std::size_t max_n);

  void step();
  std::size_t horizon() const noexcept { return k_; }
  FloatDistribution distribution() const;

 private:
  double p_;
  std::size_t max_n_;
  std::size_t k_ = 0;
  std::int64_t offset_;
  std::vector<double> heads_, tails_;
  std::vector<double> next_heads_, next_tails_;
};

/// Exact DP at horizon n. Throws ResourceError above kMaxExactDpHorizon.
ExactDistribution dp_exact(std::size_t n, const Rational& p);

/// Floating-point DP at horizon n; O(n^2) time, O(n) memory.
FloatDistribution dp_float(std::size_t n, double p);

}  // namespace hhht
