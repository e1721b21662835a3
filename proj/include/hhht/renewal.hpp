#pragma once

// Renewal counts, the renewal probabilities pi_m, the convolution formula for
// P(Bob wins) - P(Alice wins), binomial probabilities, the sqrt(n) asymptotic
// laws, and the walk of the score sampled at tail appearances.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hhht/rational.hpp"

namespace hhht {

/// c = 1 / (2 sqrt(pi)).
inline constexpr double kAsymptoticConstant = 0.28209479177387814;

/// Number of length-m sequences ending HT with zero final score, by the
/// closed-form sum over s >= 1 of C(m-2s-1, s-1) C(2s-1, s-1).
BigInt count_rx(std::size_t m);

/// pi_m = 2^{1-m} count_rx(m).
Rational pi_exact(std::size_t m);

/// pi_m evaluated as (1/2) sum_s P(T_{m-2s-1} = s-1) P(T_{2s-1} = s-1) with
/// saddle-point binomial probabilities and compensated summation.
double pi_float(std::size_t m);

/// sum_{k=0}^{n-3} 2^{-(k+1)} pi_{n-k}. Throws DomainError for n < 3.
Rational renewal_diff(std::size_t n);

/// C(k, j) 2^{-k}. Throws DomainError unless j <= k.
double binomial_pmf(std::uint64_t k, std::uint64_t j);

/// Exact C(k, j) 2^{-k} for k <= 64.
Rational binomial_pmf_exact(std::uint64_t k, std::uint64_t j);

/// log(C(k, j) p^j (1-p)^{k-j}) by Loader's deviance form; 0 < p < 1.
double log_binomial_pmf(std::uint64_t k, std::uint64_t j, double p);

struct RenewalRow {
  std::size_t m = 0;
  BigInt count;
  Rational pi;
  double pi_approx = 0.0;
};

/// Rows for m = 1..m_to.
std::vector<RenewalRow> renewal_table(std::size_t m_to);

struct AsymptoticReport {
  std::size_t n = 0;
  double c = kAsymptoticConstant;
  double diff_approx = 0.0;  ///< c / sqrt(n)
  double tie_approx = 0.0;   ///< 2c / sqrt(n)
  double deficit_B = 0.0;    ///< 1/2 - P(B wins) ~ c / (2 sqrt(n))
  double deficit_A = 0.0;    ///< 1/2 - P(A wins) ~ 3c / (2 sqrt(n))
};

AsymptoticReport asymptotics(std::size_t n);

struct WalkReport {
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t zero_hits = 0;
  double sample_mean_jump = 0.0;
  double sample_std_jump = 0.0;
};

/// Score sampled at successive tails: S(r) = S(r-1) + (2 - R) 1[R >= 1] with
/// R the headrun preceding the r-th tail, P(R = r) = 2^{-(r+1)}.
WalkReport tailwalk(std::uint64_t steps, std::uint64_t seed);

/// sum_{r=1}^{terms} (2 - r) 2^{-(r+1)}, the truncated mean jump.
double truncated_mean_jump(std::size_t terms);

}  // namespace hhht
