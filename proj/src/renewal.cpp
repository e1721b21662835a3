#include "hhht/renewal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hhht/core.hpp"
#include "hhht/rng.hpp"

namespace hhht {

BigInt count_rx(std::size_t m) {
  BigInt total = 0;
  // Terms vanish once m - 2s - 1 < s - 1.
  for (std::size_t s = 1; 3 * s <= m; ++s) {
    BigInt left, right;
    mpz_bin_uiui(left.get_mpz_t(), m - 2 * s - 1, s - 1);
    mpz_bin_uiui(right.get_mpz_t(), 2 * s - 1, s - 1);
    total += left * right;
  }
  return total;
}

Rational pi_exact(std::size_t m) {
  if (m < 1) throw DomainError("pi: m must be at least 1");
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, m - 1);
  Rational out(count_rx(m), denom);
  out.canonicalize();
  return out;
}

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

// log(k!) - log(sqrt(2 pi k) (k/e)^k)
double stirlerr(std::uint64_t k) {
  if (k < 16) {
    if (k == 0) return 1.0 - kLogSqrt2Pi;  // limit convention unused by callers
    const double x = static_cast<double>(k);
    return std::lgamma(x + 1.0) - (x + 0.5) * std::log(x) + x - kLogSqrt2Pi;
  }
  constexpr double S0 = 1.0 / 12.0;
  constexpr double S1 = 1.0 / 360.0;
  constexpr double S2 = 1.0 / 1260.0;
  constexpr double S3 = 1.0 / 1680.0;
  constexpr double S4 = 1.0 / 1188.0;
  const double n1 = 1.0 / static_cast<double>(k);
  const double n2 = n1 * n1;
  if (k > 500) return (S0 - S1 * n2) * n1;
  if (k > 80) return (S0 - (S1 - S2 * n2) * n2) * n1;
  if (k > 35) return (S0 - (S1 - (S2 - S3 * n2) * n2) * n2) * n1;
  return (S0 - (S1 - (S2 - (S3 - S4 * n2) * n2) * n2) * n2) * n1;
}

// Deviance term x log(x / np) + np - x, evaluated stably near x = np.
double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    const double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v * v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double log_binomial_pmf(std::uint64_t k, std::uint64_t j, double p) {
  if (j > k) throw DomainError("binomial: successes exceed trials");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("binomial: p must lie in (0, 1)");
  const double q = 1.0 - p;
  const double kk = static_cast<double>(k);
  if (j == 0) return kk * std::log1p(-p);
  if (j == k) return kk * std::log(p);
  const double jj = static_cast<double>(j);
  const double lc = stirlerr(k) - stirlerr(j) - stirlerr(k - j) - bd0(jj, kk * p) -
                    bd0(kk - jj, kk * q);
  return lc + 0.5 * std::log(kk / (2.0 * std::numbers::pi * jj * (kk - jj)));
}

double binomial_pmf(std::uint64_t k, std::uint64_t j) {
  return std::exp(log_binomial_pmf(k, j, 0.5));
}

Rational binomial_pmf_exact(std::uint64_t k, std::uint64_t j) {
  if (j > k) throw DomainError("binomial: successes exceed trials");
  if (k > 64) throw DomainError("binomial: exact form limited to k <= 64");
  BigInt c, denom;
  mpz_bin_uiui(c.get_mpz_t(), k, j);
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, k);
  Rational out(c, denom);
  out.canonicalize();
  return out;
}

double pi_float(std::size_t m) {
  if (m < 1) throw DomainError("pi: m must be at least 1");
  CompensatedSum sum;
  for (std::size_t s = 1; 3 * s <= m; ++s) {
    const double log_term =
        log_binomial_pmf(m - 2 * s - 1, s - 1, 0.5) + log_binomial_pmf(2 * s - 1, s - 1, 0.5);
    sum.add(std::exp(log_term));
  }
  return 0.5 * sum.value();
}

Rational renewal_diff(std::size_t n) {
  if (n < 3) throw DomainError("renewal_diff: horizon must be at least 3");
  Rational total = 0;
  for (std::size_t k = 0; k + 3 <= n; ++k) {
    BigInt weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), 2, k + 1);
    total += pi_exact(n - k) / Rational(weight);
  }
  total.canonicalize();
  return total;
}

std::vector<RenewalRow> renewal_table(std::size_t m_to) {
  std::vector<RenewalRow> rows;
  rows.reserve(m_to);
  for (std::size_t m = 1; m <= m_to; ++m) {
    rows.push_back({m, count_rx(m), pi_exact(m), pi_float(m)});
  }
  return rows;
}

AsymptoticReport asymptotics(std::size_t n) {
  if (n < 1) throw DomainError("asymptotics: horizon must be at least 1");
  AsymptoticReport r;
  r.n = n;
  const double root = std::sqrt(static_cast<double>(n));
  r.diff_approx = r.c / root;
  r.tie_approx = 2.0 * r.diff_approx;
  r.deficit_B = 0.5 * r.diff_approx;
  r.deficit_A = 3.0 * r.deficit_B;
  return r;
}

WalkReport tailwalk(std::uint64_t steps, std::uint64_t seed) {
  if (steps < 1) throw DomainError("tailwalk: steps must be at least 1");
  Engine engine = make_substream(seed, 0);
  BitStream bits(engine);
  WalkReport report;
  report.steps = steps;
  report.seed = seed;
  std::int64_t score = 0;
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t r = 1; r <= steps; ++r) {
    std::int64_t run = 0;
    while (bits.next()) ++run;  // heads until the r-th tail
    const std::int64_t jump = run >= 1 ? 2 - run : 0;
    score += jump;
    report.zero_hits += score == 0;
    const double delta = static_cast<double>(jump) - mean;
    mean += delta / static_cast<double>(r);
    m2 += delta * (static_cast<double>(jump) - mean);
  }
  report.sample_mean_jump = mean;
  report.sample_std_jump = steps > 1 ? std::sqrt(m2 / static_cast<double>(steps - 1)) : 0.0;
  return report;
}

double truncated_mean_jump(std::size_t terms) {
  Rational total = 0;
  for (std::size_t r = 1; r <= terms; ++r) {
    BigInt denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, r + 1);
    Rational term(BigInt(2) - BigInt(static_cast<unsigned long>(r)), denom);
    term.canonicalize();
    total += term;
  }
  return total.get_d();
}

}  // namespace hhht
