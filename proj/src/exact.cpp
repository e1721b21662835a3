#include "hhht/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "hhht/core.hpp"

namespace hhht {

namespace {

void check_probability(const Rational& p) {
  if (p <= 0 || p >= 1) throw DomainError("head probability must lie strictly between 0 and 1");
}

std::int64_t band_low(std::size_t k) { return -static_cast<std::int64_t>(k) + 1; }
std::int64_t band_high(std::size_t k) { return static_cast<std::int64_t>(k / 2); }

using SignCounts = std::vector<std::array<std::uint64_t, 3>>;  // [heads][neg, zero, pos]

SignCounts count_range(std::size_t n, std::uint64_t lo, std::uint64_t hi) {
  SignCounts counts(n + 1, {0, 0, 0});
  const std::uint64_t pair_mask = (1ULL << (n - 1)) - 1;
  for (std::uint64_t x = lo; x < hi; ++x) {
    const std::uint64_t shifted = x >> 1;
    const int hh = std::popcount(x & shifted & pair_mask);
    const int ht = std::popcount(x & ~shifted & pair_mask);
    const int s = ht - hh;
    const std::size_t bucket = s < 0 ? 0 : (s == 0 ? 1 : 2);
    ++counts[static_cast<std::size_t>(std::popcount(x))][bucket];
  }
  return counts;
}

}  // namespace

ExactDistribution enumerate_distribution(std::size_t n, const Rational& p) {
  if (n < 1) throw DomainError("enumerate_distribution: horizon must be at least 1");
  if (n > kMaxEnumerationHorizon) {
    throw ResourceError("enumerate_distribution: horizon " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxEnumerationHorizon));
  }
  check_probability(p);

  const std::uint64_t total = 1ULL << n;
  const unsigned workers =
      n < 20 ? 1U : std::max(1U, std::min(16U, std::thread::hardware_concurrency()));
  std::vector<SignCounts> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total / workers * w;
      const std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
      pool.emplace_back([&partial, w, n, lo, hi] { partial[w] = count_range(n, lo, hi); });
    }
  }
  SignCounts counts(n + 1, {0, 0, 0});
  for (const auto& part : partial) {
    for (std::size_t h = 0; h <= n; ++h) {
      for (std::size_t b = 0; b < 3; ++b) counts[h][b] += part[h][b];
    }
  }

  Rational pc = p;
  pc.canonicalize();
  const BigInt a = pc.get_num();
  const BigInt c = pc.get_den() - a;
  std::array<BigInt, 3> numer;
  for (std::size_t h = 0; h <= n; ++h) {
    BigInt ah, ct;
    mpz_pow_ui(ah.get_mpz_t(), a.get_mpz_t(), h);
    mpz_pow_ui(ct.get_mpz_t(), c.get_mpz_t(), n - h);
    const BigInt w = ah * ct;
    for (std::size_t b = 0; b < 3; ++b) {
      BigInt cnt;
      mpz_import(cnt.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &counts[h][b]);
      numer[b] += cnt * w;
    }
  }
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), pc.get_den().get_mpz_t(), n);

  ExactDistribution d;
  d.n = n;
  d.p = pc;
  d.pA = Rational(numer[0], denom);
  d.pTie = Rational(numer[1], denom);
  d.pB = Rational(numer[2], denom);
  d.pA.canonicalize();
  d.pTie.canonicalize();
  d.pB.canonicalize();
  return d;
}

ExactScoreDp::ExactScoreDp(const Rational& p, std::size_t max_n)
    : p_(p), max_n_(max_n), offset_(static_cast<std::int64_t>(max_n) + 1) {
  check_probability(p_);
  if (max_n > kMaxExactDpHorizon) {
    throw ResourceError("exact DP horizon " + std::to_string(max_n) + " exceeds cap " +
                        std::to_string(kMaxExactDpHorizon));
  }
  p_.canonicalize();
  head_w_ = p_.get_num();
  tail_w_ = p_.get_den() - head_w_;
  denom_ = 1;
  const std::size_t width = static_cast<std::size_t>(offset_) + max_n / 2 + 3;
  heads_.assign(width, 0);
  tails_.assign(width, 0);
  next_heads_.assign(width, 0);
  next_tails_.assign(width, 0);
}

void ExactScoreDp::step() {
  if (k_ >= max_n_) throw ResourceError("ExactScoreDp: stepped past the prepared horizon");
  if (k_ == 0) {
    h_at(0) = head_w_;
    t_at(0) = tail_w_;
    denom_ = p_.get_den();
    k_ = 1;
    return;
  }
  const bool unit = head_w_ == 1 && tail_w_ == 1;
  const std::int64_t lo = band_low(k_ + 1);
  const std::int64_t hi = band_high(k_ + 1);
  for (std::int64_t s = lo; s <= hi; ++s) {
    const auto i = static_cast<std::size_t>(s + offset_);
    BigInt& nh = next_heads_[i];
    BigInt& nt = next_tails_[i];
    nh = heads_[i + 1] + tails_[i];
    nt = heads_[i - 1] + tails_[i];
    if (!unit) {
      nh *= head_w_;
      nt *= tail_w_;
    }
  }
  std::swap(heads_, next_heads_);
  std::swap(tails_, next_tails_);
  denom_ *= p_.get_den();
  ++k_;
}

void ExactScoreDp::bucket_numerators(BigInt& neg, BigInt& pos, BigInt& zero) const {
  neg = 0;
  pos = 0;
  zero = 0;
  for (std::int64_t s = band_low(k_); s <= band_high(k_); ++s) {
    const auto i = static_cast<std::size_t>(s + offset_);
    BigInt& target = s < 0 ? neg : (s > 0 ? pos : zero);
    target += heads_[i];
    target += tails_[i];
  }
}

ExactDistribution ExactScoreDp::distribution() const {
  if (k_ == 0) throw DomainError("ExactScoreDp: no flips taken yet");
  BigInt neg, pos, zero;
  bucket_numerators(neg, pos, zero);
  ExactDistribution d;
  d.n = k_;
  d.p = p_;
  d.pA = Rational(neg, denom_);
  d.pB = Rational(pos, denom_);
  d.pTie = Rational(zero, denom_);
  d.pA.canonicalize();
  d.pB.canonicalize();
  d.pTie.canonicalize();
  return d;
}

int ExactScoreDp::diff_sign() const {
  BigInt neg, pos, zero;
  bucket_numerators(neg, pos, zero);
  return cmp(pos, neg) < 0 ? -1 : (pos == neg ? 0 : 1);
}

FloatScoreDp::FloatScoreDp(double p, std::size_t max_n)
    : p_(p), max_n_(max_n), offset_(static_cast<std::int64_t>(max_n) + 1) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("head probability must lie strictly between 0 and 1");
  }
  const std::size_t width = static_cast<std::size_t>(offset_) + max_n / 2 + 3;
  heads_.assign(width, 0.0);
  tails_.assign(width, 0.0);
  next_heads_.assign(width, 0.0);
  next_tails_.assign(width, 0.0);
}

void FloatScoreDp::step() {
  if (k_ >= max_n_) throw ResourceError("FloatScoreDp: stepped past the prepared horizon");
  const double q = 1.0 - p_;
  const auto off = static_cast<std::size_t>(offset_);
  if (k_ == 0) {
    heads_[off] = p_;
    tails_[off] = q;
    k_ = 1;
    return;
  }
  const auto lo = static_cast<std::size_t>(band_low(k_ + 1) + offset_);
  const auto hi = static_cast<std::size_t>(band_high(k_ + 1) + offset_);
  const double* h = heads_.data();
  const double* t = tails_.data();
  double* nh = next_heads_.data();
  double* nt = next_tails_.data();
  for (std::size_t i = lo; i <= hi; ++i) {
    nh[i] = p_ * (h[i + 1] + t[i]);
    nt[i] = q * (h[i - 1] + t[i]);
  }
  std::swap(heads_, next_heads_);
  std::swap(tails_, next_tails_);
  ++k_;
}

FloatDistribution FloatScoreDp::distribution() const {
  if (k_ == 0) throw DomainError("FloatScoreDp: no flips taken yet");
  FloatDistribution d;
  d.n = k_;
  d.p = p_;
  std::size_t width = 0;
  for (std::int64_t s = band_low(k_); s <= band_high(k_); ++s, ++width) {
    const auto i = static_cast<std::size_t>(s + offset_);
    double& target = s < 0 ? d.pA : (s > 0 ? d.pB : d.pTie);
    target += heads_[i] + tails_[i];
  }
  // Each step costs at most three roundings per weight (1 - p, the add, the
  // multiply); the final bucket sums add one rounding per state pair.
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  const double steps = static_cast<double>(k_);
  d.rounding_bound = 1.01 * (3.0 * steps + 2.0 * static_cast<double>(width) + 2.0) * u;
  return d;
}

ExactDistribution dp_exact(std::size_t n, const Rational& p) {
  if (n < 1) throw DomainError("dp: horizon must be at least 1");
  ExactScoreDp dp(p, n);
  for (std::size_t k = 0; k < n; ++k) dp.step();
  return dp.distribution();
}

FloatDistribution dp_float(std::size_t n, double p) {
  if (n < 1) throw DomainError("dp: horizon must be at least 1");
  FloatScoreDp dp(p, n);
  for (std::size_t k = 0; k < n; ++k) dp.step();
  return dp.distribution();
}

}  // namespace hhht
