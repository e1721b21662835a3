// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hhht/core.hpp"
#include "hhht/exact.hpp"
#include "hhht/excursions.hpp"
#include "hhht/montecarlo.hpp"
#include "hhht/renewal.hpp"
#include "oracles.hpp"

using namespace hhht;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Score of the low n bits (bit i = flip i, 1 = H), by word operations.
int bit_score(std::uint64_t x, std::size_t n) {
  const std::uint64_t mask = n >= 2 ? (1ULL << (n - 1)) - 1 : 0;
  return std::popcount(x & ~(x >> 1) & mask) - std::popcount(x & (x >> 1) & mask);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Verdict ac1_exact_small_n() {
  for (const auto& p : {Rational(1, 2), Rational(1, 3), Rational(2, 3)}) {
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto e = enumerate_distribution(n, p);
      const auto d = dp_exact(n, p);
      if (e.pA != d.pA || e.pB != d.pB || e.pTie != d.pTie) {
        return {false, "enum/dp mismatch at n=" + std::to_string(n) + " p=" + to_fraction_string(p)};
      }
      if (n <= 8) {
        const auto o = oracle::distribution(n, p);
        if (o.pA != e.pA || o.pB != e.pB || o.pTie != e.pTie) {
          return {false, "string oracle mismatch at n=" + std::to_string(n)};
        }
      }
    }
  }
  const auto d3 = dp_exact(3, Rational(1, 2));
  if (d3.diff() != Rational(1, 8)) return {false, "n=3 diff is " + to_fraction_string(d3.diff())};
  return {true, "n<=20 x {1/2,1/3,2/3} exact equality; n=3 diff = 1/8"};
}

Verdict ac2_strict_ordering() {
  ExactScoreDp dp(Rational(1, 2), 2000);
  for (std::size_t n = 1; n <= 2000; ++n) {
    dp.step();
    const int sign = dp.diff_sign();
    if (n <= 2 && sign != 0) return {false, "pA != pB at n=" + std::to_string(n)};
    if (n >= 3 && sign != 1) return {false, "pB <= pA at n=" + std::to_string(n)};
  }
  return {true, "pB > pA for 3..2000, pA = pB at n = 1, 2"};
}

Verdict ac3_bridge() {
  ExactScoreDp dp(Rational(1, 2), 200);
  for (std::size_t n = 1; n <= 200; ++n) {
    dp.step();
    if (n >= 3 && renewal_diff(n) != dp.distribution().diff()) {
      return {false, "renewal != dp at n=" + std::to_string(n)};
    }
  }
  return {true, "rational equality for 3 <= n <= 200"};
}

Verdict ac4_count_rx() {
  for (std::size_t m = 1; m <= 24; ++m) {
    std::uint64_t brute = 0;
    for (std::uint64_t x = 0; x < (1ULL << m); ++x) {
      // ends HT: bit m-2 set, bit m-1 clear
      if (m >= 2 && ((x >> (m - 2)) & 3U) == 1U && bit_score(x, m) == 0) ++brute;
    }
    if (count_rx(m) != brute) return {false, "m=" + std::to_string(m)};
  }
  const bool small = count_rx(3) == 1 && count_rx(4) == 1 && count_rx(5) == 1 && count_rx(6) == 4;
  if (!small) return {false, "m=3..6 values"};
  return {true, "closed form = exhaustive count for m <= 24; 1,1,1,4 at m=3..6"};
}

Verdict ac5_pi_asymptote() {
  double prev = 1e9;
  std::string trace;
  double ratio = 0.0;
  for (std::size_t m : {100, 1000, 10000, 100000}) {
    ratio = pi_float(m) * std::sqrt(static_cast<double>(m)) * 2.0 * std::sqrt(M_PI);
    const double dev = std::fabs(ratio - 1.0);
    trace += " m=" + std::to_string(m) + ":" + fmt_double(ratio);
    if (!(dev < prev)) return {false, "deviation not strictly decreasing:" + trace};
    prev = dev;
  }
  if (ratio < 0.95 || ratio > 1.05) return {false, "outside [0.95, 1.05]:" + trace};
  return {true, "pi_m sqrt(m) 2 sqrt(pi):" + trace};
}

Verdict ac6_sqrt_laws() {
  const std::size_t n = 10'000;
  const auto d = dp_float(n, 0.5);
  const double c = 1.0 / (2.0 * std::sqrt(M_PI));
  const double root = std::sqrt(static_cast<double>(n));
  const double diff_ratio = d.diff() * root / c;
  const double tie_ratio = d.pTie * root / (2.0 * c);
  const bool ok = diff_ratio >= 0.9 && diff_ratio <= 1.1 && tie_ratio >= 0.9 && tie_ratio <= 1.1;
  return {ok, "diff ratio " + fmt_double(diff_ratio) + ", tie ratio " + fmt_double(tie_ratio)};
}

Verdict ac7_position_soundness() {
  std::uint64_t cases = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      ++cases;
      const int s = bit_score(x, n);
      const auto c = classify_position(FlipSequence::from_bits(x, n), n);
      const bool good = (c == PositionClass::BWinning && s > 0) ||
                        (c == PositionClass::AWinning && s < 0) ||
                        ((c == PositionClass::InitialTailrun || c == PositionClass::NeutralZero) && s == 0);
      if (!good) return {false, "n=" + std::to_string(n) + " x=" + std::to_string(x)};
    }
  }
  if (cases != (1ULL << 17) - 2) return {false, "case count " + std::to_string(cases)};
  return {true, std::to_string(cases) + " cases"};
}

Verdict ac8_bijection() {
  std::size_t total = 0;
  for (std::size_t k = 2; k <= 14; ++k) {
    std::set<std::string> b, a;
    for (const auto& s : oracle::all_strings(k)) {
      if (oracle::is_b_excursion(s)) b.insert(s);
      if (oracle::is_a_hat_excursion(s)) a.insert(s);
    }
    const auto lib_b = enumerate_excursions(k, ExcursionKind::B);
    const auto lib_a = enumerate_excursions(k, ExcursionKind::AHat);
    if (lib_b.size() != b.size() || lib_a.size() != a.size()) {
      return {false, "enumeration disagrees with oracle at k=" + std::to_string(k)};
    }
    std::set<std::string> images;
    for (const auto& x : lib_b) images.insert(reverse(x).to_string());
    if (images.size() != lib_b.size() || images != a) {
      return {false, "reverse is not a bijection at k=" + std::to_string(k)};
    }
    total += b.size();
  }
  return {true, "k=2..14, " + std::to_string(total) + " B-excursions mapped onto A-hat"};
}

Verdict ac9_monte_carlo() {
  std::string trace;
  for (std::size_t n : {3, 50, 100}) {
    const auto exact = dp_exact(n, Rational(1, 2));
    const SimConfig cfg{.n = n, .p = 0.5, .trials = 1'000'000, .seed = 20240316 + n};
    const auto r = simulate_game(cfg);
    const double zA = std::fabs(r.pA - exact.pA.get_d()) / r.seA;
    const double zB = std::fabs(r.pB - exact.pB.get_d()) / r.seB;
    const double zT = std::fabs(r.pTie - exact.pTie.get_d()) / r.seTie;
    const double worst = std::max({zA, zB, zT});
    trace += " n=" + std::to_string(n) + ":z<=" + fmt_double(worst);
    if (worst > 4.0) return {false, "outside 4 stderr:" + trace};
    const auto again = simulate_game(cfg);
    if (again.winsA != r.winsA || again.winsB != r.winsB || again.ties != r.ties) {
      return {false, "non-deterministic at n=" + std::to_string(n)};
    }
  }
  return {true, "1e6 trials each, deterministic;" + trace};
}

Verdict ac10_bias() {
  double prev = 0.0;
  std::string trace;
  for (std::size_t n : {50, 100, 200, 500}) {
    const double pA = dp_float(n, 0.6).pA;
    trace += " n=" + std::to_string(n) + ":" + fmt_double(pA);
    if (pA <= prev) return {false, "not increasing:" + trace};
    prev = pA;
  }
  return {prev > 0.95, "pA at p=0.6:" + trace};
}

Verdict ac11_tailwalk() {
  const double mean = truncated_mean_jump(60);
  if (std::fabs(mean) > std::ldexp(1.0, -50)) return {false, "truncated mean " + fmt_double(mean)};
  std::uint64_t min_hits = ~0ULL;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto w = tailwalk(1'000'000, seed);
    min_hits = std::min(min_hits, w.zero_hits);
    if (w.zero_hits < 1) return {false, "no return to zero, seed " + std::to_string(seed)};
  }
  return {true, "|E(jump)| <= 2^-50; min zero hits over 20 seeds = " + std::to_string(min_hits)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1  exact small-n values", ac1_exact_small_n},
      {"AC2  strict ordering n=3..2000", ac2_strict_ordering},
      {"AC3  renewal bridge identity", ac3_bridge},
      {"AC4  count_rx closed form", ac4_count_rx},
      {"AC5  pi_m ~ c/sqrt(m)", ac5_pi_asymptote},
      {"AC6  sqrt(n) laws at n=1e4", ac6_sqrt_laws},
      {"AC7  position classifier soundness", ac7_position_soundness},
      {"AC8  reversal bijection B <-> A-hat", ac8_bijection},
      {"AC9  Monte Carlo calibration", ac9_monte_carlo},
      {"AC10 biased coin p=0.6", ac10_bias},
      {"AC11 tail-indexed walk", ac11_tailwalk},
  };
  // Runtime budgets in seconds, per criterion.
  const double budget[] = {60, 600, 600, 600, 60, 300, 60, 600, 600, 600, 600};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget[i]) {
      v.ok = false;
      v.detail += " (over " + fmt_double(budget[i]) + "s budget)";
    }
    failures += !v.ok;
    std::printf("[%s] %s: %s (%.2fs)\n", v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
