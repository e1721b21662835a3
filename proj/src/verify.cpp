#include "hhht/verify.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "hhht/core.hpp"
#include "hhht/exact.hpp"
#include "hhht/excursions.hpp"
#include "hhht/montecarlo.hpp"
#include "hhht/renewal.hpp"
#include "hhht/rng.hpp"

namespace hhht {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }
Outcome pass(std::string detail) { return {true, std::move(detail)}; }

// Pair-scan score from scratch, kept separate from the library scorer.
std::int64_t pair_scan_score(const FlipSequence& seq) {
  const std::string s = seq.to_string();
  std::int64_t score = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 'H' && s[i + 1] == 'T') ++score;
    if (s[i] == 'H' && s[i + 1] == 'H') --score;
  }
  return score;
}

template <class Fn>
bool for_all_sequences(std::size_t max_len, Fn&& fn) {
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      if (!fn(FlipSequence::from_bits(bits, n))) return false;
    }
  }
  return true;
}

FlipSequence random_sequence(Engine& engine, std::size_t n) {
  BitStream bits(engine);
  FlipSequence seq;
  for (std::size_t i = 0; i < n; ++i) seq.push_back(bits.next() ? Flip::H : Flip::T);
  return seq;
}

Outcome runs_score() {
  std::string bad;
  const bool ok = for_all_sequences(16, [&](const FlipSequence& w) {
    if (score_via_runs(w) == score_series(w).back()) return true;
    bad = w.to_string();
    return false;
  });
  if (!ok) return fail("mismatch at " + bad);
  Engine engine = make_substream(2024, 0);
  for (int i = 0; i < 100'000; ++i) {
    auto w = random_sequence(engine, 17 + engine() % 200);
    if (score_via_runs(w) != score_series(w).back()) return fail("mismatch at " + w.to_string());
  }
  return pass("exhaustive to length 16 and 1e5 random sequences");
}

Outcome reversal_pattern_law() {
  std::string bad;
  const bool ok = for_all_sequences(16, [&](const FlipSequence& w) {
    const auto r = reverse(w);
    if (count_overlapping(r, Pattern::HH) == count_overlapping(w, Pattern::HH) &&
        count_overlapping(r, Pattern::TH) == count_overlapping(w, Pattern::HT) &&
        reverse(r) == w) {
      return true;
    }
    bad = w.to_string();
    return false;
  });
  return ok ? pass("exhaustive to length 16") : fail("violated at " + bad);
}

Outcome reversal_score() {
  std::size_t checked = 0;
  std::string bad;
  const bool ok = for_all_sequences(16, [&](const FlipSequence& w) {
    if (!w.is_head(0) || !w.is_head(w.size() - 1)) return true;
    ++checked;
    if (final_score(reverse(w)) == final_score(w)) return true;
    bad = w.to_string();
    return false;
  });
  return ok ? pass(fmt::format("{} H...H sequences", checked)) : fail("violated at " + bad);
}

Outcome additivity() {
  Engine engine = make_substream(7, 0);
  for (int i = 0; i < 100'000; ++i) {
    const std::size_t len = 2 + engine() % 300;
    auto w = random_sequence(engine, len);
    const std::size_t m = 1 + engine() % (len - 1);  // left part omega_1..omega_m
    const auto left = w.slice(0, m);
    const auto right = w.slice(m - 1, len - m + 1);
    if (final_score(w) != final_score(left) + final_score(right)) {
      return fail(fmt::format("{} split at {}", w.to_string(), m));
    }
  }
  return pass("1e5 random splits");
}

Outcome bijection() {
  for (std::size_t k = 2; k <= 14; ++k) {
    const auto bs = enumerate_excursions(k, ExcursionKind::B);
    const auto as = enumerate_excursions(k, ExcursionKind::AHat);
    if (bs.size() != as.size()) {
      return fail(fmt::format("k={} |B|={} |A-hat|={}", k, bs.size(), as.size()));
    }
    std::set<std::string> targets;
    for (const auto& a : as) targets.insert(a.to_string());
    std::set<std::string> images;
    for (const auto& b : bs) {
      auto img = reverse(b).to_string();
      if (!targets.contains(img)) return fail(fmt::format("k={} reverse({}) not A-hat", k, b.to_string()));
      images.insert(img);
    }
    if (images.size() != targets.size()) return fail(fmt::format("k={} not onto", k));
  }
  return pass("k = 2..14");
}

Outcome position_soundness() {
  std::size_t cases = 0;
  std::string bad;
  const bool ok = for_all_sequences(16, [&](const FlipSequence& w) {
    ++cases;
    const auto s = pair_scan_score(w);
    const auto c = classify_position(w, w.size());
    const bool good = (c == PositionClass::BWinning) == (s > 0) &&
                      (c == PositionClass::AWinning) == (s < 0);
    if (!good) bad = w.to_string();
    return good;
  });
  return ok ? pass(fmt::format("{} sequences", cases)) : fail("misclassified " + bad);
}

Outcome tie_decomposition() {
  for (std::size_t n = 1; n <= 16; ++n) {
    std::uint64_t zero = 0, neutral = 0;
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      const auto w = FlipSequence::from_bits(bits, n);
      zero += pair_scan_score(w) == 0;
      const auto c = classify_position(w, n);
      neutral += c == PositionClass::InitialTailrun || c == PositionClass::NeutralZero;
    }
    if (zero != neutral) return fail(fmt::format("n={} ties={} classes={}", n, zero, neutral));
  }
  return pass("n = 1..16");
}

Outcome round_trip() {
  std::string bad;
  const bool ok = for_all_sequences(16, [&](const FlipSequence& w) {
    if (serialize(decompose(w)) == w) return true;
    bad = w.to_string();
    return false;
  });
  if (!ok) return fail("round trip failed at " + bad);
  Engine engine = make_substream(99, 0);
  for (int i = 0; i < 100'000; ++i) {
    auto w = random_sequence(engine, 1000);
    if (!(serialize(decompose(w)) == w)) return fail("round trip failed on a random sequence");
  }
  return pass("exhaustive to 16 and 1e5 random of length 1000");
}

Outcome interior_signs() {
  Engine engine = make_substream(5, 0);
  for (int i = 0; i < 20'000; ++i) {
    const auto w = random_sequence(engine, 200);
    for (const auto& slot : decompose(w).slots) {
      const auto scores = score_series(slot.content);
      if (slot.kind == SlotKind::B && slot.complete) {
        for (std::size_t l = 1; l + 1 < scores.size(); ++l) {
          if (scores[l] <= 0) return fail("B slot interior not positive in " + w.to_string());
        }
        if (scores.back() != 0) return fail("B slot does not close at zero");
      }
      if (slot.kind == SlotKind::A && slot.tau_end) {
        const std::size_t tau_len = *slot.tau_end - slot.start + 1;
        for (std::size_t l = 1; l + 1 < tau_len; ++l) {
          if (scores[l] >= 0) return fail("tau interior not negative in " + w.to_string());
        }
        if (scores[tau_len - 1] != 0) return fail("tau does not close at zero");
      }
    }
  }
  return pass("2e4 random sequences of length 200");
}

Outcome oracle_equality() {
  const Rational ps[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3)};
  for (const auto& p : ps) {
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto e = enumerate_distribution(n, p);
      const auto d = dp_exact(n, p);
      if (e.pA != d.pA || e.pB != d.pB || e.pTie != d.pTie) {
        return fail(fmt::format("n={} p={}", n, to_fraction_string(p)));
      }
    }
  }
  return pass("n <= 20, p in {1/2, 1/3, 2/3}");
}

Outcome strict_ordering() {
  ExactScoreDp dp(Rational(1, 2), 2000);
  for (std::size_t n = 1; n <= 2000; ++n) {
    dp.step();
    const int sign = dp.diff_sign();
    if (n <= 2 && sign != 0) return fail(fmt::format("pA != pB at n={}", n));
    if (n >= 3 && sign <= 0) return fail(fmt::format("pB <= pA at n={}", n));
  }
  return pass("pB > pA for 3 <= n <= 2000; equal at n = 1, 2");
}

Outcome float_drift() {
  ExactScoreDp exact(Rational(1, 2), 2000);
  FloatScoreDp fl(0.5, 2000);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 2000; ++n) {
    exact.step();
    fl.step();
    if (n > 100 && n % 50 != 0) continue;
    const auto e = exact.distribution();
    const auto f = fl.distribution();
    const double err = std::max({std::fabs(e.pA.get_d() - f.pA), std::fabs(e.pB.get_d() - f.pB),
                                 std::fabs(e.pTie.get_d() - f.pTie)});
    worst = std::max(worst, err / f.rounding_bound);
    if (err > f.rounding_bound) return fail(fmt::format("n={} err={:.3g} bound={:.3g}", n, err, f.rounding_bound));
    if (std::fabs(f.pA + f.pB + f.pTie - 1.0) > f.rounding_bound) return fail(fmt::format("mass drift at n={}", n));
  }
  return pass(fmt::format("worst error / bound = {:.3g}", worst));
}

Outcome bias() {
  const std::size_t ns[] = {50, 100, 200, 500};
  double prev = 0.0;
  std::string trace;
  for (auto n : ns) {
    const double pA = dp_float(n, 0.6).pA;
    trace += fmt::format(" {}:{:.4f}", n, pA);
    if (pA <= prev) return fail("pA not increasing:" + trace);
    prev = pA;
  }
  if (prev <= 0.95) return fail("pA(500) <= 0.95:" + trace);
  return pass("pA at p=0.6:" + trace);
}

Outcome bridge() {
  ExactScoreDp dp(Rational(1, 2), 200);
  for (std::size_t n = 1; n <= 200; ++n) {
    dp.step();
    if (n < 3) continue;
    if (renewal_diff(n) != dp.distribution().diff()) return fail(fmt::format("n={}", n));
  }
  return pass("3 <= n <= 200");
}

Outcome count_rx_brute() {
  for (std::size_t m = 1; m <= 24; ++m) {
    std::uint64_t brute = 0;
    for (std::uint64_t bits = 0; bits < (1ULL << m); ++bits) {
      const auto w = FlipSequence::from_bits(bits, m);
      brute += m >= 2 && w.is_head(m - 2) && !w.is_head(m - 1) && pair_scan_score(w) == 0;
    }
    if (count_rx(m) != brute) return fail(fmt::format("m={} brute={}", m, brute));
  }
  return pass("m <= 24");
}

Outcome pi_modes() {
  for (std::size_t m = 1; m <= 200; ++m) {
    const double exact = pi_exact(m).get_d();
    const double approx = pi_float(m);
    if (exact == 0.0 ? approx != 0.0 : std::fabs(approx - exact) > 1e-12 * exact) {
      return fail(fmt::format("m={} exact={:.17g} float={:.17g}", m, exact, approx));
    }
  }
  return pass("m <= 200 to 12 significant digits");
}

Outcome pi_asymptote() {
  double prev = 1.0;
  std::string trace;
  for (std::size_t m : {100, 1000, 10000, 100000}) {
    const double ratio = pi_float(m) * std::sqrt(static_cast<double>(m)) / kAsymptoticConstant;
    const double dev = std::fabs(ratio - 1.0);
    trace += fmt::format(" {}:{:.5f}", m, ratio);
    if (dev >= prev) return fail("deviation not decreasing:" + trace);
    prev = dev;
  }
  if (prev > 0.05) return fail("deviation above 5% at m=1e5:" + trace);
  return pass("pi_m sqrt(m)/c:" + trace);
}

Outcome sqrt_n_laws() {
  const std::size_t n = 10'000;
  const auto d = dp_float(n, 0.5);
  const double root = std::sqrt(static_cast<double>(n));
  const double diff_ratio = d.diff() * root / kAsymptoticConstant;
  const double tie_ratio = d.pTie * root / (2.0 * kAsymptoticConstant);
  const auto detail = fmt::format("diff ratio {:.5f}, tie ratio {:.5f}", diff_ratio, tie_ratio);
  const bool ok = diff_ratio >= 0.9 && diff_ratio <= 1.1 && tie_ratio >= 0.9 && tie_ratio <= 1.1;
  return ok ? pass(detail) : fail(detail);
}

Outcome asymptotic_identities() {
  for (std::size_t n : {1, 2, 3, 10, 100, 12345, 1000000}) {
    const auto r = asymptotics(n);
    if (r.tie_approx != 2.0 * r.diff_approx || r.deficit_A != 3.0 * r.deficit_B ||
        std::fabs(r.deficit_A + r.deficit_B - r.tie_approx) > 4e-16 * r.tie_approx) {
      return fail(fmt::format("n={}", n));
    }
  }
  return pass("tie = 2 diff, deficit_A = 3 deficit_B, deficits sum to tie");
}

Outcome tailwalk_check() {
  const double mean = truncated_mean_jump(60);
  if (std::fabs(mean) > std::ldexp(1.0, -50)) return fail(fmt::format("truncated mean {:.3g}", mean));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto w = tailwalk(1'000'000, seed);
    if (w.zero_hits < 1) return fail(fmt::format("no return to zero for seed {}", seed));
    if (std::fabs(w.sample_mean_jump) > 5.0 * 1.0 / 1000.0) {
      return fail(fmt::format("mean jump {:.3g} for seed {}", w.sample_mean_jump, seed));
    }
  }
  return pass("E(jump) = 0 to 2^-50; returns to zero on 20 seeds");
}

Outcome mc_determinism() {
  SimConfig cfg{.n = 37, .p = 0.5, .trials = 200'000, .seed = 42, .batch_size = 4096};
  const auto a = simulate_game(cfg);
  const auto b = simulate_game(cfg);
  if (a.winsA != b.winsA || a.winsB != b.winsB || a.ties != b.ties) return fail("fair run differs");
  cfg.p = 0.4;
  const auto c = simulate_game(cfg);
  const auto d = simulate_game(cfg);
  if (c.winsA != d.winsA || c.winsB != d.winsB || c.ties != d.ties) return fail("biased run differs");
  return pass("identical configs give identical counts");
}

Outcome mc_calibration() {
  const double exact_pB = dp_exact(50, Rational(1, 2)).pB.get_d();
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto r = simulate_game({.n = 50, .p = 0.5, .trials = 20'000, .seed = seed});
    covered += std::fabs(r.pB - exact_pB) <= 2.0 * r.seB;
  }
  const auto detail = fmt::format("{}/200 intervals cover pB", covered);
  return covered >= 180 ? pass(detail) : fail(detail);
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"core.score_via_runs", runs_score},
      {"core.reversal_pattern_law", reversal_pattern_law},
      {"core.reversal_preserves_score", reversal_score},
      {"core.additivity", additivity},
      {"excursions.reversal_bijection", bijection},
      {"excursions.position_soundness", position_soundness},
      {"excursions.tie_decomposition", tie_decomposition},
      {"excursions.round_trip", round_trip},
      {"excursions.interior_signs", interior_signs},
      {"exact.oracle_equality", oracle_equality},
      {"exact.strict_ordering", strict_ordering},
      {"exact.float_drift", float_drift},
      {"exact.bias", bias},
      {"renewal.bridge_identity", bridge},
      {"renewal.count_rx_bruteforce", count_rx_brute},
      {"renewal.pi_modes_agree", pi_modes},
      {"renewal.pi_asymptote", pi_asymptote},
      {"renewal.sqrt_n_laws", sqrt_n_laws},
      {"renewal.asymptotic_identities", asymptotic_identities},
      {"renewal.tailwalk", tailwalk_check},
      {"montecarlo.determinism", mc_determinism},
      {"montecarlo.calibration", mc_calibration},
  };
  return checks;
}

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_verification(const std::string& filter) {
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : registry()) {
    if (!name.starts_with(filter)) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
      auto outcome = fn();
      r.passed = outcome.passed;
      r.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hhht
