#include "hhht/excursions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "batch_runner.hpp"
#include "hhht/rng.hpp"

namespace hhht {

std::string_view to_string(ExcursionKind kind) {
  switch (kind) {
    case ExcursionKind::B: return "B";
    case ExcursionKind::A: return "A";
    case ExcursionKind::AHat: return "A-hat";
    case ExcursionKind::None: return "None";
  }
  return "None";
}

std::string_view to_string(SlotKind kind) { return kind == SlotKind::B ? "B" : "A"; }

std::string_view to_string(Trailing t) {
  switch (t) {
    case Trailing::AllTails: return "all_tails";
    case Trailing::RenewalHead: return "renewal_head";
    case Trailing::OpenB: return "open_b";
    case Trailing::OpenTau: return "open_tau";
    case Trailing::OpenTail: return "open_tail";
  }
  return "all_tails";
}

std::string_view to_string(PositionClass c) {
  switch (c) {
    case PositionClass::InitialTailrun: return "InitialTailrun";
    case PositionClass::BWinning: return "BWinning";
    case PositionClass::AWinning: return "AWinning";
    case PositionClass::NeutralZero: return "NeutralZero";
  }
  return "NeutralZero";
}

namespace {

// sign = +1 for B-excursions, -1 for A-excursions.
bool is_excursion(const FlipSequence& seq, int sign) {
  const std::size_t k = seq.size();
  if (k < 3) return false;
  const bool second_head = sign < 0;
  const bool last_head = sign > 0;
  if (!seq.is_head(0) || seq.is_head(1) != second_head) return false;
  if (!seq.is_head(k - 2) || seq.is_head(k - 1) != last_head) return false;
  std::int64_t s = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (seq.is_head(i - 1)) s += seq.is_head(i) ? -1 : 1;
    if (i + 1 < k && sign * s <= 0) return false;
  }
  return s == 0;
}

bool is_a_hat(const FlipSequence& seq) {
  const std::size_t k = seq.size();
  if (k < 4 || !seq.is_head(k - 1) || seq.is_head(k - 2)) return false;
  // Drop the closing head and all but the first tail of the final tailrun.
  std::size_t first_tail = k - 2;
  while (first_tail > 0 && !seq.is_head(first_tail - 1)) --first_tail;
  return is_excursion(seq.slice(0, first_tail + 1), -1);
}

}  // namespace

ExcursionKind classify_excursion(const FlipSequence& seq) {
  if (is_excursion(seq, +1)) return ExcursionKind::B;
  if (is_excursion(seq, -1)) return ExcursionKind::A;
  if (is_a_hat(seq)) return ExcursionKind::AHat;
  return ExcursionKind::None;
}

std::vector<FlipSequence> enumerate_excursions(std::size_t k, ExcursionKind kind) {
  if (k < 2) throw DomainError("enumerate_excursions: length must be at least 2");
  if (k > kMaxExcursionEnumeration) {
    throw ResourceError("enumerate_excursions: length " + std::to_string(k) + " exceeds cap " +
                        std::to_string(kMaxExcursionEnumeration));
  }
  std::vector<FlipSequence> out;
  const std::uint64_t total = 1ULL << k;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    // Every excursion starts with a head.
    if (kind != ExcursionKind::None && (bits & 1U) == 0) continue;
    auto seq = FlipSequence::from_bits(bits, k);
    if (classify_excursion(seq) == kind) out.push_back(std::move(seq));
  }
  return out;
}

CoupledPair couple(const FlipSequence& tau, std::size_t tail_len) {
  if (classify_excursion(tau) != ExcursionKind::A) {
    throw DomainError("couple: '" + tau.to_string() + "' is not an A-excursion");
  }
  CoupledPair pair{tau, {}};
  pair.alpha.append_run(Flip::T, tail_len);
  pair.alpha.push_back(Flip::H);
  pair.beta = reverse(pair.alpha);
  return pair;
}

Decomposition decompose(const FlipSequence& seq) {
  Decomposition d;
  const std::size_t n = seq.size();
  d.length = n;

  std::size_t first = 0;
  while (first < n && !seq.is_head(first)) ++first;
  d.initial_tailrun_len = first;
  if (first == n) {
    d.trailing = Trailing::AllTails;
    return d;
  }
  d.first_head_pos = first + 1;

  // `head` is the 1-based position of the current renewal head; flip at
  // 1-based position p is seq[p - 1].
  std::size_t head = first + 1;
  while (true) {
    if (head == n) {
      d.trailing = Trailing::RenewalHead;
      break;
    }
    Slot slot;
    slot.start = head;
    slot.kind = seq.is_head(head) ? SlotKind::A : SlotKind::B;

    std::int64_t s = 0;
    std::size_t p = head + 1;
    std::optional<std::size_t> zero_at;
    for (; p <= n; ++p) {
      if (seq.is_head(p - 2)) s += seq.is_head(p - 1) ? -1 : 1;
      if (s == 0) {
        zero_at = p;
        break;
      }
    }

    if (slot.kind == SlotKind::B) {
      if (zero_at) {
        slot.end = *zero_at;
        slot.complete = true;
      } else {
        slot.end = n;
        d.trailing = Trailing::OpenB;
      }
    } else if (!zero_at) {
      slot.end = n;
      d.trailing = Trailing::OpenTau;
    } else {
      slot.tau_end = zero_at;
      std::size_t q = *zero_at + 1;
      while (q <= n && !seq.is_head(q - 1)) ++q;
      if (q <= n) {
        slot.end = q;
        slot.complete = true;
      } else {
        slot.end = n;
        d.trailing = Trailing::OpenTail;
      }
    }

    slot.content = seq.slice(slot.start - 1, slot.length());
    const bool complete = slot.complete;
    head = slot.end;
    d.slots.push_back(std::move(slot));
    if (!complete) break;
  }
  return d;
}

FlipSequence serialize(const Decomposition& d) {
  FlipSequence out;
  out.append_run(Flip::T, d.initial_tailrun_len);
  if (!d.first_head_pos) return out;
  out.push_back(Flip::H);
  for (const auto& slot : d.slots) {
    for (std::size_t i = 1; i < slot.content.size(); ++i) out.push_back(slot.content[i]);
  }
  return out;
}

PositionClass classify_position(const Decomposition& d, std::size_t n) {
  if (n < 1 || n > d.length) {
    throw DomainError("classify_position: index " + std::to_string(n) + " outside 1.." +
                      std::to_string(d.length));
  }
  if (!d.first_head_pos || n <= *d.first_head_pos) return PositionClass::InitialTailrun;

  // Window (start, end] owns n; the start head belongs to the previous window.
  auto it = std::partition_point(d.slots.begin(), d.slots.end(),
                                 [n](const Slot& s) { return s.start < n; });
  if (it == d.slots.begin()) return PositionClass::NeutralZero;
  const Slot& slot = *std::prev(it);
  if (n > slot.end) return PositionClass::NeutralZero;

  if (slot.kind == SlotKind::B) {
    return (!slot.complete || n < slot.end) ? PositionClass::BWinning
                                            : PositionClass::NeutralZero;
  }
  if (slot.tau_end && n >= *slot.tau_end) return PositionClass::NeutralZero;
  return PositionClass::AWinning;
}

PositionClass classify_position(const FlipSequence& seq, std::size_t n) {
  if (n < 1 || n > seq.size()) {
    throw DomainError("classify_position: index " + std::to_string(n) + " outside 1.." +
                      std::to_string(seq.size()));
  }
  return classify_position(decompose(seq), n);
}

namespace {

// Indicator of n in beta_I interior but not in tau_I interior, where the slot
// covering n is paired with its reversal. nullopt: the buffer is too short to
// decide.
std::optional<bool> coupled_indicator(const Decomposition& d, std::size_t n) {
  if (!d.first_head_pos || n <= *d.first_head_pos) return false;
  auto it = std::partition_point(d.slots.begin(), d.slots.end(),
                                 [n](const Slot& s) { return s.start < n; });
  if (it == d.slots.begin()) return std::nullopt;
  const Slot& slot = *std::prev(it);
  if (n > slot.end) return std::nullopt;

  if (slot.kind == SlotKind::A) {
    // Raw window is alpha = tau T^j H; n must sit in [tau_end, end - 1].
    if (!slot.tau_end) return false;  // tau still open past the buffer end >= n
    return *slot.tau_end <= n && (n < slot.end || !slot.complete);
  }

  // Raw window is beta = H T^r ...; reversal gives |tau| = |beta| - r, so the
  // indicator is end - r <= n <= end - 1.
  std::size_t r = 0;
  while (r + 1 < slot.content.size() && !slot.content.is_head(r + 1)) ++r;
  const std::size_t last_tail = slot.start + r;  // 1-based
  if (slot.complete) return slot.end - r <= n && n < slot.end;
  if (last_tail == d.length) return std::nullopt;  // tailrun may continue
  // Need end <= last_tail + (n - slot.start); if the buffer already reaches
  // that far without closing, the indicator is 0.
  if (d.length >= last_tail + (n - slot.start)) return false;
  return std::nullopt;
}

struct CoupledBatch {
  std::uint64_t hits = 0;
};

}  // namespace

CoupledEstimate coupled_diff_mc(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                std::uint64_t batch_size) {
  if (n < 3) throw DomainError("coupled_diff_mc: horizon must be at least 3");
  if (trials < 1) throw DomainError("coupled_diff_mc: trials must be at least 1");

  auto batches = detail::run_batches<CoupledBatch>(
      trials, batch_size, [n, seed](std::uint64_t index, std::uint64_t count) {
        Engine engine = make_substream(seed, index);
        BitStream bits(engine);
        CoupledBatch out;
        for (std::uint64_t t = 0; t < count; ++t) {
          FlipSequence buf;
          std::size_t want = 2 * n + 2;
          while (true) {
            while (buf.size() < want) buf.push_back(bits.next() ? Flip::H : Flip::T);
            if (auto hit = coupled_indicator(decompose(buf), n)) {
              out.hits += *hit;
              break;
            }
            want *= 2;
          }
        }
        return out;
      });

  CoupledEstimate est;
  est.trials = trials;
  for (const auto& b : batches) est.hits += b.hits;
  const double q = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.estimate = 0.5 * q;
  est.stderr_ = 0.5 * std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
  return est;
}

}  // namespace hhht
