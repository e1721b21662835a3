#pragma once

// Excursion taxonomy and the renewal decomposition of a flip stream.
//
// A stream T^{M-1} H gamma_1 gamma_2 ... is cut at renewal heads. From each
// renewal head the next flip picks the window type:
//   T -> B window: the window score stays > 0 until it returns to 0 on an HH.
//   H -> A window: the score stays < 0 until it returns to 0 on an HT (the
//        A-excursion tau), then a tailrun and one head close the window.
// Consecutive windows share their boundary head. All positions here are
// 1-based, matching how the score process is indexed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hhht/core.hpp"

namespace hhht {

enum class ExcursionKind { B, A, AHat, None };

std::string_view to_string(ExcursionKind kind);

/// B: starts HT, ends HH, interior scores > 0, final score 0.
/// A: starts HH, ends HT, interior scores < 0, final score 0.
/// AHat: an A-excursion followed by T^j H for some j >= 0.
ExcursionKind classify_excursion(const FlipSequence& seq);

/// Largest length accepted by enumerate_excursions.
inline constexpr std::size_t kMaxExcursionEnumeration = 24;

/// All length-k sequences of the given kind, in increasing bit order.
/// Throws ResourceError above kMaxExcursionEnumeration, DomainError for k < 2.
std::vector<FlipSequence> enumerate_excursions(std::size_t k, ExcursionKind kind);

struct CoupledPair {
  FlipSequence alpha;  ///< tau T^j H, an A-hat excursion
  FlipSequence beta;   ///< reverse(alpha), a B-excursion of the same length
};

/// Length-conserving coupling of A-hat and B excursions. Throws DomainError
/// unless `tau` is an A-excursion.
CoupledPair couple(const FlipSequence& tau, std::size_t tail_len);

enum class SlotKind { B, A };

std::string_view to_string(SlotKind kind);

struct Slot {
  std::size_t start = 0;  ///< renewal head opening the window
  std::size_t end = 0;    ///< last position seen (closing head when complete)
  SlotKind kind = SlotKind::B;
  std::optional<std::size_t> tau_end;  ///< A windows: position of tau's final T
  bool complete = false;
  FlipSequence content;  ///< flips start..end inclusive

  std::size_t length() const noexcept { return end - start + 1; }
};

/// How the input ends relative to the slot structure.
enum class Trailing {
  AllTails,     ///< no head at all
  RenewalHead,  ///< last flip is a renewal head; the next window is undetermined
  OpenB,        ///< final slot is an unfinished B window
  OpenTau,      ///< final slot is an A window whose tau has not returned to 0
  OpenTail,     ///< final slot finished tau and is inside its tailrun
};

std::string_view to_string(Trailing t);

struct Decomposition {
  std::size_t length = 0;
  std::size_t initial_tailrun_len = 0;          ///< M - 1
  std::optional<std::size_t> first_head_pos;    ///< M
  std::vector<Slot> slots;
  Trailing trailing = Trailing::AllTails;
};

/// Greedy left-to-right parse into L_0 and slots.
Decomposition decompose(const FlipSequence& seq);

/// L_0 followed by each slot with its opening head stripped.
FlipSequence serialize(const Decomposition& d);

enum class PositionClass { InitialTailrun, BWinning, AWinning, NeutralZero };

std::string_view to_string(PositionClass c);

/// Sign class of S_n read off the decomposition. Throws DomainError unless
/// 1 <= n <= seq.size().
PositionClass classify_position(const FlipSequence& seq, std::size_t n);
PositionClass classify_position(const Decomposition& d, std::size_t n);

struct CoupledEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;  ///< trials with n in beta_I interior minus tau_I interior
};

/// Monte Carlo estimate of P(S_n > 0) - P(S_n < 0) through the reversal
/// coupling: each trial parses raw fair flips, pairs the slot covering n with
/// its reversal, and scores 1/2 when n lies in the B side's interior but not
/// in tau's interior.
CoupledEstimate coupled_diff_mc(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                std::uint64_t batch_size = 1U << 14);

}  // namespace hhht
