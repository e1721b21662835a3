#pragma once

// Flip sequences and the HH-vs-HT score process.
//
// Bob (B) scores +1 at each HT, Alice (A) scores -1 at each HH, so the
// aggregate score S_k is positive while Bob leads. Pairs are inspected at
// every adjacent index, so occurrences overlap (HHH is two HH's).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhht {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  /// 1-based offending position (0 for empty input).
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on a numeric argument failed (n out of range, non-excursion input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request exceeds an implementation cap (enumeration size, exact DP horizon).
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class Flip : std::uint8_t { T = 0, H = 1 };

inline char to_char(Flip f) { return f == Flip::H ? 'H' : 'T'; }

/// Finite H/T sequence, one bit per flip (1 = H). Indexing is 0-based.
class FlipSequence {
 public:
  FlipSequence() = default;

  /// Low `length` bits of `bits`, bit i being flip i.
  static FlipSequence from_bits(std::uint64_t bits, std::size_t length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Flip operator[](std::size_t i) const noexcept {
    return static_cast<Flip>((words_[i >> 6] >> (i & 63)) & 1U);
  }
  bool is_head(std::size_t i) const noexcept { return (*this)[i] == Flip::H; }

  void push_back(Flip f);
  void append(const FlipSequence& other);
  void append_run(Flip f, std::size_t count);

  /// Flips [first, first + count).
  FlipSequence slice(std::size_t first, std::size_t count) const;

  std::size_t count_heads() const noexcept;
  std::string to_string() const;

  friend bool operator==(const FlipSequence& a, const FlipSequence& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Parses uppercase 'H'/'T' text. Rejects empty input and any other character.
FlipSequence parse_sequence(std::string_view text);

/// Sequence reversal; an involution.
FlipSequence reverse(const FlipSequence& seq);

enum class Pattern { HH, HT, TH };

/// Number of indices k with seq[k] seq[k+1] equal to `pattern` (overlaps counted).
std::size_t count_overlapping(const FlipSequence& seq, Pattern pattern);

/// S_1..S_k where S_k = #HT - #HH among the first k flips.
using ScoreSeries = std::vector<std::int64_t>;

ScoreSeries score_series(const FlipSequence& seq);

/// Final score; equals score_series(seq).back() for nonempty input.
std::int64_t final_score(const FlipSequence& seq);

/// Final score from run statistics: r - h if the sequence starts H, r - 1 - h
/// if it starts T (r = number of maximal runs, h = number of heads).
std::int64_t score_via_runs(const FlipSequence& seq);

/// Number of maximal runs.
std::size_t count_runs(const FlipSequence& seq);

}  // namespace hhht
