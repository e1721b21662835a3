#include "hhht/core.hpp"

#include <bit>

namespace hhht {

FlipSequence FlipSequence::from_bits(std::uint64_t bits, std::size_t length) {
  if (length > 64) throw DomainError("from_bits: length exceeds 64");
  FlipSequence seq;
  seq.size_ = length;
  if (length > 0) {
    const std::uint64_t mask = length == 64 ? ~0ULL : ((1ULL << length) - 1);
    seq.words_.push_back(bits & mask);
  }
  return seq;
}

void FlipSequence::push_back(Flip f) {
  if ((size_ & 63) == 0) words_.push_back(0);
  if (f == Flip::H) words_.back() |= 1ULL << (size_ & 63);
  ++size_;
}

void FlipSequence::append(const FlipSequence& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

void FlipSequence::append_run(Flip f, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) push_back(f);
}

FlipSequence FlipSequence::slice(std::size_t first, std::size_t count) const {
  if (first + count > size_) throw DomainError("slice out of range");
  FlipSequence out;
  for (std::size_t i = 0; i < count; ++i) out.push_back((*this)[first + i]);
  return out;
}

std::size_t FlipSequence::count_heads() const noexcept {
  std::size_t h = 0;
  for (auto w : words_) h += static_cast<std::size_t>(std::popcount(w));
  return h;
}

std::string FlipSequence::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(to_char((*this)[i]));
  return s;
}

FlipSequence parse_sequence(std::string_view text) {
  if (text.empty()) throw ParseError("empty sequence", 0);
  FlipSequence seq;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'H': seq.push_back(Flip::H); break;
      case 'T': seq.push_back(Flip::T); break;
      default:
        throw ParseError("invalid character '" + std::string(1, text[i]) + "' at position " +
                             std::to_string(i + 1),
                         i + 1);
    }
  }
  return seq;
}

FlipSequence reverse(const FlipSequence& seq) {
  FlipSequence out;
  for (std::size_t i = seq.size(); i > 0; --i) out.push_back(seq[i - 1]);
  return out;
}

std::size_t count_overlapping(const FlipSequence& seq, Pattern pattern) {
  std::size_t count = 0;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const bool a = seq.is_head(k);
    const bool b = seq.is_head(k + 1);
    switch (pattern) {
      case Pattern::HH: count += a && b; break;
      case Pattern::HT: count += a && !b; break;
      case Pattern::TH: count += !a && b; break;
    }
  }
  return count;
}

ScoreSeries score_series(const FlipSequence& seq) {
  ScoreSeries out;
  out.reserve(seq.size());
  std::int64_t s = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k > 0 && seq.is_head(k - 1)) s += seq.is_head(k) ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

std::int64_t final_score(const FlipSequence& seq) {
  std::int64_t s = 0;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq.is_head(k - 1)) s += seq.is_head(k) ? -1 : 1;
  }
  return s;
}

std::size_t count_runs(const FlipSequence& seq) {
  if (seq.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t k = 1; k < seq.size(); ++k) runs += seq[k] != seq[k - 1];
  return runs;
}

std::int64_t score_via_runs(const FlipSequence& seq) {
  if (seq.empty()) return 0;
  const auto r = static_cast<std::int64_t>(count_runs(seq));
  const auto h = static_cast<std::int64_t>(seq.count_heads());
  return seq.is_head(0) ? r - h : r - 1 - h;
}

}  // namespace hhht
