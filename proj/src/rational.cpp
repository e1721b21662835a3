#include "hhht/rational.hpp"

#include <cctype>

#include "hhht/core.hpp"

namespace hhht {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string bad = "malformed rational '" + std::string(text) + "'";
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw DomainError(bad);
    BigInt d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    out = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) throw DomainError(bad);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    out = Rational(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) throw DomainError(bad);
    out = Rational(BigInt(std::string(body)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Rational parse_probability(std::string_view text) {
  Rational p = parse_rational(text);
  if (p <= 0 || p >= 1) {
    throw DomainError("probability must lie strictly between 0 and 1, got " + std::string(text));
  }
  return p;
}

}  // namespace hhht
