#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace gammasym {

/// Exact rational scalar. GMP's canonical mpq carries the invariants we need:
/// lowest terms, positive denominator, arbitrary-precision components.
using Rational = mpq_class;

inline int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Renders "p" for integers, "p/q" otherwise (canonical lowest terms).
inline std::string format_rational(const Rational& x) { return x.get_str(); }

/// Strict parser for "p" / "p/q" with optional leading '-'. Decimals,
/// whitespace, empty numerators and zero denominators are all rejected;
/// exactness end-to-end depends on never accepting a float literal.
inline std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  auto scan_int = [&](bool allow_sign) -> bool {
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
      ++digits;
    }
    return digits > 0;
  };
  if (!scan_int(true)) return std::nullopt;
  std::size_t slash = std::string::npos;
  if (pos < text.size() && text[pos] == '/') {
    slash = pos;
    ++pos;
    if (!scan_int(false)) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  std::string head = slash == std::string::npos ? text : text.substr(0, slash);
  if (head[0] == '+') head.erase(0, 1);  // mpz_set_str rejects a leading '+'
  mpz_class num(head);
  mpz_class den = slash == std::string::npos ? mpz_class(1)
                                             : mpz_class(text.substr(slash + 1));
  if (den == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational_or_throw(const std::string& text) {
  auto r = parse_rational(text);
  if (!r) throw std::invalid_argument("not an exact rational: '" + text + "'");
  return *r;
}

}  // namespace gammasym
