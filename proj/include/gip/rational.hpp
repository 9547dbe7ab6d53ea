#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gip {

// Exact rational scalar. Stored in lowest terms with a positive denominator;
// all arithmetic and comparisons are exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline Rational make_rational(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(n, d);
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Parses "p/q" or "p" with optional sign. Decimal literals are rejected;
// persisted artifacts are exact by construction.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(BigInt(std::string(text)));
    }
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    BigInt qq{std::string(q)};
    if (qq == 0) return std::nullopt;
    return Rational(BigInt(std::string(p)), qq);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::string to_string(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

// Decimal rendering for display only (SVG, logs); never round-trips.
inline std::string to_decimal(const Rational& r, int significant = 12) {
  if (r == 0) return "0";
  bool neg = r < 0;
  Rational a = rat_abs(r);
  BigInt ip = num(a) / den(a);
  std::string digits = ip.str();
  int int_digits = (ip == 0) ? 0 : static_cast<int>(digits.size());
  int frac_digits = significant - int_digits;
  if (frac_digits < 0) frac_digits = 0;
  BigInt scale = 1;
  for (int i = 0; i < frac_digits; ++i) scale *= 10;
  BigInt scaled = (num(a) * scale * 2 + den(a)) / (den(a) * 2);  // round half up
  std::string all = scaled.str();
  if (static_cast<int>(all.size()) <= frac_digits)
    all.insert(0, frac_digits + 1 - all.size(), '0');
  std::string out = all.substr(0, all.size() - frac_digits);
  std::string frac = all.substr(all.size() - frac_digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (out == "0") return "0";
  return neg ? "-" + out : out;
}

}  // namespace gip
