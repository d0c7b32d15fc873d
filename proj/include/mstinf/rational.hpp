#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cctype>
#include <string>

#include "mstinf/fwd.hpp"

namespace mstinf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Base-10 only. cpp_int's own string constructor reads a leading zero as
// an octal prefix, so digits are accumulated by hand.
inline bool parse_signed_digits(const std::string& piece, BigInt& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < piece.size() && (piece[i] == '+' || piece[i] == '-')) {
    negative = piece[i] == '-';
    ++i;
  }
  if (i == piece.size()) return false;
  BigInt acc = 0;
  for (; i < piece.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(piece[i]))) return false;
    acc = acc * 10 + (piece[i] - '0');
  }
  out = negative ? BigInt(-acc) : acc;
  return true;
}

}  // namespace detail

/// Parses "p/q", a plain integer, or a plain decimal ("0.25", "-3.5").
inline Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw input_error("not a rational: '" + text + "'"); };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt p, q;
    if (!detail::parse_signed_digits(text.substr(0, slash), p) ||
        !detail::parse_signed_digits(text.substr(slash + 1), q) || q == 0)
      fail();
    return Rational(p, q);
  }
  std::string digits;
  digits.reserve(text.size());
  BigInt den = 1;
  bool seen_dot = false, seen_digit = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '+' || c == '-') && i == 0) {
      digits.push_back(c);
    } else if (c == '.') {
      if (seen_dot) fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) den *= 10;
    } else {
      fail();
    }
  }
  BigInt num;
  if (!seen_digit || !detail::parse_signed_digits(digits, num)) fail();
  return Rational(num, den);
}

/// Canonical lowest-terms "p/q" with q >= 1 (so "1/2", "3/1", "0/1").
inline std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Like format_rational but whole numbers print without the "/1" tail.
inline std::string format_rational_short(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return format_rational(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Comparison policy. tol == 0 means exact; the floating-point default is
/// an absolute tolerance of 1e-9.
template <typename S>
struct Compare {
  S tol{};

  bool eq(const S& a, const S& b) const {
    const S d = a < b ? S(b - a) : S(a - b);
    return !(tol < d);
  }
  bool le(const S& a, const S& b) const { return a < b || eq(a, b); }
  bool lt(const S& a, const S& b) const { return a < b && !eq(a, b); }
};

template <typename S>
Compare<S> default_compare();

template <>
inline Compare<Rational> default_compare<Rational>() {
  return Compare<Rational>{Rational(0)};
}

template <>
inline Compare<double> default_compare<double>() {
  return Compare<double>{1e-9};
}

}  // namespace mstinf
