#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "qcat/error.hpp"

namespace qcat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// An extended nonnegative rational: a rational >= 0, or +infinity.
/// Ordering and arithmetic here are the plain numeric ones; the reversed
/// quantale order lives in `Lawvere`.
class Extended {
 public:
  Extended() = default;
  Extended(int v) : Extended(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Extended(Rational v) : value_(std::move(v)) {
    if (value_ < 0) throw std::domain_error("extended value must be nonnegative");
  }
  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }
  static Extended ratio(long long num, long long den) { return Extended(Rational(num, den)); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

  /// Finite value; 0 for infinity (check is_infinite first).
  const Rational& value() const noexcept { return value_; }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }

  /// Truncated subtraction max(a - b, 0) with inf - finite = inf and x - inf = 0.
  friend Extended monus(const Extended& a, const Extended& b) {
    if (b.infinite_) return Extended();
    if (a.infinite_) return infinity();
    if (a.value_ <= b.value_) return Extended();
    return Extended(a.value_ - b.value_);
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q" (always with a denominator) or "inf".
  std::string str() const {
    if (infinite_) return "inf";
    return numerator(value_).str() + "/" + denominator(value_).str();
  }

  /// Accepts "inf", integers, "p/q", and finite decimals ("0.25", "1.5e-2").
  static Extended parse(std::string_view text) {
    auto fail = [&]() -> ParseError { return ParseError("malformed extended rational '" + std::string(text) + "'"); };
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw fail();
    if (text == "inf" || text == "infinity" || text == "Infinity") return infinity();
    auto digits = [](std::string_view s) {
      return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = text.substr(0, slash), den = text.substr(slash + 1);
      if (!digits(num) || !digits(den)) throw fail();
      BigInt d{std::string(den)};
      if (d == 0) throw fail();
      return Extended(Rational(BigInt(std::string(num)), d));
    }
    std::string_view mantissa = text;
    long long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      auto exp_text = text.substr(e + 1);
      bool negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!digits(exp_text) || exp_text.size() > 6) throw fail();
      exponent = std::stoll(std::string(exp_text));
      if (negative) exponent = -exponent;
    }
    std::string int_part(mantissa), frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = std::string(mantissa.substr(0, dot));
      frac_part = std::string(mantissa.substr(dot + 1));
      if (int_part.empty()) int_part = "0";
      if (frac_part.empty() && mantissa.size() == 1) throw fail();
      if (!frac_part.empty() && !digits(frac_part)) throw fail();
    }
    if (!digits(int_part)) throw fail();
    BigInt num(int_part + frac_part);
    exponent -= static_cast<long long>(frac_part.size());
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Extended(Rational(num, scale)) : Extended(Rational(num * scale));
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.str(); }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace qcat
