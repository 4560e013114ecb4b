#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace restheory {

using Rational = boost::multiprecision::cpp_rational;

// Canonical text: "p/q" in lowest terms, or "p" when q = 1.
std::string format_rational(const Rational& q);
// Accepts "p", "-p", "p/q"; nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// The extended rationals: -inf < every finite value < +inf.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::Finite) {}
  ExtRational(const Rational& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT
  ExtRational(long long value) : kind_(Kind::Finite), value_(value) {}       // NOLINT
  ExtRational(long long num, long long den);

  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  // Valid only when finite.
  const Rational& value() const;

  ExtRational operator-() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  std::string str() const;
  // Accepts rational text plus "inf", "+inf", "-inf".
  static std::optional<ExtRational> parse(std::string_view text);

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

}  // namespace restheory
