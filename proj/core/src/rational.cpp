#include "restheory/rational.hpp"

#include "restheory/errors.hpp"

#include <cctype>

namespace restheory {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) return std::nullopt;
  const boost::multiprecision::cpp_int num{std::string(num_text)};
  const boost::multiprecision::cpp_int den{std::string(den_text)};
  if (den == 0) return std::nullopt;
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

ExtRational::ExtRational(long long num, long long den) : kind_(Kind::Finite) {
  if (den == 0) throw Error(ErrorKind::BadParameters, "zero denominator");
  value_ = Rational(num, den);
}

const Rational& ExtRational::value() const {
  if (kind_ != Kind::Finite) throw Error(ErrorKind::BadParameters, "value() of an infinite ExtRational");
  return value_;
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return ExtRational(Rational(-value_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRational::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  using K = ExtRational::Kind;
  const auto rank = [](K k) { return k == K::NegInf ? 0 : (k == K::Finite ? 1 : 2); };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (a.kind_ != K::Finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return format_rational(value_);
}

std::optional<ExtRational> ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  if (auto q = parse_rational(text)) return ExtRational(*q);
  return std::nullopt;
}

}  // namespace restheory
