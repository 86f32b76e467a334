#include "coisocap/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace coisocap {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw OverflowError("integer out of range in '" + std::string(whole) + "'");
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_i128(num, den);
}

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) throw OutOfRange("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow_i128(num);
  r.den_ = narrow_i128(den);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw OutOfRange("division by zero rational");
  return Rational::from_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw OverflowError("negating INT64_MIN");
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  return Rational(parse_int(trim(s.substr(0, slash)), text), parse_int(trim(s.substr(slash + 1)), text));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_negative() || b.is_negative()) throw OutOfRange("rational_gcd expects nonnegative arguments");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t g = std::gcd(a.num(), b.num());
  __int128 l = static_cast<__int128>(a.den() / std::gcd(a.den(), b.den())) * b.den();
  return Rational(g, narrow_i128(l));
}

RatPi::RatPi(Rational v) : value_(v) {
  if (v.is_negative()) throw OutOfRange("area must be nonnegative, got " + v.to_string());
}

RatPi RatPi::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty area");

  auto p = s.find("pi");
  if (p == std::string::npos) return RatPi(Rational::parse(s));
  // <coef>[*]pi[/<den>]
  std::string coef = s.substr(0, p);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  std::string rest = s.substr(p + 2);
  Rational value = coef.empty() ? Rational(1) : Rational::parse(coef);
  if (!rest.empty()) {
    if (rest.front() != '/') throw ParseError("malformed area '" + std::string(text) + "'");
    value = value / Rational::parse(rest.substr(1));
  }
  return RatPi(value);
}

std::string RatPi::to_string() const {
  if (value_.is_zero()) return "0";
  std::string s = value_.num() == 1 ? "pi" : std::to_string(value_.num()) + "pi";
  if (value_.den() != 1) s += "/" + std::to_string(value_.den());
  return s;
}

const RatPi& ExtRat::value() const {
  if (!value_) throw OutOfRange("value() on infinite ExtRat");
  return *value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() <=> b.is_inf();
  return *a.value_ <=> *b.value_;
}

}  // namespace coisocap
