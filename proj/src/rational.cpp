#include "rankone/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace rankone {

namespace {

using wide = __int128;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits(num) || !fits(den)) throw ArithmeticOverflow("rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), Raw{});
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = trim(text.substr(1, text.size() - 2));
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t n = parse_int(trim(text.substr(0, slash)));
  std::int64_t d = parse_int(trim(text.substr(slash + 1)));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) throw std::domain_error("expected an integer, got " + str());
  return num_;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("rational overflow");
  return Rational(-num_, den_, Raw{});
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out;
    if (__builtin_add_overflow(num_, rhs.num_, &out)) throw ArithmeticOverflow("rational overflow");
    num_ = out;
    return *this;
  }
  wide g = wide_gcd(den_, rhs.den_);
  wide num = wide(num_) * (rhs.den_ / g) + wide(rhs.num_) * (den_ / g);
  wide den = wide(den_) * (rhs.den_ / g);
  return *this = from_wide(num, den);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out;
    if (__builtin_mul_overflow(num_, rhs.num_, &out)) throw ArithmeticOverflow("rational overflow");
    num_ = out;
    return *this;
  }
  return *this = from_wide(wide(num_) * rhs.num_, wide(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  return *this = from_wide(wide(num_) * rhs.den_, wide(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  wide l = wide(lhs.num_) * rhs.den_;
  wide r = wide(rhs.num_) * lhs.den_;
  return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rankone
