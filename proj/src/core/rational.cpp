#include "spectra/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
  if (denominator == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  __int128 g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  if (abs128(numerator) > kMax || denominator > kMax) {
    fail(ErrorCode::OrderOverflow, "rational does not fit in 64 bits");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_counts(std::uint64_t favorable, std::uint64_t total) {
  return from_wide(static_cast<__int128>(favorable), static_cast<__int128>(total));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& rhs) const {
  return from_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                   static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
  return from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  return from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const noexcept {
  return static_cast<__int128>(num_) * rhs.den_ <=> static_cast<__int128>(rhs.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace spectra
