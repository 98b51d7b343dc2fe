#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spectra {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every probability and spectrum value is a Rational. Arithmetic widens to
/// 128 bits internally and throws OrderOverflow if a reduced result no longer
/// fits in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// favorable / total for unsigned counts (total > 0).
  static Rational from_counts(std::uint64_t favorable, std::uint64_t total);

  /// Parses "p/q" or "p".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;
  Rational operator-() const;

  bool operator==(const Rational& rhs) const noexcept = default;
  std::strong_ordering operator<=>(const Rational& rhs) const noexcept;

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace spectra
