#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace iflin {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so equality is
/// structural. Intermediate products use 128-bit integers; results that do
/// not fit in 64 bits raise std::overflow_error. The library only ever adds
/// or subtracts values that were parsed from short decimals, so this never
/// triggers in practice.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by intent
  Rational(std::int64_t n, std::int64_t d);

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// Whether the value has a terminating decimal expansion.
  bool is_decimal() const;

  /// Shortest exact decimal ("0.7", "1", "0.125") when the expansion
  /// terminates, otherwise "p/q".
  std::string to_string() const;

  /// Parses a decimal literal ("0.35", "1", ".5", "-0.2") or a fraction
  /// ("7/10"). Throws MalformedScalar on syntax errors. At most
  /// `max_fraction_digits` digits are accepted after the point.
  static Rational parse(std::string_view text, int max_fraction_digits = 6);

 private:
  struct Reduced {};
  constexpr Rational(Reduced, std::int64_t n, std::int64_t d) : num_(n), den_(d) {}
  static Rational normalized(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace iflin
