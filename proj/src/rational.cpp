#include "iflin/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "iflin/errors.hpp"

namespace iflin {
namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::normalized(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(Reduced{}, narrow(n), narrow(d));
}

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
  if (s.size() > 18) {
    throw MalformedScalar("number too long: '" + std::string(whole) + "'");
  }
  std::int64_t v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  *this = normalized(n, d);
}

Rational Rational::operator-() const { return normalized(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::normalized(static_cast<__int128>(a.num_) * b.den_ +
                  static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

bool Rational::is_decimal() const {
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string Rational::to_string() const {
  if (!is_decimal()) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  std::string out;
  __int128 n = num_;
  if (n < 0) {
    out += '-';
    n = -n;
  }
  const __int128 d = den_;
  out += std::to_string(static_cast<std::int64_t>(n / d));
  __int128 rem = n % d;
  if (rem == 0) return out;
  out += '.';
  while (rem != 0) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / d));
    rem %= d;
  }
  return out;
}

Rational Rational::parse(std::string_view text, int max_fraction_digits) {
  const std::string_view whole = text;
  auto bad = [&](const char* why) {
    return MalformedScalar(std::string(why) + ": '" + std::string(whole) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw bad("empty number");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (p.empty() || q.empty() || !all_digits(p) || !all_digits(q))
      throw bad("malformed fraction");
    const std::int64_t den = parse_digits(q, whole);
    if (den == 0) throw bad("zero denominator");
    const std::int64_t num = parse_digits(p, whole);
    return Rational(negative ? -num : num, den);
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (frac_part.empty()) throw bad("missing digits after decimal point");
  }
  if (int_part.empty() && frac_part.empty()) throw bad("missing digits");
  if (!all_digits(int_part) || !all_digits(frac_part))
    throw bad("invalid character in number");
  if (static_cast<int>(frac_part.size()) > max_fraction_digits)
    throw bad("too many fractional digits");

  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
  const std::int64_t fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
  const __int128 num = static_cast<__int128>(ip) * den + fp;
  return normalized(negative ? -num : num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace iflin
