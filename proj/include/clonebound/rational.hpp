#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace clonebound {

// Exact rational with 64-bit parts, always in lowest terms with den > 0.
// Overflow is not checked; the values handled here have tiny denominators.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Exact square root when both parts are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& r);

// Parses "p/q" fractions or decimal literals ("0.25", "-1e-3"). Throws
// std::invalid_argument on anything else, including trailing garbage.
double parse_number(std::string_view text);

}  // namespace clonebound
