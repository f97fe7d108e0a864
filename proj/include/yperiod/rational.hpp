#pragma once

/**
 * Exact rational numbers on top of GMP.
 *
 * A Rational is always canonical: the denominator is strictly positive,
 * gcd(|num|, den) = 1 and zero is stored as 0/1. Every operation returns a
 * canonical value, so structural equality is numeric equality.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>

namespace yperiod {

// Seeded generator used for every sampled value in the project.
using Rng = std::mt19937_64;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers are rationals
  Rational(long num, long den);

  // Canonical form of num/den. Throws ZeroDenominator if den == 0.
  static Rational normalize(const mpz_class& num, const mpz_class& den);
  // Parses two decimal strings. Throws ZeroDenominator or std::invalid_argument.
  static Rational parse(std::string_view num, std::string_view den);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  // 1/x. Throws DivisionByZero for zero.
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or "p" when q == 1.
  std::string to_string() const;

  // Total bit length of numerator and denominator; a cheap size measure.
  std::size_t bit_size() const;

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

enum class ArithOp { Add, Sub, Mul, Div };

// Dispatching form of the four field operations.
Rational arith(ArithOp op, const Rational& a, const Rational& b);

// p/q with p and q independently uniform in [1, bound].
Rational sample_positive(Rng& rng, std::uint32_t bound);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace yperiod

template <>
struct std::hash<yperiod::Rational> {
  std::size_t operator()(const yperiod::Rational& q) const noexcept { return q.hash(); }
};
