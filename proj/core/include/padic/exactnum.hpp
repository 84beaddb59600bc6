#pragma once

// Exact integers and rationals (GMP-backed) and p-adic valuations.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padic {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer of arbitrary length.
/// Throws ParseError.
BigInt parse_bigint(std::string_view text);

/// Exact rational number, always in lowest terms with a positive
/// denominator. Unlike a raw mpq_class, no constructor can produce a
/// non-canonical value.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(InvalidArgument) if `den` is zero.
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts `a`, `-a`, `+a`, `a/b` (b > 0) with digits of any length.
  static BigRational parse(std::string_view text);

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }
  const mpq_class& raw() const { return value_; }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws Error(InvalidArgument) on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// `n` or `n/d`, matching the accepted literal format.
  std::string to_string() const;

 private:
  explicit BigRational(mpq_class raw) : value_(std::move(raw)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigRational abs(const BigRational& q);

/// ord_p value: a finite integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Precondition: is_finite().
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  /// +inf absorbs. Finite overflow throws std::overflow_error.
  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend Valuation operator-(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  constexpr Valuation() : infinite_(true) {}
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Deterministic Miller-Rabin for |n| < 2^64; GMP's probabilistic test
/// (BPSW plus 40 Miller-Rabin witnesses) beyond that.
bool is_prime(const BigInt& n);

/// A value that passed the primality check. Constructing one is the only
/// place primality is verified; everything downstream trusts it.
class Prime {
 public:
  /// Throws Error(NotPrime).
  explicit Prime(const BigInt& value);
  explicit Prime(long value) : Prime(BigInt(value)) {}

  /// Parses a decimal literal and validates it.
  static Prime parse(std::string_view text);

  const BigInt& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

 private:
  BigInt value_;
};

/// Largest e with p^e | n; +inf for n = 0.
Valuation ord(const BigInt& n, const Prime& p);
/// ord(num) - ord(den); +inf for q = 0.
Valuation ord(const BigRational& q, const Prime& p);

BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace padic
